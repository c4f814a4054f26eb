#include <doctest.h>

#include <fstream>

#include "sfc/catalog.hpp"
#include "sfc/io.hpp"

using namespace sfc;

namespace {

std::string location_of(const std::string& text) {
  try {
    parse_category(text);
  } catch (const SchemaError& e) {
    return e.location();
  }
  return "<no error>";
}

const char* kHeader = R"("format_version":"sfc-1","kind":"fusion","labels":["1","a"],"unit":"1",)";

std::string z2_with(const std::string& mult) { return std::string("{") + kHeader + "\"mult\":" + mult + "}"; }

}  // namespace

TEST_CASE("scalar JSON round-trip") {
  for (const Cyclotomic& x : {Cyclotomic(0), Cyclotomic(-7), Cyclotomic(Rational(3, 4)), root_of_unity(4, 1),
                              root_of_unity(8, 1) + root_of_unity(3, 1), -root_of_unity(12, 5)}) {
    CHECK(scalar_from_json(scalar_to_json(x)) == x);
  }
  CHECK(scalar_to_json(Cyclotomic(5)) == nlohmann::json(5));
  const Cyclotomic big(Rational("123456789012345678901234567890"));
  CHECK(scalar_to_json(big).is_string());
  CHECK(scalar_from_json(scalar_to_json(big)) == big);
  CHECK(scalar_from_json(nlohmann::json::parse(R"({"order":4,"coeffs":[[0,1],[1,1]]})")) == root_of_unity(4, 1));
}

TEST_CASE("catalog entries round-trip byte for byte") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> entries{
      {"vec", {"3", "1"}}, {"z2-supercocycle", {}}, {"z2-super", {}}, {"z4-super", {}}, {"z2xz2-super", {}},
      {"z2-super-bosonic", {}}, {"z3-super-bosonic", {}}, {"ising-fusion", {}}, {"ising", {}},
      {"ck-fusion", {"4"}}, {"ck", {"6"}}};
  for (const auto& [name, params] : entries) {
    CAPTURE(name);
    const CategoryFile e = catalog_entry(name, params);
    const std::string text = serialize_category(e);
    const CategoryFile back = parse_category(text);
    CHECK(back == e);
    CHECK(serialize_category(back) == text);
  }
}

TEST_CASE("save and load through a file") {
  const CategoryFile e = catalog_entry("z2-super");
  const std::string path = "io_roundtrip.json";
  save_category(e, path);
  CHECK(load_category(path) == e);
  CHECK_THROWS_AS(load_category("does/not/exist.json"), SchemaError);
}

TEST_CASE("schema errors carry a location") {
  CHECK(location_of("{not json") == "");
  CHECK(location_of("[]") == "");
  CHECK(location_of(R"({"format_version":"sfc-2","kind":"fusion"})") == "/format_version");
  CHECK(location_of(R"({"format_version":"sfc-1","kind":"weird"})") == "/kind");
  CHECK(location_of(z2_with("[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0]]")) == "/mult/3");
  CHECK(location_of(z2_with("[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,5,1]]")) == "/mult/3/2");
  CHECK(location_of(z2_with("[[0,0,0,1],[0,0,0,1]]")) == "/mult/1");
  CHECK(location_of(z2_with("[[0,0,0,1]],\"parities\":[]")) == "/parities");
  CHECK(location_of(R"({"format_version":"sfc-1","kind":"fusion","labels":["1",2],"unit":"1","mult":[]})") ==
        "/labels/1");
  CHECK(location_of(R"({"format_version":"sfc-1","kind":"fusion","labels":["1"],"unit":"b","mult":[]})") == "/unit");
  CHECK(location_of(R"({"format_version":"sfc-1","kind":"fusion","labels":["1"],"unit":"1"})") == "/mult");
}

TEST_CASE("valid documents parse") {
  const CategoryFile f = parse_category(z2_with("[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]"));
  CHECK(f.kind == Kind::fusion);
  REQUIRE(f.fusion.has_value());
  CHECK(f.fusion->N(1, 1, 0) == 1);
  CHECK(validate_fusion(*f.fusion).passed());
}

TEST_CASE("checked-in fixtures load") {
  for (const char* name : {"z2_super", "z2_super_flipped", "z2_supercocycle", "z2_supercocycle_trivial", "ising",
                           "z2_pentagon_two"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_category(std::string(SFC_FIXTURES) + "/" + name + ".json"));
  }
  CHECK_THROWS_AS(load_category(std::string(SFC_FIXTURES) + "/malformed.json"), SchemaError);
  CHECK_THROWS_AS(load_category(std::string(SFC_FIXTURES) + "/wrong_version.json"), SchemaError);
}

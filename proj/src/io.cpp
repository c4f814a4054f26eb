#include "sfc/io.hpp"

#include <climits>
#include <fstream>
#include <set>
#include <sstream>

namespace sfc {

using nlohmann::json;

std::string to_string(Kind k) {
  switch (k) {
    case Kind::fusion: return "fusion";
    case Kind::superfusion: return "superfusion";
    case Kind::group_cocycles: return "group+cocycles";
  }
  return "";
}

std::optional<Kind> parse_kind(const std::string& s) {
  if (s == "fusion") return Kind::fusion;
  if (s == "superfusion") return Kind::superfusion;
  if (s == "group+cocycles") return Kind::group_cocycles;
  return std::nullopt;
}

const FusionData& CategoryFile::rules() const {
  if (super) return super->base();
  if (fusion) return *fusion;
  throw StructureError("category file has no fusion rules");
}

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j, const std::string& loc) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw SchemaError(loc, "expected a decimal integer string");
    return mpz_class(s);
  }
  throw SchemaError(loc, "expected an integer");
}

int small_int(const json& j, const std::string& loc, int lo, int hi) {
  if (!j.is_number_integer()) throw SchemaError(loc, "expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi)
    throw SchemaError(loc, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const json& require_array(const json& j, const std::string& loc, std::size_t size = SIZE_MAX) {
  if (!j.is_array()) throw SchemaError(loc, "expected an array");
  if (size != SIZE_MAX && j.size() != size) throw SchemaError(loc, "expected " + std::to_string(size) + " elements");
  return j;
}

std::string at(const std::string& loc, std::size_t x) { return loc + "/" + std::to_string(x); }

struct Reader {
  const json& root;

  const json* get(const char* key) const {
    auto it = root.find(key);
    return it == root.end() ? nullptr : &*it;
  }
  const json& need(const char* key) const {
    const json* j = get(key);
    if (!j) throw SchemaError("/" + std::string(key), "required field is missing");
    return *j;
  }
};

std::vector<std::string> read_labels(const json& j) {
  require_array(j, "/labels");
  if (j.empty()) throw SchemaError("/labels", "label list is empty");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t x = 0; x < j.size(); ++x) {
    if (!j[x].is_string()) throw SchemaError(at("/labels", x), "label must be a string");
    if (!seen.insert(j[x].get<std::string>()).second) throw SchemaError(at("/labels", x), "duplicate label");
    labels.push_back(j[x].get<std::string>());
  }
  return labels;
}

int label_index(const std::vector<std::string>& labels, const json& j, const std::string& loc) {
  if (!j.is_string()) throw SchemaError(loc, "expected a label string");
  for (std::size_t x = 0; x < labels.size(); ++x)
    if (labels[x] == j.get<std::string>()) return static_cast<int>(x);
  throw SchemaError(loc, "unknown label '" + j.get<std::string>() + "'");
}

FusionData read_rules(const Reader& r) {
  std::vector<std::string> labels = read_labels(r.need("labels"));
  const int rank = static_cast<int>(labels.size());
  const int unit = label_index(labels, r.need("unit"), "/unit");
  const json& mult = require_array(r.need("mult"), "/mult");
  std::map<MultiplicityKey, int> m;
  for (std::size_t x = 0; x < mult.size(); ++x) {
    const std::string loc = at("/mult", x);
    const json& rec = require_array(mult[x], loc, 4);
    MultiplicityKey key{};
    for (std::size_t c = 0; c < 3; ++c) key[c] = small_int(rec[c], at(loc, c), 0, rank - 1);
    const int n = small_int(rec[3], at(loc, 3), 1, INT_MAX);
    if (!m.emplace(key, n).second) throw SchemaError(loc, "duplicate multiplicity record");
  }
  try {
    return FusionData(std::move(labels), unit, m);
  } catch (const StructureError& e) {
    throw SchemaError("/mult", e.what());
  }
}

SuperFusionData read_super(const Reader& r) {
  FusionData base = read_rules(r);
  const int rank = base.rank();
  const json& types_j = r.need("object_types");
  if (!types_j.is_object()) throw SchemaError("/object_types", "expected an object");
  std::vector<ObjectType> types(static_cast<std::size_t>(rank));
  std::vector<bool> set(static_cast<std::size_t>(rank), false);
  for (const auto& [name, v] : types_j.items()) {
    const std::string loc = "/object_types/" + name;
    const auto idx = base.find_label(name);
    if (!idx) throw SchemaError(loc, "unknown label '" + name + "'");
    if (v != "bosonic" && v != "majorana") throw SchemaError(loc, "expected \"bosonic\" or \"majorana\"");
    types[static_cast<std::size_t>(*idx)] = v == "majorana" ? ObjectType::majorana : ObjectType::bosonic;
    set[static_cast<std::size_t>(*idx)] = true;
  }
  for (int i = 0; i < rank; ++i)
    if (!set[static_cast<std::size_t>(i)])
      throw SchemaError("/object_types", "no type for label '" + base.labels()[static_cast<std::size_t>(i)] + "'");
  const json& par = require_array(r.need("parities"), "/parities");
  std::map<Quadruple, Bit> parities;
  for (std::size_t x = 0; x < par.size(); ++x) {
    const std::string loc = at("/parities", x);
    const json& rec = require_array(par[x], loc, 5);
    Quadruple q{small_int(rec[0], at(loc, 0), 0, rank - 1), small_int(rec[1], at(loc, 1), 0, rank - 1),
                small_int(rec[2], at(loc, 2), 0, rank - 1), small_int(rec[3], at(loc, 3), 1, INT_MAX)};
    const auto s = static_cast<Bit>(small_int(rec[4], at(loc, 4), 0, 1));
    if (!parities.emplace(q, s).second) throw SchemaError(loc, "duplicate parity record");
  }
  try {
    return SuperFusionData(std::move(base), parities, std::move(types));
  } catch (const StructureError& e) {
    throw SchemaError("/parities", e.what());
  }
}

SixJTable read_sixj(const json& j, int rank) {
  require_array(j, "/sixj");
  SixJTable table;
  for (std::size_t x = 0; x < j.size(); ++x) {
    const std::string loc = at("/sixj", x);
    const json& rec = require_array(j[x], loc, 11);
    int v[10];
    for (std::size_t c = 0; c < 10; ++c) v[c] = small_int(rec[c], at(loc, c), c < 6 ? 0 : 1, c < 6 ? rank - 1 : INT_MAX);
    const Decuple d{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    if (table.contains(d)) throw SchemaError(loc, "duplicate 6j record");
    table.set(d, scalar_from_json(rec[10], at(loc, 10)));
  }
  return table;
}

ThreeCocycle read_cubic(const json& j, const std::string& loc, int n) {
  require_array(j, loc, static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<Cyclotomic> values;
  for (std::size_t x = 0; x < j.size(); ++x) values.push_back(scalar_from_json(j[x], at(loc, x)));
  return {n, std::move(values)};
}

GroupCocycleData read_group(const Reader& r) {
  const json& g = r.need("group");
  if (!g.is_object()) throw SchemaError("/group", "expected an object");
  for (const auto& [k, v] : g.items())
    if (k != "order" && k != "product" && k != "identity") throw SchemaError("/group/" + k, "unknown field");
  if (!g.contains("order") || !g.contains("product") || !g.contains("identity"))
    throw SchemaError("/group", "requires order, product and identity");
  const int n = small_int(g["order"], "/group/order", 1, 1 << 10);
  const json& rows = require_array(g["product"], "/group/product", static_cast<std::size_t>(n));
  std::vector<int> product;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    const json& row = require_array(rows[x], at("/group/product", x), static_cast<std::size_t>(n));
    for (std::size_t y = 0; y < row.size(); ++y) product.push_back(small_int(row[y], at(at("/group/product", x), y), 0, n - 1));
  }
  const int identity = small_int(g["identity"], "/group/identity", 0, n - 1);
  std::optional<GroupTable> table;
  try {
    table.emplace(n, std::move(product), identity);
  } catch (const StructureError& e) {
    throw SchemaError("/group", e.what());
  }
  GroupCocycleData out{std::move(*table), std::nullopt, std::nullopt, std::nullopt};
  if (const json* w = r.get("omega")) {
    require_array(*w, "/omega", static_cast<std::size_t>(n));
    std::vector<Bit> bits;
    for (std::size_t x = 0; x < w->size(); ++x) {
      const json& row = require_array((*w)[x], at("/omega", x), static_cast<std::size_t>(n));
      for (std::size_t y = 0; y < row.size(); ++y)
        bits.push_back(static_cast<Bit>(small_int(row[y], at(at("/omega", x), y), 0, 1)));
    }
    out.omega.emplace(n, std::move(bits));
  }
  if (const json* s = r.get("supercocycle")) {
    if (!out.omega) throw SchemaError("/supercocycle", "a supercocycle requires omega");
    out.supercocycle = read_cubic(*s, "/supercocycle", n);
  }
  if (const json* c = r.get("cocycle")) out.cocycle = read_cubic(*c, "/cocycle", n);
  return out;
}

const std::set<std::string>& allowed_keys(Kind k) {
  static const std::set<std::string> fusion{"format_version", "kind", "labels", "unit", "mult", "sixj", "metadata"};
  static const std::set<std::string> super{"format_version", "kind", "labels", "unit", "mult", "sixj",
                                           "metadata", "object_types", "parities"};
  static const std::set<std::string> group{"format_version", "kind",         "group",   "omega",
                                           "cocycle",        "supercocycle", "metadata"};
  return k == Kind::fusion ? fusion : k == Kind::superfusion ? super : group;
}

// Arrays of records: one record per line.
std::string record_list(const json& records) {
  if (records.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t x = 0; x < records.size(); ++x) s += "    " + records[x].dump() + (x + 1 < records.size() ? ",\n" : "\n");
  return s + "  ]";
}

json sixj_records(const SixJTable& t) {
  json out = json::array();
  for (const auto& [d, v] : t.entries()) {
    json rec = d.as_vector();
    rec.push_back(scalar_to_json(v));
    out.push_back(std::move(rec));
  }
  return out;
}

json cubic_records(const ThreeCocycle& f) {
  json out = json::array();
  for (const auto& v : f.values()) out.push_back(scalar_to_json(v));
  return out;
}

}  // namespace

json scalar_to_json(const Cyclotomic& value) {
  const Cyclotomic x = value.reduced();
  if (x.is_rational()) {
    const Rational q = x.rational_value();
    if (q.get_den() == 1) return integer_to_json(q.get_num());
  }
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(json::array({integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
  return json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic scalar_from_json(const json& j, const std::string& loc) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(Rational(integer_from_json(j, loc)));
  if (!j.is_object()) throw SchemaError(loc, "expected an integer or {\"order\", \"coeffs\"}");
  for (const auto& [k, v] : j.items())
    if (k != "order" && k != "coeffs") throw SchemaError(loc + "/" + k, "unknown field");
  if (!j.contains("order") || !j.contains("coeffs")) throw SchemaError(loc, "scalar requires order and coeffs");
  const int order = small_int(j["order"], loc + "/order", 1, 1 << 16);
  const json& cj = require_array(j["coeffs"], loc + "/coeffs");
  std::vector<Rational> coeffs;
  for (std::size_t x = 0; x < cj.size(); ++x) {
    const std::string cl = at(loc + "/coeffs", x);
    const json& pair = require_array(cj[x], cl, 2);
    const mpz_class num = integer_from_json(pair[0], at(cl, 0));
    const mpz_class den = integer_from_json(pair[1], at(cl, 1));
    if (den == 0) throw SchemaError(at(cl, 1), "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Cyclotomic::from_powers(order, std::move(coeffs));
}

CategoryFile parse_category(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("", "top level must be an object");
  const Reader r{root};
  const json& version = r.need("format_version");
  if (version != kFormatVersion) throw SchemaError("/format_version", std::string("expected \"") + kFormatVersion + "\"");
  const json& kind_j = r.need("kind");
  const auto kind = kind_j.is_string() ? parse_kind(kind_j.get<std::string>()) : std::nullopt;
  if (!kind) throw SchemaError("/kind", "expected \"fusion\", \"superfusion\" or \"group+cocycles\"");
  for (const auto& [k, v] : root.items())
    if (!allowed_keys(*kind).count(k)) throw SchemaError("/" + k, "field not allowed for kind " + to_string(*kind));

  CategoryFile out;
  out.kind = *kind;
  if (*kind == Kind::fusion) out.fusion = read_rules(r);
  if (*kind == Kind::superfusion) out.super = read_super(r);
  if (*kind == Kind::group_cocycles) out.group = read_group(r);
  if (const json* s = r.get("sixj")) out.sixj = read_sixj(*s, out.rules().rank());
  if (const json* m = r.get("metadata")) {
    if (!m->is_object()) throw SchemaError("/metadata", "expected an object");
    for (const auto& [k, v] : m->items()) {
      if (!v.is_string()) throw SchemaError("/metadata/" + k, "metadata values must be strings");
      out.metadata[k] = v.get<std::string>();
    }
  }
  return out;
}

CategoryFile load_category(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_category(buf.str());
}

std::string serialize_category(const CategoryFile& file) {
  std::map<std::string, std::string> fields;
  fields["format_version"] = json(kFormatVersion).dump();
  fields["kind"] = json(to_string(file.kind)).dump();
  if (file.kind != Kind::group_cocycles) {
    const FusionData& f = file.rules();
    fields["labels"] = json(f.labels()).dump();
    fields["unit"] = json(f.labels()[static_cast<std::size_t>(f.unit())]).dump();
    json mult = json::array();
    for (const auto& [k, n] : f.multiplicities()) mult.push_back({k[0], k[1], k[2], n});
    fields["mult"] = record_list(mult);
  }
  if (file.super) {
    json types = json::object();
    for (int i = 0; i < file.super->rank(); ++i)
      types[file.super->base().labels()[static_cast<std::size_t>(i)]] = to_string(file.super->type(i));
    fields["object_types"] = types.dump();
    json par = json::array();
    for (const auto& [q, s] : file.super->parities()) par.push_back({q.i, q.j, q.m, q.alpha, s});
    fields["parities"] = record_list(par);
  }
  if (file.sixj) fields["sixj"] = record_list(sixj_records(*file.sixj));
  if (file.group) {
    const GroupTable& g = file.group->group;
    json rows = json::array();
    for (int x = 0; x < g.order(); ++x) {
      json row = json::array();
      for (int y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
      rows.push_back(std::move(row));
    }
    fields["group"] = json{{"order", g.order()}, {"identity", g.identity()}, {"product", rows}}.dump();
    if (file.group->omega) {
      json w = json::array();
      for (int x = 0; x < g.order(); ++x) {
        json row = json::array();
        for (int y = 0; y < g.order(); ++y) row.push_back((*file.group->omega)(x, y));
        w.push_back(std::move(row));
      }
      fields["omega"] = record_list(w);
    }
    if (file.group->supercocycle) fields["supercocycle"] = record_list(cubic_records(*file.group->supercocycle));
    if (file.group->cocycle) fields["cocycle"] = record_list(cubic_records(*file.group->cocycle));
  }
  if (!file.metadata.empty()) fields["metadata"] = json(file.metadata).dump();

  std::string out = "{\n";
  std::size_t x = 0;
  for (const auto& [k, v] : fields) out += "  " + json(k).dump() + ": " + v + (++x < fields.size() ? ",\n" : "\n");
  return out + "}\n";
}

void save_category(const CategoryFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("", "cannot write '" + path + "'");
  out << serialize_category(file);
  if (!out) throw SchemaError("", "write to '" + path + "' failed");
}

}  // namespace sfc

#include "sfc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "sfc/catalog.hpp"
#include "sfc/cocycles.hpp"
#include "sfc/envelope.hpp"
#include "sfc/grothendieck.hpp"
#include "sfc/io.hpp"

namespace sfc {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream s;
  for (unsigned int x = 0; x < len; ++x) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[x]);
  return s.str();
}

namespace {

// Raised for requests that do not apply to the input (exit 2).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  unsigned jobs = 1;
  std::size_t max_violations = 25;

  VerifyOptions verify() const { return {max_violations, jobs}; }
};

struct Outcome {
  std::string command;
  std::string input;
  std::string digest;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;
  // Extra JSON fields (sgr output).
  json extra = json::object();
  std::vector<std::string> extra_lines;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.passed(); });
  }
};

struct Input {
  std::string path;
  std::string digest;
  CategoryFile file;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return {path, sha256_hex(text), parse_category(text)};
}

// A check whose body threw: a failed report carrying the diagnostic.
CheckReport failed_check(const std::string& name, const std::string& why) {
  CheckReport r;
  r.name = name;
  r.total_violations = 1;
  r.violations.push_back({{}, why, std::nullopt, std::nullopt});
  return r;
}

CheckReport guarded(const std::string& name, const std::function<CheckReport()>& body) {
  try {
    return body();
  } catch (const StructureError& e) {
    return failed_check(name, std::string("structural error: ") + e.what());
  } catch (const PreconditionError& e) {
    return failed_check(name, std::string("precondition failed: ") + e.what());
  }
}

std::string render_index(const CheckReport& r, const Violation& v) {
  if (v.index.empty()) return "";
  std::string s = "(";
  for (std::size_t x = 0; x < v.index.size(); ++x) {
    if (x) s += ", ";
    if (x < r.index_names.size()) s += r.index_names[x] + "=";
    s += std::to_string(v.index[x]);
  }
  return s + ") ";
}

void print_human(const Outcome& o, std::ostream& out) {
  out << "command: " << o.command << "\n";
  if (!o.input.empty()) out << "input: " << o.input << " (sha256 " << o.digest << ")\n";
  for (const auto& line : o.extra_lines) out << line << "\n";
  for (const auto& r : o.checks) {
    out << "check " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances_checked
        << " instances, " << r.total_violations << " violations";
    if (r.missing_entries) out << ", " << r.missing_entries << " missing entries";
    out << ")\n";
    for (const auto& v : r.violations) {
      std::vector<std::string> parts;
      if (!v.detail.empty()) parts.push_back(v.detail);
      if (v.lhs) parts.push_back("lhs = " + v.lhs->to_string());
      if (v.rhs) parts.push_back("rhs = " + v.rhs->to_string());
      out << "  violation " << render_index(r, v);
      for (std::size_t x = 0; x < parts.size(); ++x) out << (x ? "; " : "") << parts[x];
      out << "\n";
    }
    if (r.total_violations > r.violations.size())
      out << "  ... " << (r.total_violations - r.violations.size()) << " more violations not shown\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  for (const auto& n : o.notes) out << "note: " << n << "\n";
  out << "result: " << (o.passed() ? "PASS" : "FAIL") << "\n";
}

json report_json(const CheckReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    json idx = json::object();
    for (std::size_t x = 0; x < v.index.size(); ++x)
      idx[x < r.index_names.size() ? r.index_names[x] : std::to_string(x)] = v.index[x];
    json jv{{"index", idx}, {"detail", v.detail}};
    if (v.lhs) jv["lhs"] = v.lhs->to_string();
    if (v.rhs) jv["rhs"] = v.rhs->to_string();
    vs.push_back(std::move(jv));
  }
  return {{"name", r.name},
          {"passed", r.passed()},
          {"instances_checked", r.instances_checked},
          {"total_violations", r.total_violations},
          {"missing_entries", r.missing_entries},
          {"violations", vs},
          {"notes", r.notes}};
}

void print_json(const Outcome& o, double elapsed_ms, std::ostream& out) {
  json checks = json::array();
  for (const auto& r : o.checks) checks.push_back(report_json(r));
  json j{{"command", o.command}, {"checks", checks}, {"notes", o.notes}, {"passed", o.passed()},
         {"elapsed_ms", elapsed_ms}};
  if (!o.input.empty()) {
    j["input"] = o.input;
    j["input_digest"] = "sha256:" + o.digest;
  }
  for (const auto& [k, v] : o.extra.items()) j[k] = v;
  out << j.dump(2) << "\n";
}

void require_kind(const CategoryFile& f, Kind k, const std::string& what) {
  if (f.kind != k) throw UsageError(what + " requires a " + to_string(k) + " file (got " + to_string(f.kind) + ")");
}

Outcome cmd_check(const std::string& which, const Input& in, const Options& opt) {
  Outcome o{"check " + which, in.path, in.digest, {}, {}, json::object(), {}};
  const CategoryFile& f = in.file;
  const VerifyOptions v = opt.verify();
  const bool all = which == "all";
  auto not_applicable = [&](const std::string& why) { throw UsageError("check " + which + ": " + why); };

  if (f.kind == Kind::fusion) {
    if (!all && which != "pentagon") not_applicable("not applicable to a fusion file");
    if (!all && !f.sixj) not_applicable("the file has no 6j table");
    if (all) o.checks.push_back(validate_fusion(*f.fusion, v));
    if (f.sixj) {
      o.checks.push_back(guarded("pentagon", [&] { return check_pentagon(*f.fusion, *f.sixj, v); }));
      if (all)
        o.checks.push_back(guarded("6j-invertibility", [&] { return check_6j_invertibility(*f.fusion, *f.sixj, v); }));
    } else {
      o.notes.push_back("no 6j table; pentagon not checked");
    }
  } else if (f.kind == Kind::superfusion) {
    if (!all && which != "super-pentagon") not_applicable("not applicable to a superfusion file");
    if (!all && !f.sixj) not_applicable("the file has no fermionic 6j table");
    if (all) {
      o.checks.push_back(validate_superfusion(*f.super, v));
      o.checks.push_back(guarded("classification", [&] {
        const Classification c = classify_objects(*f.super);
        CheckReport r;
        r.name = "classification";
        r.instances_checked = c.types.size();
        r.notes.push_back(std::to_string(c.bosonic) + " Bosonic, " + std::to_string(c.majorana) + " Majorana");
        return r;
      }));
    }
    if (f.sixj) {
      if (all) o.checks.push_back(guarded("parity-support", [&] { return check_support(*f.super, *f.sixj, v); }));
      o.checks.push_back(guarded("super-pentagon", [&] { return check_super_pentagon(*f.super, *f.sixj, v); }));
    } else {
      o.notes.push_back("no fermionic 6j table; super pentagon not checked");
    }
  } else {
    const GroupCocycleData& g = *f.group;
    const bool want2 = all || which == "cocycle2", want3 = all || which == "cocycle3";
    const bool want_super = all || which == "supercocycle";
    if (!want2 && !want3 && !want_super) not_applicable("not applicable to a group+cocycles file");
    if (!all && want2 && !g.omega) not_applicable("the file has no omega");
    if (!all && want3 && !g.cocycle) not_applicable("the file has no cocycle");
    if (!all && want_super && !g.supercocycle) not_applicable("the file has no supercocycle");
    if (want2 && g.omega) o.checks.push_back(guarded("cocycle2", [&] { return check_2cocycle(g.group, *g.omega, v); }));
    if (want_super && g.supercocycle)
      o.checks.push_back(guarded("supercocycle", [&] {
        return check_supercocycle(g.group, {*g.omega, *g.supercocycle}, v);
      }));
    if (want3 && g.cocycle) o.checks.push_back(guarded("cocycle3", [&] { return check_3cocycle(g.group, *g.cocycle, v); }));
    if (o.checks.empty()) o.notes.push_back("group table is valid; no cocycle data to check");
  }
  return o;
}

Outcome cmd_underlying(const Input& in, const std::string& out_path, const Options& opt) {
  require_kind(in.file, Kind::superfusion, "underlying");
  Outcome o{"underlying", in.path, in.digest, {}, {}, json::object(), {}};
  const SuperFusionData& data = *in.file.super;
  const VerifyOptions v = opt.verify();
  CategoryFile result;
  result.kind = Kind::fusion;
  result.fusion = underlying_fusion_rules(data);
  result.metadata["construction"] = "underlying fusion category";
  result.metadata["source_sha256"] = in.digest;
  if (in.file.sixj) {
    try {
      result.sixj = lift_6j(data, *in.file.sixj, v);
    } catch (const PreconditionError& e) {
      o.checks.push_back(failed_check("lift", std::string("precondition failed: ") + e.what()));
      o.notes.push_back("no output written");
      return o;
    } catch (const StructureError& e) {
      o.checks.push_back(failed_check("lift", std::string("structural error: ") + e.what()));
      o.notes.push_back("no output written");
      return o;
    }
  } else {
    o.notes.push_back("no 6j table in input; wrote labels and fusion rules only");
  }
  save_category(result, out_path);
  o.notes.push_back("wrote " + out_path);

  // Re-verify the written artifact, not the in-memory value.
  const CategoryFile written = load_category(out_path);
  o.checks.push_back(validate_fusion(*written.fusion, v));
  if (written.sixj) o.checks.push_back(guarded("pentagon", [&] { return check_pentagon(*written.fusion, *written.sixj, v); }));
  std::string labels;
  for (const auto& l : written.fusion->labels()) labels += (labels.empty() ? "" : " ") + l;
  o.extra_lines.push_back("labels: " + labels);
  o.extra["labels"] = written.fusion->labels();
  return o;
}

Outcome cmd_lift_cocycle(const Input& in, const std::string& out_path, const Options& opt) {
  require_kind(in.file, Kind::group_cocycles, "lift-cocycle");
  const GroupCocycleData& g = *in.file.group;
  if (!g.omega || !g.supercocycle) throw UsageError("lift-cocycle requires omega and supercocycle");
  Outcome o{"lift-cocycle", in.path, in.digest, {}, {}, json::object(), {}};
  const VerifyOptions v = opt.verify();
  const SuperCocycle sc{*g.omega, *g.supercocycle};
  std::optional<LiftedCocycle> lifted;
  try {
    lifted = lift_supercocycle(g.group, sc, v);
  } catch (const PreconditionError& e) {
    o.checks.push_back(failed_check("lift", std::string("precondition failed: ") + e.what()));
    o.notes.push_back("no output written");
    return o;
  } catch (const StructureError& e) {
    o.checks.push_back(failed_check("lift", std::string("structural error: ") + e.what()));
    o.notes.push_back("no output written");
    return o;
  }
  CategoryFile result;
  result.kind = Kind::group_cocycles;
  result.group = GroupCocycleData{lifted->extension, std::nullopt, std::nullopt, lifted->cocycle};
  result.metadata["construction"] = "lift of a 3-supercocycle to the central extension; element (g,a) at index 2g+a";
  result.metadata["source_sha256"] = in.digest;
  save_category(result, out_path);
  o.notes.push_back("wrote " + out_path);

  const CategoryFile written = load_category(out_path);
  o.checks.push_back(guarded("cocycle3", [&] { return check_3cocycle(written.group->group, *written.group->cocycle, v); }));
  CheckReport restriction;
  restriction.name = "restriction";
  restriction.index_names = {"g", "h", "k"};
  ViolationCollector bad(v.max_violations);
  const ThreeCocycle r = restrict_to_grade_zero(*written.group->cocycle);
  const int n = g.group.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++restriction.instances_checked;
        if (!(r(a, b, c) == sc.values(a, b, c)))
          bad.add({{a, b, c}, "F(g^0,h^0,k^0) differs from F~(g,h,k)", r(a, b, c), sc.values(a, b, c)});
      }
  bad.write_to(restriction);
  o.checks.push_back(restriction);
  return o;
}

Outcome cmd_extend_group(const Input& in, const std::string& out_path) {
  require_kind(in.file, Kind::group_cocycles, "extend-group");
  const GroupCocycleData& g = *in.file.group;
  if (!g.omega) throw UsageError("extend-group requires omega");
  Outcome o{"extend-group", in.path, in.digest, {}, {}, json::object(), {}};
  std::optional<CentralExtension> ext;
  try {
    ext = central_extension(g.group, *g.omega);
  } catch (const PreconditionError& e) {
    o.checks.push_back(failed_check("extension", std::string("precondition failed: ") + e.what()));
    o.notes.push_back("no output written");
    return o;
  }
  if (!ext->normalized_input) o.notes.push_back("omega was not normalized; shifted by the constant coboundary omega(e,e)");
  CategoryFile result;
  result.kind = Kind::group_cocycles;
  result.group = GroupCocycleData{ext->group, std::nullopt, std::nullopt, std::nullopt};
  result.metadata["construction"] = "central extension by Z/2; element (g,a) at index 2g+a";
  result.metadata["omega_normalized_input"] = ext->normalized_input ? "true" : "false";
  result.metadata["source_sha256"] = in.digest;
  save_category(result, out_path);
  o.notes.push_back("wrote " + out_path);
  // Loading re-validates the group axioms; then (g,a)(h,b) must project to
  // gh and the grade subgroup {e^0, e^1} must be central.
  const CategoryFile written = load_category(out_path);
  const GroupTable& e = written.group->group;
  CheckReport ext_check;
  ext_check.name = "extension";
  ext_check.index_names = {"x", "y"};
  ViolationCollector bad(VerifyOptions{}.max_violations);
  const int z = extension_index(g.group.identity(), 1);
  for (int x = 0; x < e.order(); ++x) {
    for (int y = 0; y < e.order(); ++y) {
      ++ext_check.instances_checked;
      if (e.mul(x, y) / 2 != g.group.mul(x / 2, y / 2)) bad.add({{x, y}, "product does not project to G", std::nullopt, std::nullopt});
    }
    if (e.mul(x, z) != e.mul(z, x)) bad.add({{x, z}, "e^1 is not central", std::nullopt, std::nullopt});
  }
  bad.write_to(ext_check);
  o.checks.push_back(ext_check);
  return o;
}

Outcome cmd_sgr(const Input& in, const Options& opt) {
  require_kind(in.file, Kind::superfusion, "sgr");
  Outcome o{"sgr", in.path, in.digest, {}, {}, json::object(), {}};
  const SGrRing ring = build_sgr_unchecked(*in.file.super);
  o.checks.push_back(ring.check_unit(opt.verify()));
  o.checks.push_back(ring.check_associativity(opt.verify()));
  std::string basis, majorana;
  json maj = json::array(), constants = json::array();
  for (int i = 0; i < ring.rank(); ++i) {
    const std::string& l = ring.labels()[static_cast<std::size_t>(i)];
    basis += (basis.empty() ? "[" : " [") + l + "]";
    if (ring.is_majorana(i)) {
      majorana += (majorana.empty() ? "[" : " [") + l + "]";
      maj.push_back(l);
    }
  }
  o.extra_lines.push_back("basis: " + basis);
  o.extra_lines.push_back("majorana: " + (majorana.empty() ? std::string("none") : majorana));
  o.extra_lines.push_back("structure constants c_{ij}^m:");
  for (int i = 0; i < ring.rank(); ++i)
    for (int j = 0; j < ring.rank(); ++j)
      for (int m = 0; m < ring.rank(); ++m) {
        const ZPi& c = ring.constant(i, j, m);
        if (c.is_zero()) continue;
        const auto& L = ring.labels();
        o.extra_lines.push_back("  " + L[static_cast<std::size_t>(i)] + " " + L[static_cast<std::size_t>(j)] + " -> " +
                                L[static_cast<std::size_t>(m)] + ": " + c.to_string());
        constants.push_back({L[static_cast<std::size_t>(i)], L[static_cast<std::size_t>(j)],
                             L[static_cast<std::size_t>(m)], c.to_string()});
      }
  const auto rel = ring.relations();
  o.extra_lines.push_back("relations:");
  for (const auto& r : rel) o.extra_lines.push_back("  " + r);
  o.extra["basis"] = ring.labels();
  o.extra["majorana"] = maj;
  o.extra["structure_constants"] = constants;
  o.extra["relations"] = rel;
  return o;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("SFC_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of fusion and superfusion category data", "sfc"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  opt.jobs = default_jobs();
  app.add_flag("--json", opt.json, "Machine-readable report on stdout");
  app.add_option("--jobs", opt.jobs, "Verification workers (default: $SFC_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--max-violations", opt.max_violations, "Violations listed per check (default 25)");

  std::string which, file, out_path, cat_name;
  std::vector<std::string> cat_params;
  auto* check = app.add_subcommand("check", "Run verification checks on a data file");
  check->add_option("which", which, "pentagon | super-pentagon | cocycle2 | cocycle3 | supercocycle | all")
      ->required()
      ->check(CLI::IsMember({"pentagon", "super-pentagon", "cocycle2", "cocycle3", "supercocycle", "all"}));
  check->add_option("file", file, "Input file")->required();
  auto* underlying = app.add_subcommand("underlying", "Build the underlying fusion category of superfusion data");
  underlying->add_option("file", file, "Input file")->required();
  underlying->add_option("-o", out_path, "Output file")->required();
  auto* lift = app.add_subcommand("lift-cocycle", "Lift a 3-supercocycle to a 3-cocycle on the central extension");
  lift->add_option("file", file, "Input file")->required();
  lift->add_option("-o", out_path, "Output file")->required();
  auto* extend = app.add_subcommand("extend-group", "Build the central extension of a group by omega");
  extend->add_option("file", file, "Input file")->required();
  extend->add_option("-o", out_path, "Output file")->required();
  auto* sgr = app.add_subcommand("sgr", "Compute the pi-Grothendieck ring of superfusion data");
  sgr->add_option("file", file, "Input file")->required();
  auto* catalog = app.add_subcommand("catalog", "Write a built-in example (\"catalog list\" lists them)");
  catalog->add_option("name", cat_name, "Entry name")->required();
  catalog->add_option("params", cat_params, "Entry parameters");
  catalog->add_option("-o", out_path, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (catalog->parsed()) {
      if (cat_name == "list") {
        for (const auto& e : catalog_list())
          out << e.name << (e.params.empty() ? "" : " " + e.params) << "  " << e.description << "\n";
        return kExitPass;
      }
      const CategoryFile entry = catalog_entry(cat_name, cat_params);
      if (out_path.empty()) {
        out << serialize_category(entry);
      } else {
        save_category(entry, out_path);
        if (!opt.json) out << "wrote " << out_path << "\n";
      }
      return kExitPass;
    }
    const Input in = read_input(file);
    Outcome o;
    if (check->parsed()) o = cmd_check(which, in, opt);
    if (underlying->parsed()) o = cmd_underlying(in, out_path, opt);
    if (lift->parsed()) o = cmd_lift_cocycle(in, out_path, opt);
    if (extend->parsed()) o = cmd_extend_group(in, out_path);
    if (sgr->parsed()) o = cmd_sgr(in, opt);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt.json)
      print_json(o, ms, out);
    else
      print_human(o, out);
    return o.passed() ? kExitPass : kExitFail;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    if (opt.json) out << json{{"command", command}, {"error", e.what()}, {"location", e.location()}}.dump(2) << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    if (opt.json) out << json{{"command", command}, {"error", e.what()}}.dump(2) << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    // Only reachable from catalog construction: a bad entry request.
    err << "error: " << e.what() << "\n";
    if (opt.json) out << json{{"command", command}, {"error", e.what()}}.dump(2) << "\n";
    return kExitInput;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    if (opt.json) out << json{{"command", command}, {"error", e.what()}}.dump(2) << "\n";
    return kExitFail;
  }
}

}  // namespace sfc

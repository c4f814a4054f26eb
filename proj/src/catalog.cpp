#include "sfc/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "sfc/envelope.hpp"
#include "sfc/grothendieck.hpp"

namespace sfc {

namespace {

std::vector<std::string> element_labels(int n) {
  std::vector<std::string> labels;
  for (int g = 0; g < n; ++g) labels.push_back(std::to_string(g));
  return labels;
}

std::string witness(const CheckReport& r) {
  if (r.violations.empty()) return "";
  std::string s = " (first at ";
  for (std::size_t x = 0; x < r.violations.front().index.size(); ++x)
    s += (x ? "," : "(") + std::to_string(r.violations.front().index[x]);
  return s + "))";
}

bool is_normalized(const GroupTable& g, const ThreeCocycle& f) {
  const int e = g.identity();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (!f(e, x, y).is_one() || !f(x, e, y).is_one() || !f(x, y, e).is_one()) return false;
  return true;
}

int parse_int(const std::string& name, const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw PreconditionError("catalog entry '" + name + "': parameter '" + s + "' is not an integer");
  return v;
}

void expect_params(const std::string& name, const std::vector<std::string>& params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi)
    throw PreconditionError("catalog entry '" + name + "' takes " + std::to_string(lo) +
                            (lo == hi ? "" : "-" + std::to_string(hi)) + " parameter(s)");
}

// Construction-time self check; a failure is an implementation fault.
void require(const CheckReport& r, const std::string& what) {
  if (!r.passed()) throw std::logic_error("catalog self-check '" + what + "' failed" + witness(r));
}

SuperCocycle z2_supercocycle() {
  TwoCocycleZ2 omega(2, {0, 0, 0, 1});
  ThreeCocycle f = ThreeCocycle::constant(2, 1);
  f.set(1, 1, 1, root_of_unity(4, 1));
  return {std::move(omega), std::move(f)};
}

CategoryFile group_file(GroupTable g, std::optional<TwoCocycleZ2> omega, std::optional<ThreeCocycle> super,
                        std::optional<ThreeCocycle> cocycle) {
  CategoryFile out;
  out.kind = Kind::group_cocycles;
  out.group = GroupCocycleData{std::move(g), std::move(omega), std::move(super), std::move(cocycle)};
  return out;
}

CategoryFile super_file(const GroupTable& g, const SuperCocycle& sc, const std::string& family) {
  auto [data, table] = pointed_superfusion(g, sc);
  CategoryFile out;
  out.kind = Kind::superfusion;
  out.super = std::move(data);
  out.sixj = std::move(table);
  out.metadata["family"] = family;
  out.metadata["omega_normalized"] = "true";
  out.metadata["sixj_normalized"] = is_normalized(g, sc.values) ? "true" : "false";
  return out;
}

std::vector<int> projection(int order, int stride, int modulus) {
  std::vector<int> phi;
  for (int x = 0; x < order; ++x) phi.push_back((x / stride) % modulus);
  return phi;
}

}  // namespace

std::pair<FusionData, SixJTable> pointed_table(const GroupTable& G, const ThreeCocycle& f) {
  if (f.order() != G.order()) throw StructureError("cocycle and group have different orders");
  const int n = G.order();
  std::map<MultiplicityKey, int> mult;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) mult[{g, h, G.mul(g, h)}] = 1;
  FusionData data(element_labels(n), G.identity(), mult);
  SixJTable table;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const int gh = G.mul(g, h), hk = G.mul(h, k);
        table.set({g, h, gh, k, G.mul(gh, k), hk, 1, 1, 1, 1}, f(g, h, k));
      }
  return {std::move(data), std::move(table)};
}

std::pair<FusionData, SixJTable> pointed_fusion(const GroupTable& g, const ThreeCocycle& tau) {
  const CheckReport r = check_3cocycle(g, tau);
  if (!r.passed())
    throw PreconditionError("tau is not a 3-cocycle: " + std::to_string(r.total_violations) + " violations" + witness(r));
  return pointed_table(g, tau);
}

std::pair<SuperFusionData, SixJTable> pointed_superfusion(const GroupTable& g, const SuperCocycle& sc) {
  const CheckReport r = check_supercocycle(g, sc);
  if (!r.passed())
    throw PreconditionError("not a 3-supercocycle: " + std::to_string(r.total_violations) + " violations" + witness(r));
  if (!is_normalized(g, sc.omega))
    throw PreconditionError("omega must be normalized (unit isomorphisms are even)");
  auto [data, table] = pointed_table(g, sc.values);
  std::map<Quadruple, Bit> parities;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) parities[{x, y, g.mul(x, y), 1}] = sc.omega(x, y);
  std::vector<ObjectType> types(static_cast<std::size_t>(g.order()), ObjectType::bosonic);
  return {SuperFusionData(std::move(data), parities, std::move(types)), std::move(table)};
}

SuperFusionData fold_over_fermion(const FusionData& base, int pi) {
  const int r = base.rank();
  if (pi < 0 || pi >= r) throw StructureError("fermion label out of range");
  auto shift = [&](int l) {
    const auto ch = base.channels(pi, l);
    if (ch.size() != 1 || ch.front().multiplicity != 1) throw StructureError("pi (x) X is not simple");
    return ch.front().target;
  };
  if (shift(pi) != base.unit()) throw StructureError("pi (x) pi is not the unit");
  std::vector<int> reps;
  std::vector<int> rep_index(static_cast<std::size_t>(r), -1);
  for (int l = 0; l < r; ++l)
    if (l <= shift(l)) {
      rep_index[static_cast<std::size_t>(l)] = static_cast<int>(reps.size());
      reps.push_back(l);
    }
  std::vector<std::string> labels;
  std::vector<ObjectType> types;
  for (int l : reps) {
    labels.push_back(base.labels()[static_cast<std::size_t>(l)]);
    types.push_back(shift(l) == l ? ObjectType::majorana : ObjectType::bosonic);
  }
  std::map<MultiplicityKey, int> mult;
  std::map<Quadruple, Bit> parities;
  const int rr = static_cast<int>(reps.size());
  for (int a = 0; a < rr; ++a)
    for (int b = 0; b < rr; ++b)
      for (int c = 0; c < rr; ++c) {
        const int i = reps[static_cast<std::size_t>(a)], j = reps[static_cast<std::size_t>(b)];
        const int l = reps[static_cast<std::size_t>(c)];
        const int even = base.N(i, j, l), odd = base.N(i, j, shift(l));
        if (even + odd == 0) continue;
        mult[{a, b, c}] = even + odd;
        for (int alpha = 1; alpha <= even + odd; ++alpha)
          parities[{a, b, c, alpha}] = alpha <= even ? 0 : 1;
      }
  FusionData rules(std::move(labels), rep_index[static_cast<std::size_t>(base.unit())], mult);
  return SuperFusionData(std::move(rules), parities, std::move(types));
}

FusionData ising_fusion() {
  // 1 = 0, pi = 1, X = 2.
  std::map<MultiplicityKey, int> mult;
  for (int x = 0; x < 3; ++x) {
    mult[{0, x, x}] = 1;
    mult[{x, 0, x}] = 1;
  }
  mult[{1, 1, 0}] = 1;
  mult[{1, 2, 2}] = 1;
  mult[{2, 1, 2}] = 1;
  mult[{2, 2, 0}] = 1;
  mult[{2, 2, 1}] = 1;
  return FusionData({"1", "pi", "X"}, 0, mult);
}

SuperFusionData ising_super() { return fold_over_fermion(ising_fusion(), 1); }

FusionData ck_fusion(int k) {
  if (k < 1) throw PreconditionError("C_k requires k >= 1");
  std::map<MultiplicityKey, int> mult;
  std::vector<std::string> labels;
  for (int i = 0; i <= k; ++i) labels.push_back("V" + std::to_string(i));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j)
      for (int l = std::max(i + j - k, 0); l <= std::min(i, j); ++l) ++mult[{i, j, i + j - 2 * l}];
  return FusionData(std::move(labels), 0, mult);
}

SuperFusionData ck_super(int k) {
  if (k < 2 || k % 4 != 2) throw PreconditionError("C_k super folding requires k = 2 mod 4 (got k = " + std::to_string(k) + ")");
  return fold_over_fermion(ck_fusion(k), k);
}

std::vector<CatalogInfo> catalog_list() {
  return {
      {"vec", "N [R]", "pointed fusion data on Z/N with the standard 3-cocycle raised to the power R (default 0)"},
      {"z2-supercocycle", "", "group data: Z/2 with omega(g,h) = gh and F~(1,1,1) = z4"},
      {"z2-super", "", "pointed superfusion data of the Z/2 supercocycle, with fermionic 6j table"},
      {"z4-super", "", "pullback of the Z/2 supercocycle along Z/4 -> Z/2, with fermionic 6j table"},
      {"z2xz2-super", "", "Z/2 supercocycle on the first factor times the sign cocycle on the second"},
      {"z2-super-bosonic", "", "Z/2 with omega = 0 and F~(1,1,1) = -1, all parities even"},
      {"z3-super-bosonic", "", "Z/3 with omega = 0 and the standard 3-cocycle, all parities even"},
      {"ising-fusion", "", "Ising fusion rules on {1, pi, X}"},
      {"ising", "", "Ising folded over pi: 1 Bosonic, X Majorana (no 6j table)"},
      {"ck-fusion", "K", "truncated Clebsch-Gordan rules on V0..VK"},
      {"ck", "K", "C_K folded over V_K, K = 2 mod 4 (no 6j table)"},
  };
}

std::vector<std::string> catalog_super_with_sixj() {
  return {"z2-super", "z4-super", "z2xz2-super", "z2-super-bosonic", "z3-super-bosonic"};
}

CategoryFile catalog_entry(const std::string& name, const std::vector<std::string>& params) {
  CategoryFile out;
  if (name == "vec") {
    expect_params(name, params, 1, 2);
    const int n = parse_int(name, params[0]);
    const int r = params.size() > 1 ? parse_int(name, params[1]) : 0;
    if (n < 1) throw PreconditionError("vec: N must be positive");
    const GroupTable g = GroupTable::cyclic(n);
    auto [data, table] = pointed_fusion(g, standard_cyclic_cocycle(n, r));
    out.kind = Kind::fusion;
    out.fusion = std::move(data);
    out.sixj = std::move(table);
    out.metadata["family"] = "pointed fusion Vec_G^tau, G = Z/" + std::to_string(n);
    require(check_pentagon(*out.fusion, *out.sixj), "pentagon");
  } else if (name == "z2-supercocycle") {
    expect_params(name, params, 0, 0);
    SuperCocycle sc = z2_supercocycle();
    out = group_file(GroupTable::cyclic(2), std::move(sc.omega), std::move(sc.values), std::nullopt);
    out.metadata["family"] = "3-supercocycle on Z/2";
    require(check_supercocycle(out.group->group, {*out.group->omega, *out.group->supercocycle}), "supercocycle");
  } else if (name == "z2-super") {
    expect_params(name, params, 0, 0);
    out = super_file(GroupTable::cyclic(2), z2_supercocycle(), "pointed superfusion, G = Z/2, omega = gh");
  } else if (name == "z4-super") {
    expect_params(name, params, 0, 0);
    const SuperCocycle base = z2_supercocycle();
    const std::vector<int> phi = projection(4, 1, 2);
    out = super_file(GroupTable::cyclic(4), {pullback(base.omega, phi), pullback(base.values, phi)},
                     "pointed superfusion, G = Z/4, pulled back from Z/2");
  } else if (name == "z2xz2-super") {
    expect_params(name, params, 0, 0);
    const GroupTable g = direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    const SuperCocycle base = z2_supercocycle();
    const std::vector<int> p1 = projection(4, 2, 2), p2 = projection(4, 1, 2);
    out = super_file(g,
                     {pullback(base.omega, p1),
                      pointwise_product(pullback(base.values, p1), pullback(standard_cyclic_cocycle(2), p2))},
                     "pointed superfusion, G = Z/2 x Z/2");
  } else if (name == "z2-super-bosonic") {
    expect_params(name, params, 0, 0);
    out = super_file(GroupTable::cyclic(2), {TwoCocycleZ2::zero(2), standard_cyclic_cocycle(2)},
                     "pointed superfusion, G = Z/2, omega = 0");
  } else if (name == "z3-super-bosonic") {
    expect_params(name, params, 0, 0);
    out = super_file(GroupTable::cyclic(3), {TwoCocycleZ2::zero(3), standard_cyclic_cocycle(3)},
                     "pointed superfusion, G = Z/3, omega = 0");
  } else if (name == "ising-fusion") {
    expect_params(name, params, 0, 0);
    out.kind = Kind::fusion;
    out.fusion = ising_fusion();
    out.metadata["family"] = "Ising fusion rules";
    require(validate_fusion(*out.fusion), "fusion rules");
  } else if (name == "ising") {
    expect_params(name, params, 0, 0);
    out.kind = Kind::superfusion;
    out.super = ising_super();
    out.metadata["family"] = "Ising folded over pi";
    out.metadata["derived"] = "multiplicities from Hom-space dimension counting of the folded Ising rules";
  } else if (name == "ck-fusion") {
    expect_params(name, params, 1, 1);
    out.kind = Kind::fusion;
    out.fusion = ck_fusion(parse_int(name, params[0]));
    out.metadata["family"] = "truncated Clebsch-Gordan rules, k = " + params[0];
    require(validate_fusion(*out.fusion), "fusion rules");
  } else if (name == "ck") {
    expect_params(name, params, 1, 1);
    out.kind = Kind::superfusion;
    out.super = ck_super(parse_int(name, params[0]));
    out.metadata["family"] = "C_k folded over V_k, k = " + params[0];
    out.metadata["derived"] = "multiplicities from folding V_i = pi V_{k-i}; folded vectors are odd";
  } else {
    throw PreconditionError("unknown catalog entry '" + name + "'");
  }

  if (out.kind == Kind::superfusion) {
    require(validate_superfusion(*out.super), "superfusion rules");
    classify_objects(*out.super);
    require(validate_fusion(underlying_fusion_rules(*out.super)), "underlying fusion rules");
    (void)build_sgr(*out.super);
    if (out.sixj) require(check_super_pentagon(*out.super, *out.sixj), "super pentagon");
  }
  return out;
}

}  // namespace sfc

#include "sfc/cocycles.hpp"

#include <string>

namespace sfc {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_order(const GroupTable& g, int order, const char* what) {
  if (order != g.order())
    throw StructureError(std::string(what) + " has order " + std::to_string(order) + " but the group has order " +
                         std::to_string(g.order()));
}

void require_nonzero(const ThreeCocycle& f) {
  const int n = f.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f(a, b, c).is_zero()) throw StructureError("cocycle value at " + triple(a, b, c) + " is zero");
}

// Shared G^4 loop; `sign(g,h,k,l)` is the exponent on the right-hand side.
template <class Sign>
CheckReport check_cocycle_identity(const GroupTable& G, const ThreeCocycle& f, const Sign& sign, std::string name,
                                   const VerifyOptions& opts) {
  CheckReport report;
  report.name = std::move(name);
  report.index_names = {"g", "h", "k", "l"};
  ViolationCollector out(opts.max_violations);
  const int n = G.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const int gh = G.mul(g, h), hk = G.mul(h, k), kl = G.mul(k, l);
          const Cyclotomic lhs = f(g, h, k) * f(g, hk, l) * f(h, k, l);
          Cyclotomic rhs = f(gh, k, l) * f(g, h, kl);
          if (sign(g, h, k, l)) rhs = -rhs;
          ++report.instances_checked;
          if (!(lhs == rhs)) out.add({{g, h, k, l}, report.name, lhs, rhs});
        }
  out.write_to(report);
  return report;
}

}  // namespace

GroupTable::GroupTable(int order, std::vector<int> product, int identity)
    : order_(order), product_(std::move(product)), identity_(identity) {
  if (order_ < 1) throw StructureError("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (product_.size() != n * n) throw StructureError("group product table must have order^2 entries");
  if (identity_ < 0 || identity_ >= order_) throw StructureError("group identity out of range");
  for (int x : product_)
    if (x < 0 || x >= order_) throw StructureError("group product entry out of range");
  for (int g = 0; g < order_; ++g)
    if (mul(identity_, g) != g || mul(g, identity_) != g)
      throw StructureError("identity law fails at " + std::to_string(g));
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      for (int k = 0; k < order_; ++k)
        if (mul(mul(g, h), k) != mul(g, mul(h, k)))
          throw StructureError("group product is not associative at " + triple(g, h, k));
  inverse_.assign(n, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h)
      if (mul(g, h) == identity_ && mul(h, g) == identity_) inverse_[static_cast<std::size_t>(g)] = h;
    if (inverse_[static_cast<std::size_t>(g)] < 0) throw StructureError("element " + std::to_string(g) + " has no inverse");
  }
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw StructureError("cyclic group order must be positive");
  std::vector<int> p(static_cast<std::size_t>(n * n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) p[static_cast<std::size_t>(g * n + h)] = (g + h) % n;
  return GroupTable(n, std::move(p), 0);
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int a = g.order(), b = h.order(), n = a * b;
  std::vector<int> p(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      p[static_cast<std::size_t>(x * n + y)] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
  return GroupTable(n, std::move(p), g.identity() * b + h.identity());
}

TwoCocycleZ2::TwoCocycleZ2(int order, std::vector<Bit> values) : order_(order), values_(std::move(values)) {
  if (order_ < 1 || values_.size() != static_cast<std::size_t>(order_ * order_))
    throw StructureError("2-cocycle table must have order^2 entries");
  for (Bit v : values_)
    if (v > 1) throw StructureError("2-cocycle values must be 0 or 1");
}

ThreeCocycle::ThreeCocycle(int order, std::vector<Cyclotomic> values) : order_(order), values_(std::move(values)) {
  if (order_ < 1 || values_.size() != static_cast<std::size_t>(order_ * order_ * order_))
    throw StructureError("3-cocycle table must have order^3 entries");
}

ThreeCocycle ThreeCocycle::constant(int order, const Cyclotomic& value) {
  return {order, std::vector<Cyclotomic>(static_cast<std::size_t>(order * order * order), value)};
}

CheckReport check_2cocycle(const GroupTable& G, const TwoCocycleZ2& w, const VerifyOptions& opts) {
  require_order(G, w.order(), "2-cocycle");
  CheckReport report;
  report.name = "cocycle2";
  report.index_names = {"g", "h", "k"};
  ViolationCollector out(opts.max_violations);
  const int n = G.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const int lhs = (w(g, h) + w(G.mul(g, h), k)) & 1;
        const int rhs = (w(h, k) + w(g, G.mul(h, k))) & 1;
        ++report.instances_checked;
        if (lhs != rhs) out.add({{g, h, k}, "2-cocycle identity mod 2", Cyclotomic(lhs), Cyclotomic(rhs)});
      }
  out.write_to(report);
  return report;
}

CheckReport check_3cocycle(const GroupTable& G, const ThreeCocycle& f, const VerifyOptions& opts) {
  require_order(G, f.order(), "3-cocycle");
  require_nonzero(f);
  return check_cocycle_identity(G, f, [](int, int, int, int) { return false; }, "cocycle3", opts);
}

CheckReport check_supercocycle(const GroupTable& G, const SuperCocycle& sc, const VerifyOptions& opts) {
  require_order(G, sc.values.order(), "supercocycle");
  const CheckReport w = check_2cocycle(G, sc.omega, opts);
  if (!w.passed()) {
    const auto& v = w.violations.front().index;
    throw PreconditionError("omega is not a 2-cocycle (fails at " + triple(v[0], v[1], v[2]) + ")");
  }
  require_nonzero(sc.values);
  const auto& omega = sc.omega;
  return check_cocycle_identity(
      G, sc.values, [&omega](int g, int h, int k, int l) { return (omega(g, h) & omega(k, l)) != 0; }, "supercocycle",
      opts);
}

bool is_normalized(const GroupTable& g, const TwoCocycleZ2& w) {
  for (int x = 0; x < g.order(); ++x)
    if (w(g.identity(), x) || w(x, g.identity())) return false;
  return true;
}

TwoCocycleZ2 normalize_2cocycle(const GroupTable& g, const TwoCocycleZ2& w) {
  const Bit shift = w(g.identity(), g.identity());
  std::vector<Bit> v = w.values();
  for (Bit& x : v) x = static_cast<Bit>(x ^ shift);
  return {w.order(), std::move(v)};
}

CentralExtension central_extension(const GroupTable& G, const TwoCocycleZ2& w) {
  const CheckReport r = check_2cocycle(G, w, {1, 1});
  if (!r.passed()) {
    const auto& v = r.violations.front().index;
    throw PreconditionError("omega is not a 2-cocycle (fails at " + triple(v[0], v[1], v[2]) +
                            "); the extension product would not be associative");
  }
  const bool normalized = is_normalized(G, w);
  TwoCocycleZ2 omega = normalized ? w : normalize_2cocycle(G, w);
  const int n = 2 * G.order();
  std::vector<int> p(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int g = x / 2, h = y / 2;
      const auto grade = static_cast<Bit>((x + y + omega(g, h)) & 1);
      p[static_cast<std::size_t>(x * n + y)] = extension_index(G.mul(g, h), grade);
    }
  return {GroupTable(n, std::move(p), extension_index(G.identity(), 0)), std::move(omega), normalized};
}

LiftedCocycle lift_supercocycle(const GroupTable& G, const SuperCocycle& sc, const VerifyOptions& opts) {
  const CheckReport r = check_supercocycle(G, sc, opts);
  if (!r.passed())
    throw PreconditionError("input is not a 3-supercocycle (" + std::to_string(r.total_violations) +
                            " violating quadruples)");
  if (!is_normalized(G, sc.omega)) throw PreconditionError("omega must be normalized: omega(e,.) = omega(.,e) = 0");
  CentralExtension ext = central_extension(G, sc.omega);
  const int n = ext.group.order();
  std::vector<Cyclotomic> values(static_cast<std::size_t>(n * n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int g = x / 2, h = y / 2, k = z / 2;
        const unsigned c = static_cast<unsigned>(z & 1);
        values[static_cast<std::size_t>((x * n + y) * n + z)] = minus_one_pow(c * sc.omega(g, h)) * sc.values(g, h, k);
      }
  return {std::move(ext.group), ThreeCocycle(n, std::move(values))};
}

ThreeCocycle restrict_to_grade_zero(const ThreeCocycle& lifted) {
  if (lifted.order() % 2 != 0) throw StructureError("lifted cocycle must live on a group of even order");
  const int n = lifted.order() / 2;
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(n * n * n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) values.push_back(lifted(extension_index(g, 0), extension_index(h, 0), extension_index(k, 0)));
  return {n, std::move(values)};
}

ThreeCocycle standard_cyclic_cocycle(int n, long r) {
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(n * n * n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const int carry = (h + k - (h + k) % n) / n;
        values.push_back(root_of_unity(n, r * g * carry));
      }
  return {n, std::move(values)};
}

ThreeCocycle coboundary(const GroupTable& G, const std::vector<Cyclotomic>& f) {
  const int n = G.order();
  if (f.size() != static_cast<std::size_t>(n * n)) throw StructureError("coboundary input must have order^2 entries");
  auto at = [&](int a, int b) -> const Cyclotomic& { return f[static_cast<std::size_t>(a * n + b)]; };
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(n * n * n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        values.push_back(at(h, k) * at(g, G.mul(h, k)) / (at(G.mul(g, h), k) * at(g, h)));
  return {n, std::move(values)};
}

ThreeCocycle pointwise_product(const ThreeCocycle& a, const ThreeCocycle& b) {
  if (a.order() != b.order()) throw StructureError("pointwise product of cocycles on different groups");
  std::vector<Cyclotomic> values;
  values.reserve(a.values().size());
  for (std::size_t x = 0; x < a.values().size(); ++x) values.push_back(a.values()[x] * b.values()[x]);
  return {a.order(), std::move(values)};
}

ThreeCocycle pullback(const ThreeCocycle& f, const std::vector<int>& phi) {
  const int n = static_cast<int>(phi.size());
  std::vector<Cyclotomic> values;
  values.reserve(static_cast<std::size_t>(n * n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        values.push_back(f(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)], phi[static_cast<std::size_t>(z)]));
  return {n, std::move(values)};
}

TwoCocycleZ2 pullback(const TwoCocycleZ2& w, const std::vector<int>& phi) {
  const int n = static_cast<int>(phi.size());
  std::vector<Bit> values;
  values.reserve(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) values.push_back(w(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]));
  return {n, std::move(values)};
}

}  // namespace sfc

#include "sfc/grothendieck.hpp"

namespace sfc {

std::string ZPi::to_string() const { return std::to_string(a) + "+" + std::to_string(b) + "*pi"; }

std::string ZPi::pretty() const {
  auto pi_term = [](long c) { return c == 1 ? std::string("pi") : c == -1 ? std::string("-pi") : std::to_string(c) + "pi"; };
  if (b == 0) return std::to_string(a);
  if (a == 0) return pi_term(b);
  return "(" + std::to_string(a) + (b > 0 ? "+" : "") + pi_term(b) + ")";
}

ZPi multiplicity(const SuperFusionData& data, int i, int j, int m) {
  ZPi out;
  const int n = data.base().N(i, j, m);
  for (int alpha = 1; alpha <= n; ++alpha) (data.parity(i, j, m, alpha) ? out.b : out.a) += 1;
  return out;
}

SGrRing::SGrRing(std::vector<std::string> labels, std::vector<bool> majorana, int unit, std::vector<ZPi> constants)
    : labels_(std::move(labels)), majorana_(std::move(majorana)), unit_(unit), constants_(std::move(constants)) {
  const auto r = labels_.size();
  if (majorana_.size() != r || constants_.size() != r * r * r || unit_ < 0 || unit_ >= rank())
    throw StructureError("inconsistent pi-Grothendieck ring dimensions");
  for (std::size_t x = 0; x < constants_.size(); ++x)
    if (majorana_[x % r]) constants_[x] = {constants_[x].a + constants_[x].b, 0};
}

SgrVector SGrRing::canonical(SgrVector x) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (majorana_[i]) x[i] = {x[i].a + x[i].b, 0};
  return x;
}

SgrVector SGrRing::basis(int i) const {
  SgrVector v(labels_.size());
  v[static_cast<std::size_t>(i)] = {1, 0};
  return v;
}

SgrVector SGrRing::multiply(const SgrVector& x, const SgrVector& y) const {
  const int r = rank();
  SgrVector out(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      const ZPi xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      if (xy.is_zero()) continue;
      for (int m = 0; m < r; ++m) out[static_cast<std::size_t>(m)] += xy * constant(i, j, m);
    }
  }
  return canonical(std::move(out));
}

CheckReport SGrRing::check_associativity(const VerifyOptions& opts) const {
  CheckReport report;
  report.name = "sgr-associativity";
  report.index_names = {"x", "y", "z", "m"};
  ViolationCollector out(opts.max_violations);
  const int r = rank();
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) {
        const SgrVector left = multiply(multiply(basis(x), basis(y)), basis(z));
        const SgrVector right = multiply(basis(x), multiply(basis(y), basis(z)));
        ++report.instances_checked;
        for (int m = 0; m < r; ++m) {
          const ZPi& a = left[static_cast<std::size_t>(m)];
          const ZPi& b = right[static_cast<std::size_t>(m)];
          if (!(a == b)) out.add({{x, y, z, m}, "([x][y])[z] = " + a.to_string() + ", [x]([y][z]) = " + b.to_string(),
                                  std::nullopt, std::nullopt});
        }
      }
  out.write_to(report);
  return report;
}

CheckReport SGrRing::check_unit(const VerifyOptions& opts) const {
  CheckReport report;
  report.name = "sgr-unit";
  report.index_names = {"x"};
  ViolationCollector out(opts.max_violations);
  for (int x = 0; x < rank(); ++x) {
    ++report.instances_checked;
    const SgrVector bx = canonical(basis(x));
    if (multiply(basis(unit_), basis(x)) != bx || multiply(basis(x), basis(unit_)) != bx)
      out.add({{x}, "[1] is not a two-sided unit on [" + labels_[static_cast<std::size_t>(x)] + "]", std::nullopt,
               std::nullopt});
  }
  out.write_to(report);
  return report;
}

std::string SGrRing::format(const SgrVector& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = x[i] == ZPi{1, 0} ? "" : x[i] == ZPi{-1, 0} ? "-" : x[i].pretty();
    out += c + "[" + labels_[i] + "]";
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> SGrRing::relations() const {
  std::vector<std::string> out;
  for (int i = 0; i < rank(); ++i)
    if (is_majorana(i)) {
      const std::string& l = labels_[static_cast<std::size_t>(i)];
      out.push_back("[" + l + "] = pi[" + l + "]");
    }
  for (int i = 0; i < rank(); ++i)
    for (int j = i; j < rank(); ++j) {
      const std::string& a = labels_[static_cast<std::size_t>(i)];
      const std::string& b = labels_[static_cast<std::size_t>(j)];
      const std::string lhs = i == j ? "[" + a + "]^2" : "[" + a + "][" + b + "]";
      out.push_back(lhs + " = " + format(multiply(basis(i), basis(j))));
    }
  return out;
}

SGrRing build_sgr_unchecked(const SuperFusionData& data) {
  const int r = data.rank();
  std::vector<bool> majorana(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) majorana[static_cast<std::size_t>(i)] = data.is_majorana(i);
  std::vector<ZPi> constants(static_cast<std::size_t>(r * r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int m = 0; m < r; ++m) {
        ZPi c = multiplicity(data, i, j, m);
        if (data.is_majorana(m)) c = {(c.a + c.b) / 2, 0};
        constants[static_cast<std::size_t>((i * r + j) * r + m)] = c;
      }
  return {data.base().labels(), std::move(majorana), data.base().unit(), std::move(constants)};
}

SGrRing build_sgr(const SuperFusionData& data) {
  SGrRing ring = build_sgr_unchecked(data);
  const CheckReport unit = ring.check_unit();
  if (!unit.passed()) throw StructureError("pi-Grothendieck ring has no unit: " + unit.violations.front().detail);
  const CheckReport assoc = ring.check_associativity();
  if (!assoc.passed())
    throw StructureError("pi-Grothendieck ring is not associative (" + std::to_string(assoc.total_violations) +
                         " violations); the superfusion rules are inconsistent");
  return ring;
}

SgrVector sgr_multiply(const SGrRing& ring, const SgrVector& x, const SgrVector& y) { return ring.multiply(x, y); }

}  // namespace sfc

#include "sfc/envelope.hpp"

#include <cassert>
#include <map>

namespace sfc {

namespace {

std::vector<Bit> grades(const SuperFusionData& data, int i) {
  if (data.is_majorana(i)) return {0};
  return {0, 1};
}

// Index of i^a in the label set, or -1 when i^a is not a label.
class LabelIndex {
public:
  explicit LabelIndex(const SuperFusionData& data) : labels_(build_label_set(data)) {
    index_.assign(static_cast<std::size_t>(data.rank()) * 2, -1);
    for (std::size_t x = 0; x < labels_.size(); ++x)
      index_[static_cast<std::size_t>(labels_[x].base) * 2 + labels_[x].grade] = static_cast<int>(x);
  }
  int operator()(int base, unsigned grade) const {
    return index_[static_cast<std::size_t>(base) * 2 + (grade & 1U)];
  }
  const std::vector<UnderlyingLabel>& labels() const { return labels_; }

private:
  std::vector<UnderlyingLabel> labels_;
  std::vector<int> index_;
};

// 1 + number of earlier base labels in the same parity class.
int relabel(const SuperFusionData& data, const Quadruple& q) {
  const Bit s = data.parity(q);
  int rank = 1;
  for (int a = 1; a < q.alpha; ++a)
    if (data.parity(q.i, q.j, q.m, a) == s) ++rank;
  return rank;
}

}  // namespace

std::vector<UnderlyingLabel> build_label_set(const SuperFusionData& data) {
  std::vector<UnderlyingLabel> out;
  for (int i = 0; i < data.rank(); ++i)
    for (Bit a : grades(data, i)) out.push_back({i, a});
  return out;
}

std::string underlying_label_name(const SuperFusionData& data, const UnderlyingLabel& label) {
  return data.base().labels()[static_cast<std::size_t>(label.base)] + "^" + std::to_string(label.grade);
}

FusionData underlying_fusion_rules(const SuperFusionData& data) {
  const LabelIndex J(data);
  std::map<MultiplicityKey, int> mult;
  for (const auto& [key, n] : data.base().multiplicities()) {
    const auto [i, j, m] = key;
    for (Bit a : grades(data, i))
      for (Bit b : grades(data, j))
        for (int alpha = 1; alpha <= n; ++alpha) {
          const int target = J(m, a + b + data.parity(i, j, m, alpha));
          if (target < 0) continue;
          ++mult[{J(i, a), J(j, b), target}];
        }
  }
  std::vector<std::string> names;
  for (const auto& l : J.labels()) names.push_back(underlying_label_name(data, l));
  return FusionData(std::move(names), J(data.base().unit(), 0), mult);
}

SixJTable lift_6j_unchecked(const SuperFusionData& data, const FermionicSixJTable& ftilde) {
  require_admissible_support(data.base(), ftilde);
  const LabelIndex J(data);
  SixJTable out;
  for (const auto& [d, value] : ftilde.entries()) {
    if (!is_parity_admissible(data, d)) {
      if (value.is_zero()) continue;
      throw StructureError("fermionic 6j entry on a decuple that is not parity admissable");
    }
    const Bit s_m = data.parity(d.first());
    const Bit s_n = data.parity(d.second());
    const Bit s_t = data.parity(d.third());
    const Bit s_phi = data.parity(d.fourth());
    const int alpha = relabel(data, d.first());
    const int beta = relabel(data, d.second());
    const int eta = relabel(data, d.third());
    const int phi = relabel(data, d.fourth());
    for (Bit a : grades(data, d.i))
      for (Bit b : grades(data, d.j))
        for (Bit c : grades(data, d.k)) {
          const unsigned gm = a + b + s_m;
          const unsigned gt = b + c + s_t;
          const unsigned gn = a + b + c + s_m + s_n;
          // Grade of n reached through t must agree (parity admissability).
          assert(((gn ^ (a + gt + s_phi)) & 1U) == 0);
          (void)s_phi;
          const int m = J(d.m, gm), t = J(d.t, gt), n = J(d.n, gn);
          if (m < 0 || t < 0 || n < 0) continue;
          out.set({J(d.i, a), J(d.j, b), m, J(d.k, c), n, t, alpha, beta, eta, phi},
                  minus_one_pow(static_cast<unsigned>(c * s_m)) * value);
        }
  }
  return out;
}

SixJTable lift_6j(const SuperFusionData& data, const FermionicSixJTable& ftilde, const VerifyOptions& opts) {
  const CheckReport support = check_support(data, ftilde, opts);
  if (!support.passed()) throw PreconditionError("fermionic 6j table has entries off the parity admissable support");
  const CheckReport super = check_super_pentagon(data, ftilde, opts);
  if (!super.passed())
    throw PreconditionError("fermionic 6j table fails the super pentagon (" + std::to_string(super.total_violations) +
                            " violations, " + std::to_string(super.missing_entries) +
                            " missing entries); the lift would not satisfy the pentagon");
  return lift_6j_unchecked(data, ftilde);
}

UnderlyingFusionCategory build_underlying(const SuperFusionData& data, const FermionicSixJTable* ftilde,
                                          const VerifyOptions& opts) {
  UnderlyingFusionCategory out{build_label_set(data), underlying_fusion_rules(data), std::nullopt};
  if (ftilde) out.sixj = lift_6j(data, *ftilde, opts);
  return out;
}

CheckReport verify_lift(const SuperFusionData& data, const FermionicSixJTable& ftilde, const VerifyOptions& opts) {
  const FusionData rules = underlying_fusion_rules(data);
  const SixJTable lifted = lift_6j(data, ftilde, opts);
  CheckReport report = check_pentagon(rules, lifted, opts);
  report.name = "lifted-pentagon";
  return report;
}

Cyclotomic envelope_tensor_sign(Bit /*a*/, Bit /*b*/, Bit /*c*/, Bit d, Bit f_parity) {
  return minus_one_pow(static_cast<unsigned>(d & f_parity));
}

}  // namespace sfc

#pragma once

// The underlying fusion category of a superfusion category.
//
// Simple objects are labelled by J = {(i, a) : a = 0 if X_i is Majorana}.
// A base basis vector e^{ij}_m(alpha) induces a morphism
// X_i^a (x) X_j^b -> X_m^{a+b+s} with s = s^{ij}_m(alpha), so each base
// quadruple splits into grade-labelled quadruples of the underlying category.
// The 6j-symbols are lifted by
//
//   F^{i^a j^b m, alpha beta}_{k^c n t, eta phi}
//       = (-1)^{c s^{ij}_m(alpha)} F~^{ijm, alpha beta}_{knt, eta phi}.

#include <optional>
#include <string>
#include <vector>

#include "sfc/fusion.hpp"
#include "sfc/superfusion.hpp"

namespace sfc {

struct UnderlyingLabel {
  int base = 0;
  Bit grade = 0;
  auto operator<=>(const UnderlyingLabel&) const = default;
};

/// i^0 and i^1 for Bosonic i, only i^0 for Majorana i; ordered by (i, a).
std::vector<UnderlyingLabel> build_label_set(const SuperFusionData& data);

/// Renders "<label>^<grade>".
std::string underlying_label_name(const SuperFusionData& data, const UnderlyingLabel& label);

/// Multiplicities over J. For Bosonic m, N^{i^a j^b}_{m^c} counts alpha with
/// s^{ij}_m(alpha) = a+b+c; for Majorana m only c = 0 exists and counts
/// alpha with s = a+b. Underlying multiplicity labels number the matching
/// base labels in increasing order.
FusionData underlying_fusion_rules(const SuperFusionData& data);

/// Materialized lift of a fermionic table onto the underlying rules. Checks
/// the parity support and the super pentagon first and throws
/// PreconditionError if either fails.
SixJTable lift_6j(const SuperFusionData& data, const FermionicSixJTable& ftilde, const VerifyOptions& opts = {});

/// Lift without the super pentagon precondition (support is still
/// required). Used for mutation experiments and by lift_6j.
SixJTable lift_6j_unchecked(const SuperFusionData& data, const FermionicSixJTable& ftilde);

struct UnderlyingFusionCategory {
  std::vector<UnderlyingLabel> labels;
  FusionData rules;
  std::optional<SixJTable> sixj;
};

/// Labels and rules always; the lifted table only when `ftilde` is given.
UnderlyingFusionCategory build_underlying(const SuperFusionData& data, const FermionicSixJTable* ftilde,
                                          const VerifyOptions& opts = {});

/// Runs the ordinary pentagon check on (underlying_fusion_rules, lift_6j).
CheckReport verify_lift(const SuperFusionData& data, const FermionicSixJTable& ftilde, const VerifyOptions& opts = {});

/// Sign (-1)^{d |f|} of f_a^b (x) g_c^d in the underlying category.
Cyclotomic envelope_tensor_sign(Bit a, Bit b, Bit c, Bit d, Bit f_parity);

}  // namespace sfc

#pragma once

// Built-in example data. Every constructor validates what it builds and
// throws PreconditionError when asked for something inconsistent.

#include <string>
#include <utility>
#include <vector>

#include "sfc/category.hpp"
#include "sfc/cocycles.hpp"
#include "sfc/fusion.hpp"
#include "sfc/superfusion.hpp"

namespace sfc {

/// Labels "0".."n-1", N^{gh}_m = delta_{m,gh}, F(g,h,k) at the decuple
/// (g, h, gh, k, ghk, hk, 1, 1, 1, 1). No validation.
std::pair<FusionData, SixJTable> pointed_table(const GroupTable& g, const ThreeCocycle& f);

/// pointed_table after check_3cocycle; refuses a non-cocycle with a witness.
std::pair<FusionData, SixJTable> pointed_fusion(const GroupTable& g, const ThreeCocycle& tau);

/// Bosonic pointed superfusion data with s(g, h, gh, 1) = omega(g, h) and
/// F~ installed like pointed_table. Requires a 3-supercocycle with
/// normalized omega.
std::pair<SuperFusionData, SixJTable> pointed_superfusion(const GroupTable& g, const SuperCocycle& sc);

/// Superfusion rules of a fusion category with a fermion pi (pi (x) pi = 1),
/// one representative per orbit {l, pi (x) l} (the smaller index). For
/// representatives i, j, l:
///   N^{ij}_l = N(i, j, l) + N(i, j, pi (x) l),
/// the first N(i, j, l) basis vectors even, the remaining ones odd. A
/// representative fixed by pi is Majorana.
SuperFusionData fold_over_fermion(const FusionData& base, int pi);

/// Ising fusion rules on {1, pi, X}.
FusionData ising_fusion();
/// Ising folded over pi: 1 Bosonic, X Majorana.
SuperFusionData ising_super();

/// Truncated Clebsch-Gordan rules on V_0..V_k:
///   V_i (x) V_j = sum_{l = max(i+j-k, 0)}^{min(i, j)} V_{i+j-2l}.
FusionData ck_fusion(int k);
/// ck_fusion(k) folded over pi = V_k. Requires k = 2 mod 4, k >= 2.
SuperFusionData ck_super(int k);

struct CatalogInfo {
  std::string name;
  std::string params;
  std::string description;
};

std::vector<CatalogInfo> catalog_list();

/// Builds the named entry. `params` are the positional parameters after the
/// name (e.g. {"6"} for "ck"). Throws PreconditionError for unknown names or
/// bad parameters.
CategoryFile catalog_entry(const std::string& name, const std::vector<std::string>& params = {});

/// Names of the entries that carry superfusion data with a fermionic 6j
/// table.
std::vector<std::string> catalog_super_with_sixj();

}  // namespace sfc

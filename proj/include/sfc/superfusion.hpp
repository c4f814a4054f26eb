#pragma once

// Superfusion data: fusion rules whose Hom spaces are superspaces with a
// homogeneous basis. Every basis vector e^{ij}_m(alpha) carries a parity
// s^{ij}_m(alpha), and every simple object is Bosonic (End = k^{1|0}) or
// Majorana (End = k^{1|1}).
//
// N^{ij}_m here is the total dimension of Hom(X_i (x) X_j, X_m), so for
// Majorana objects the ordinary unit law does not hold: N^{1X}_X = 2.

#include <map>
#include <string>
#include <vector>

#include "sfc/fusion.hpp"

namespace sfc {

enum class ObjectType { bosonic, majorana };

std::string to_string(ObjectType t);

class SuperFusionData {
public:
  /// Throws StructureError when `types` does not match the label count, a
  /// parity is given for a non-admissable quadruple or is not a bit, or an
  /// admissable quadruple has no parity.
  SuperFusionData(FusionData base, const std::map<Quadruple, Bit>& parities, std::vector<ObjectType> types);

  const FusionData& base() const { return base_; }
  int rank() const { return base_.rank(); }
  const std::vector<ObjectType>& types() const { return types_; }
  ObjectType type(int i) const { return types_[static_cast<std::size_t>(i)]; }
  bool is_majorana(int i) const { return type(i) == ObjectType::majorana; }
  /// dim End(X_i): 1 for Bosonic, 2 for Majorana.
  int end_dimension(int i) const { return is_majorana(i) ? 2 : 1; }

  const std::map<Quadruple, Bit>& parities() const { return parities_; }
  /// s^{ij}_m(alpha); the quadruple must be admissable.
  Bit parity(int i, int j, int m, int alpha) const;
  Bit parity(const Quadruple& q) const { return parity(q.i, q.j, q.m, q.alpha); }

  friend bool operator==(const SuperFusionData& a, const SuperFusionData& b) {
    return a.base_ == b.base_ && a.parities_ == b.parities_ && a.types_ == b.types_;
  }

private:
  FusionData base_;
  std::map<Quadruple, Bit> parities_;
  std::vector<ObjectType> types_;
  // Parities of (i,j,m) start at offsets_[(i*r+j)*r+m] in bits_.
  std::vector<std::size_t> offsets_;
  std::vector<Bit> bits_;
};

/// Fermionic 6j-symbols F~; same record shape as SixJTable but nonzero only
/// on parity admissable decuples.
using FermionicSixJTable = SixJTable;

/// Unit is Bosonic, Majorana parity balance, and the End-weighted versions
/// of the unit law, associativity and duality.
CheckReport validate_superfusion(const SuperFusionData& data, const VerifyOptions& opts = {});

struct Classification {
  std::vector<ObjectType> types;
  int bosonic = 0;
  int majorana = 0;
};

/// Returns the object types after cross-checking them against the parities
/// of Hom(1 (x) X_i, X_i) = End(X_i). Throws StructureError when the unit is
/// Majorana or the End data disagrees with the declared type.
Classification classify_objects(const SuperFusionData& data);

/// s(i,j,m,alpha) + s(m,k,n,beta) == s(j,k,t,eta) + s(i,t,n,phi) mod 2.
/// Throws StructureError for a non-admissable decuple.
bool is_parity_admissible(const SuperFusionData& data, const Decuple& d);

/// Lists entries that are nonzero on a decuple that is not parity
/// admissable (or not admissable at all).
CheckReport check_support(const SuperFusionData& data, const FermionicSixJTable& table,
                          const VerifyOptions& opts = {});

/// Super pentagon identity: the ordinary pentagon with the right-hand side
/// multiplied by (-1)^{s^{ij}_m(alpha) s^{kl}_q(delta)}. Throws
/// StructureError when the table has a nonzero entry off the parity
/// admissable support.
CheckReport check_super_pentagon(const SuperFusionData& data, const FermionicSixJTable& table,
                                 const VerifyOptions& opts = {});

}  // namespace sfc

#pragma once

// The pointed case: finite groups given by multiplication tables, Z/2-valued
// 2-cocycles, 3-cocycles, 3-supercocycles, the central extension G_omega and
// the supercocycle lift
//
//   F(g^a, h^b, k^c) = (-1)^{c omega(g,h)} F~(g, h, k).
//
// All checks enumerate the full G^3 or G^4 index space.

#include <cstdint>
#include <vector>

#include "sfc/report.hpp"
#include "sfc/scalars.hpp"

namespace sfc {

class GroupTable {
public:
  /// `product` is row-major: product[g * order + h] = gh. Throws
  /// StructureError unless the table is a group with the given identity.
  GroupTable(int order, std::vector<int> product, int identity);

  static GroupTable cyclic(int n);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return product_[static_cast<std::size_t>(g * order_ + h)]; }
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& product() const { return product_; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.product_ == b.product_;
  }

private:
  int order_;
  std::vector<int> product_;
  int identity_;
  std::vector<int> inverse_;
};

/// G x H with (g, h) at index g * |H| + h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// omega: G^2 -> Z/2, row-major.
class TwoCocycleZ2 {
public:
  TwoCocycleZ2(int order, std::vector<Bit> values);
  static TwoCocycleZ2 zero(int order) { return {order, std::vector<Bit>(static_cast<std::size_t>(order * order), 0)}; }

  int order() const { return order_; }
  Bit operator()(int g, int h) const { return values_[static_cast<std::size_t>(g * order_ + h)]; }
  const std::vector<Bit>& values() const { return values_; }

  friend bool operator==(const TwoCocycleZ2&, const TwoCocycleZ2&) = default;

private:
  int order_;
  std::vector<Bit> values_;
};

/// A function G^3 -> k, dense with index (g * n + h) * n + k. Used for
/// 3-cocycles and for the F~ part of a 3-supercocycle.
class ThreeCocycle {
public:
  ThreeCocycle(int order, std::vector<Cyclotomic> values);
  static ThreeCocycle constant(int order, const Cyclotomic& value);

  int order() const { return order_; }
  const Cyclotomic& operator()(int g, int h, int k) const { return values_[index(g, h, k)]; }
  void set(int g, int h, int k, Cyclotomic v) { values_[index(g, h, k)] = std::move(v); }
  const std::vector<Cyclotomic>& values() const { return values_; }

  friend bool operator==(const ThreeCocycle&, const ThreeCocycle&) = default;

private:
  std::size_t index(int g, int h, int k) const {
    return (static_cast<std::size_t>(g) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(h)) *
               static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(k);
  }

  int order_;
  std::vector<Cyclotomic> values_;
};

struct SuperCocycle {
  TwoCocycleZ2 omega;
  ThreeCocycle values;
};

/// omega(g,h) + omega(gh,k) = omega(h,k) + omega(g,hk); index (g, h, k).
CheckReport check_2cocycle(const GroupTable& g, const TwoCocycleZ2& w, const VerifyOptions& opts = {});

/// F(g,h,k) F(g,hk,l) F(h,k,l) = F(gh,k,l) F(g,h,kl); index (g, h, k, l).
/// Throws StructureError on a zero value or an order mismatch.
CheckReport check_3cocycle(const GroupTable& g, const ThreeCocycle& f, const VerifyOptions& opts = {});

/// F~(g,h,k) F~(g,hk,l) F~(h,k,l)
///     = (-1)^{omega(g,h) omega(k,l)} F~(gh,k,l) F~(g,h,kl).
/// Throws PreconditionError when omega is not a 2-cocycle and
/// StructureError on a zero value.
CheckReport check_supercocycle(const GroupTable& g, const SuperCocycle& sc, const VerifyOptions& opts = {});

/// omega(e, .) = omega(., e) = 0.
bool is_normalized(const GroupTable& g, const TwoCocycleZ2& w);

/// For a 2-cocycle, adding the constant omega(e,e) (a coboundary) yields a
/// normalized cohomologous cocycle.
TwoCocycleZ2 normalize_2cocycle(const GroupTable& g, const TwoCocycleZ2& w);

struct CentralExtension {
  /// Element (g, a) sits at index 2g + a.
  GroupTable group;
  /// The normalized cocycle actually used in the product.
  TwoCocycleZ2 omega_used;
  bool normalized_input = true;
};

/// (g, a)(h, b) = (gh, a + b + omega(g,h)). Throws PreconditionError with a
/// witness triple when omega is not a 2-cocycle.
CentralExtension central_extension(const GroupTable& g, const TwoCocycleZ2& w);

inline int extension_index(int g, Bit a) { return 2 * g + a; }

struct LiftedCocycle {
  GroupTable extension;
  ThreeCocycle cocycle;
};

/// Throws PreconditionError unless sc is a 3-supercocycle with normalized
/// omega.
LiftedCocycle lift_supercocycle(const GroupTable& g, const SuperCocycle& sc, const VerifyOptions& opts = {});

/// F restricted to grade-0 arguments, as a function on G^3.
ThreeCocycle restrict_to_grade_zero(const ThreeCocycle& lifted);

/// zeta_n^{r g (h + k - [h + k mod n]) / n} on Z/n.
ThreeCocycle standard_cyclic_cocycle(int n, long r = 1);

/// (df)(g,h,k) = f(h,k) f(g,hk) / (f(gh,k) f(g,h)) for f: G^2 -> k^x given
/// row-major.
ThreeCocycle coboundary(const GroupTable& g, const std::vector<Cyclotomic>& f);

/// Pointwise product.
ThreeCocycle pointwise_product(const ThreeCocycle& a, const ThreeCocycle& b);

/// F(phi(x), phi(y), phi(z)) for a map phi: H -> G given as a vector.
ThreeCocycle pullback(const ThreeCocycle& f, const std::vector<int>& phi);
TwoCocycleZ2 pullback(const TwoCocycleZ2& w, const std::vector<int>& phi);

}  // namespace sfc

#pragma once

// Z^pi = Z[pi]/(pi^2 - 1) and the pi-Grothendieck ring of a superfusion
// category, presented by structure constants on the classes of simple
// objects. A Majorana class satisfies [X] = pi[X], so its coefficient a + b pi
// is stored in the canonical form (a + b) + 0 pi.

#include <string>
#include <vector>

#include "sfc/report.hpp"
#include "sfc/superfusion.hpp"

namespace sfc {

struct ZPi {
  long a = 0;  // coefficient of 1
  long b = 0;  // coefficient of pi

  static ZPi pi() { return {0, 1}; }

  ZPi operator-() const { return {-a, -b}; }
  ZPi& operator+=(const ZPi& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend ZPi operator+(ZPi x, const ZPi& y) { return x += y; }
  friend ZPi operator-(ZPi x, const ZPi& y) { return x += -y; }
  friend ZPi operator*(const ZPi& x, const ZPi& y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a}; }
  friend bool operator==(const ZPi&, const ZPi&) = default;

  bool is_zero() const { return a == 0 && b == 0; }
  /// Member of the cone Z^pi_+ (a, b >= 0).
  bool is_positive() const { return a >= 0 && b >= 0; }

  /// "a+b*pi", always both terms, e.g. "1+0*pi", "2+-1*pi".
  std::string to_string() const;
  /// Compact form: "0", "1", "pi", "2pi", "(1+pi)", "(2-pi)".
  std::string pretty() const;
};

/// [X_i (x) X_j : X_m] = n0 + n1 pi with n_p the number of basis vectors of
/// parity p. Zero for non-admissable triples.
ZPi multiplicity(const SuperFusionData& data, int i, int j, int m);

using SgrVector = std::vector<ZPi>;

class SGrRing {
public:
  /// `constants[(i * r + j) * r + m]` = c_{ij}^m; canonicalized on
  /// construction.
  SGrRing(std::vector<std::string> labels, std::vector<bool> majorana, int unit, std::vector<ZPi> constants);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_majorana(int i) const { return majorana_[static_cast<std::size_t>(i)]; }
  int unit() const { return unit_; }
  const ZPi& constant(int i, int j, int m) const { return constants_[index(i, j, m)]; }

  /// Folds coefficients on Majorana classes to (a + b) + 0 pi.
  SgrVector canonical(SgrVector x) const;
  SgrVector basis(int i) const;
  SgrVector multiply(const SgrVector& x, const SgrVector& y) const;

  /// ([x][y])[z] = [x]([y][z]) on basis triples; index (x, y, z, m).
  CheckReport check_associativity(const VerifyOptions& opts = {}) const;
  /// [1][x] = [x][1] = [x] on basis elements; index (x).
  CheckReport check_unit(const VerifyOptions& opts = {}) const;

  /// Pretty sum "(1+pi)[1] + [V2]"; "0" for the zero vector.
  std::string format(const SgrVector& x) const;
  /// "[X] = pi[X]" per Majorana class, then "[A][B] = ..." for every A <= B
  /// ("[A]^2" when A = B).
  std::vector<std::string> relations() const;

private:
  std::size_t index(int i, int j, int m) const {
    const auto r = static_cast<std::size_t>(rank());
    return (static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r + static_cast<std::size_t>(m);
  }

  std::vector<std::string> labels_;
  std::vector<bool> majorana_;
  int unit_;
  std::vector<ZPi> constants_;
};

/// Structure constants from the superfusion rules. For a Bosonic target the
/// constant is multiplicity(i, j, m); for a Majorana target Hom(X_i (x) X_j,
/// X_m) is free over End(X_m) = k^{1|1}, so the constant is N^{ij}_m / 2.
SGrRing build_sgr_unchecked(const SuperFusionData& data);

/// build_sgr_unchecked followed by the unit and associativity checks;
/// throws StructureError when either fails.
SGrRing build_sgr(const SuperFusionData& data);

SgrVector sgr_multiply(const SGrRing& ring, const SgrVector& x, const SgrVector& y);

}  // namespace sfc

#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of Q(zeta_n) is stored as a rational coefficient vector in the
// power basis 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic
// polynomial. Binary operations promote both operands to the lcm of their
// orders. Values are immutable once built and safe to share across threads.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sfc {

using Rational = mpq_class;
using Bit = std::uint8_t;

class ScalarError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Cached; safe to call concurrently.
const std::vector<long>& cyclotomic_polynomial(int n);

int euler_phi(int n);

class Cyclotomic {
public:
  /// Zero.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Builds an element of Q(zeta_order) from arbitrary power-basis
  /// coefficients (any length); the vector is reduced on construction.
  static Cyclotomic from_powers(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  /// Same value expressed in Q(zeta_m); m must be a multiple of order().
  Cyclotomic promoted(int m) const;
  /// Same value expressed at the smallest order that contains it.
  Cyclotomic reduced() const;

  /// Empty for zero.
  std::optional<Cyclotomic> try_inverse() const;
  /// Throws ScalarError for zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Human-readable canonical rendering, e.g. "-1", "z4", "1/2*z8^3 + z8".
  std::string to_string() const;

private:
  Cyclotomic(int order, std::vector<Rational> reduced_coeffs);
  void drop_to_rational_if_possible();

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

/// zeta_n^k; throws ScalarError when n < 1.
Cyclotomic root_of_unity(int n, long k);

/// +1 for x = 0, -1 for x = 1 (x taken mod 2).
Cyclotomic minus_one_pow(unsigned x);

}  // namespace sfc

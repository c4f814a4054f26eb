#include "sfc/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace sfc {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces p modulo the monic integer polynomial m (in place), leaving
// exactly deg(m) coefficients.
void reduce_mod(Poly& p, const std::vector<long>& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t deg = p.size(); deg-- > d;) {
    if (p[deg] == 0) continue;
    const Rational c = p[deg];
    for (std::size_t k = 0; k <= d; ++k) p[deg - d + k] -= c * m[k];
  }
  p.resize(d);
}

// Quotient and remainder of a by b over Q; b must be nonzero after trim.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - db, Rational(0));
  for (std::size_t deg = a.size(); deg-- > db;) {
    if (a[deg] == 0) continue;
    Rational c = a[deg] / b[db];
    q[deg - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[deg - db + k] -= c * b[k];
  }
  a.resize(db);
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& m = cyclotomic_polynomial(d);
    const std::size_t dm = m.size() - 1;
    std::vector<long> q(p.size() - dm, 0);
    for (std::size_t deg = p.size(); deg-- > dm;) {
      const long c = p[deg];
      if (c == 0) continue;
      q[deg - dm] = c;
      for (std::size_t k = 0; k <= dm; ++k) p[deg - dm + k] -= c * m[k];
    }
    p = std::move(q);
  }
  return p;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Solves A x = b over Q; A is rows x cols (row-major). Empty if inconsistent.
std::optional<Poly> solve(std::vector<Poly> a, Poly b, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  Poly x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ScalarError("cyclotomic polynomial order must be positive");
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<long>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto value = std::make_unique<const std::vector<long>>(compute_cyclotomic(n));
  return *cache.emplace(n, std::move(value)).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> reduced_coeffs)
    : order_(order), coeffs_(std::move(reduced_coeffs)) {
  drop_to_rational_if_possible();
}

Cyclotomic Cyclotomic::from_powers(int order, std::vector<Rational> coeffs) {
  if (order < 1) throw ScalarError("cyclotomic order must be positive");
  Poly folded(static_cast<std::size_t>(order), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    folded[i % static_cast<std::size_t>(order)] += coeffs[i];
  }
  reduce_mod(folded, cyclotomic_polynomial(order));
  return Cyclotomic(order, std::move(folded));
}

void Cyclotomic::drop_to_rational_if_possible() {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return;
  order_ = 1;
  coeffs_.resize(1);
}

bool Cyclotomic::is_zero() const { return order_ == 1 && coeffs_[0] == 0; }
bool Cyclotomic::is_one() const { return order_ == 1 && coeffs_[0] == 1; }
bool Cyclotomic::is_rational() const { return order_ == 1; }

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw ScalarError("value is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int m) const {
  if (m % order_ != 0) throw ScalarError("promotion target must be a multiple of the order");
  if (m == order_) return *this;
  const std::size_t step = static_cast<std::size_t>(m / order_);
  Poly spread(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[(i * step) % spread.size()] = coeffs_[i];
  reduce_mod(spread, cyclotomic_polynomial(m));
  Cyclotomic out;
  out.order_ = m;
  out.coeffs_ = std::move(spread);
  return out;
}

Cyclotomic Cyclotomic::reduced() const {
  if (is_rational()) return *this;
  const int phi_n = euler_phi(order_);
  for (int d : divisors(order_)) {
    if (d <= 2 || d == order_) continue;
    const int phi_d = euler_phi(d);
    // Columns: images of zeta_d^j (j < phi_d) in the zeta_n power basis.
    std::vector<Poly> a(static_cast<std::size_t>(phi_n), Poly(static_cast<std::size_t>(phi_d), Rational(0)));
    for (int j = 0; j < phi_d; ++j) {
      Poly col(static_cast<std::size_t>(j) * static_cast<std::size_t>(order_ / d) + 1, Rational(0));
      col.back() = 1;
      const Poly img = from_powers(order_, std::move(col)).promoted(order_).coeffs_;
      for (int r = 0; r < phi_n; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(r)];
    }
    if (auto x = solve(std::move(a), coeffs_, static_cast<std::size_t>(phi_d))) return Cyclotomic(d, std::move(*x));
  }
  return *this;
}

std::optional<Cyclotomic> Cyclotomic::try_inverse() const {
  if (is_zero()) return std::nullopt;
  if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
  const auto& m = cyclotomic_polynomial(order_);
  Poly r0(m.begin(), m.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return from_powers(order_, std::move(s0));
}

Cyclotomic Cyclotomic::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw ScalarError("division by zero");
  return *inv;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const int n = std::lcm(order_, rhs.order_);
  if (n != order_) *this = promoted(n);
  if (rhs.order_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    const Cyclotomic tmp = rhs.promoted(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += tmp.coeffs_[i];
  }
  drop_to_rational_if_possible();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.is_rational()) {
    Cyclotomic out = rhs;
    for (auto& c : out.coeffs_) c *= lhs.coeffs_[0];
    out.drop_to_rational_if_possible();
    return out;
  }
  if (rhs.is_rational()) return rhs * lhs;
  const int n = std::lcm(lhs.order_, rhs.order_);
  Poly prod = poly_mul(lhs.promoted(n).coeffs_, rhs.promoted(n).coeffs_);
  reduce_mod(prod, cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(prod));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) { return lhs * rhs.inverse(); }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  const int n = std::lcm(lhs.order_, rhs.order_);
  return lhs.promoted(n).coeffs_ == rhs.promoted(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic c = reduced();
  if (c.is_rational()) return c.coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.coeffs_.size(); i-- > 0;) {
    const Rational& q = c.coeffs_[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << c.order_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Cyclotomic root_of_unity(int n, long k) {
  if (n < 1) throw ScalarError("root_of_unity: order must be positive");
  long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> powers(static_cast<std::size_t>(e) + 1, Rational(0));
  powers.back() = 1;
  return Cyclotomic::from_powers(n, std::move(powers));
}

Cyclotomic minus_one_pow(unsigned x) { return (x & 1U) ? Cyclotomic(-1) : Cyclotomic(1); }

}  // namespace sfc

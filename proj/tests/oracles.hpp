#pragma once

// Reference implementations used as test oracles. They share no code with
// the library's checkers: each one is the dense, textbook form of the
// identity it computes (full index loops, cofactor expansion, complex
// evaluation).

#include <array>
#include <complex>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

#include "sfc/cocycles.hpp"
#include "sfc/fusion.hpp"
#include "sfc/scalars.hpp"

namespace oracle {

using sfc::Cyclotomic;

/// Numerical value of an exact element, for sanity cross-checks only.
inline std::complex<long double> evaluate(const Cyclotomic& x) {
  std::complex<long double> sum = 0;
  const long double angle = 2 * std::numbers::pi_v<long double> / x.order();
  for (std::size_t k = 0; k < x.coeffs().size(); ++k)
    sum += static_cast<long double>(x.coeffs()[k].get_d()) * std::polar<long double>(1, angle * static_cast<long double>(k));
  return sum;
}

/// Determinant by Laplace expansion along the first row.
inline Cyclotomic cofactor_determinant(const std::vector<std::vector<Cyclotomic>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Cyclotomic det;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Cyclotomic>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Cyclotomic> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    const Cyclotomic term = m[0][c] * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

using Quad = std::array<int, 4>;

/// Quadruples (g,h,k,l) violating F(g,h,k)F(g,hk,l)F(h,k,l) =
/// (-1)^{sign(g,h,k,l)} F(gh,k,l)F(g,h,kl).
inline std::set<Quad> cocycle_witnesses(const sfc::GroupTable& G, const std::function<Cyclotomic(int, int, int)>& F,
                                        const std::function<int(int, int, int, int)>& sign) {
  std::set<Quad> out;
  const int n = G.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Cyclotomic lhs = F(g, h, k);
          lhs *= F(g, G.mul(h, k), l);
          lhs *= F(h, k, l);
          Cyclotomic rhs = F(G.mul(g, h), k, l);
          rhs *= F(g, h, G.mul(k, l));
          if (sign(g, h, k, l) % 2) rhs = Cyclotomic(0) - rhs;
          if (!(lhs == rhs)) out.insert({g, h, k, l});
        }
  return out;
}

/// Free-index tuples (i,j,k,l,m,n,p,q,s,alpha,beta,chi,gamma,delta,phi)
/// where the pentagon fails, by looping over every label tuple.
inline std::set<std::vector<int>> pentagon_witnesses(const sfc::FusionData& d, const sfc::SixJTable& F,
                                                     const std::function<int(const std::vector<int>&)>& sign = {}) {
  std::set<std::vector<int>> out;
  const int r = d.rank();
  auto f = [&](int i, int j, int m, int k, int n, int t, int a, int b, int e, int p) {
    return F.value({i, j, m, k, n, t, a, b, e, p});
  };
  int x[9];
  for (int code = 0, total = [&] { int t = 1; for (int c = 0; c < 9; ++c) t *= r; return t; }(); code < total; ++code) {
    int c = code;
    for (int z = 8; z >= 0; --z) {
      x[z] = c % r;
      c /= r;
    }
    const int i = x[0], j = x[1], k = x[2], l = x[3], m = x[4], n = x[5], p = x[6], q = x[7], s = x[8];
    const int Na = d.N(i, j, m), Nb = d.N(m, k, n), Nc = d.N(n, l, p), Nd = d.N(k, l, q), Nf = d.N(j, q, s),
              Ng = d.N(i, s, p);
    if (!Na || !Nb || !Nc || !Nd || !Nf || !Ng) continue;
    for (int al = 1; al <= Na; ++al)
      for (int be = 1; be <= Nb; ++be)
        for (int ch = 1; ch <= Nc; ++ch)
          for (int de = 1; de <= Nd; ++de)
            for (int ph = 1; ph <= Nf; ++ph)
              for (int ga = 1; ga <= Ng; ++ga) {
                Cyclotomic lhs, rhs;
                for (int t = 0; t < r; ++t)
                  for (int et = 1; et <= d.N(j, k, t); ++et)
                    for (int vp = 1; vp <= d.N(i, t, n); ++vp)
                      for (int ka = 1; ka <= d.N(t, l, s); ++ka)
                        lhs += f(i, j, m, k, n, t, al, be, et, vp) * f(i, t, n, l, p, s, vp, ch, ka, ga) *
                               f(j, k, t, l, s, q, et, ka, de, ph);
                for (int ep = 1; ep <= d.N(m, q, p); ++ep)
                  rhs += f(m, k, n, l, p, q, be, ch, de, ep) * f(i, j, m, q, p, s, al, ep, ph, ga);
                std::vector<int> key{i, j, k, l, m, n, p, q, s, al, be, ch, ga, de, ph};
                if (sign && sign(key) % 2) rhs = -rhs;
                if (!(lhs == rhs)) out.insert(std::move(key));
              }
  }
  return out;
}

}  // namespace oracle

#pragma once

// Reference implementations used only to cross-check the library. They are
// deliberately naive and share no code with src/.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "zpflt/arith/polynomial.hpp"

namespace oracle {

using zpflt::Integer;
using zpflt::IntPolynomial;
using zpflt::Rational;

inline std::uint64_t naive_modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t k = 0; k < e; ++k) r = r * (b % m) % m;
  return r;
}

/// Fraction-free Gaussian elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline Integer sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
  return bareiss_det(std::move(s));
}

/// x^3 + b x^2 + c x + d
inline Integer cubic_disc(const Integer& b, const Integer& c, const Integer& d) {
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

inline std::vector<std::uint64_t> brute_roots(const IntPolynomial& f, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < q; ++x) {
    Integer acc = 0;
    for (int k = f.degree(); k >= 0; --k) acc = (acc * Integer(static_cast<unsigned long>(x)) + f[k]) % Integer(static_cast<unsigned long>(q));
    if (acc == 0) out.push_back(x);
  }
  return out;
}

// --- real roots by Descartes' rule with interval bisection -----------------

inline int descartes_sign_changes(const std::vector<Integer>& c) {
  int changes = 0, last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline std::vector<Integer> taylor_shift_one(std::vector<Integer> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  return a;
}

/// Roots of p in the open interval (0, 1); p squarefree, p(0) p(1) may vanish.
inline int roots_in_unit_interval(const std::vector<Integer>& p) {
  // (x+1)^d p(1/(x+1)): reverse then shift
  std::vector<Integer> rev(p.rbegin(), p.rend());
  const int v = descartes_sign_changes(taylor_shift_one(rev));
  if (v <= 1) return v;
  const std::size_t d = p.size() - 1;
  // left half: 2^d p(x/2); right half: its shift by one
  std::vector<Integer> left(p.size());
  for (std::size_t k = 0; k <= d; ++k) left[k] = p[k] << static_cast<mp_bitcnt_t>(d - k);
  std::vector<Integer> right = taylor_shift_one(left);
  const int mid = right[0] == 0 ? 1 : 0;
  if (mid) right.erase(right.begin());  // divide out x
  return roots_in_unit_interval(left) + mid + roots_in_unit_interval(right);
}

inline int positive_root_count(const IntPolynomial& f) {
  Integer bound = 1;
  for (const auto& c : f.coeffs()) bound = std::max(bound, Integer(abs(c)));
  bound = 2 * bound + 2;  // Cauchy-type bound for any leading coefficient >= 1
  mp_bitcnt_t k = 0;
  while ((Integer(1) << k) < bound) ++k;
  std::vector<Integer> scaled(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] <<= static_cast<mp_bitcnt_t>(k * i);
  while (!scaled.empty() && scaled[0] == 0) scaled.erase(scaled.begin());
  return roots_in_unit_interval(scaled);
}

inline int real_root_count(const IntPolynomial& f) {
  std::vector<Integer> c = f.coeffs();
  int zero = 0;
  while (!c.empty() && c[0] == 0) {
    ++zero;
    c.erase(c.begin());
  }
  IntPolynomial g(c);
  std::vector<Integer> neg = g.coeffs();
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return zero + positive_root_count(g) + positive_root_count(IntPolynomial(neg));
}

// --- Gaussian periods in floating point -------------------------------------

/// Coefficients of prod (x - eta_j) over the conjugate periods, rounded.
inline std::vector<long> numeric_period_polynomial(long p, long n) {
  long m = 1;
  for (long k = 0; k <= n; ++k) m *= p;
  long d = 1;
  for (long k = 0; k < n; ++k) d *= p;
  // g: generator of (Z/m)^x; H = <g^d>, cosets g^j H for j < d
  auto order = [&](long g) {
    long x = g % m, k = 1;
    while (x != 1) {
      x = x * g % m;
      ++k;
    }
    return k;
  };
  long g = 2;
  while (order(g) != m / p * (p - 1)) ++g;
  const long double two_pi = 6.283185307179586476925286766559L;
  std::vector<long double> eta(d, 0.0L);
  long x = 1;
  for (long e = 0; e < m / p * (p - 1); ++e) {
    eta[e % d] += std::cos(two_pi * static_cast<long double>(x) / static_cast<long double>(m));
    x = x * g % m;
  }
  std::vector<long double> c{1.0L};
  for (long double r : eta) {
    std::vector<long double> next(c.size() + 1, 0.0L);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  std::vector<long> out;
  for (long double v : c) out.push_back(std::lround(v));
  return out;
}

inline Rational numeric_trace_check(long m, long a) {
  // sum over k coprime to m of cos(2 pi a k / m), rounded
  long double s = 0;
  for (long k = 1; k < m; ++k)
    if (std::gcd(k, m) == 1) s += std::cos(6.283185307179586476925286766559L * a * k / m);
  return Rational(std::lround(s));
}

/// Multiplication-by-a matrix on the power basis, via schoolbook reduction.
inline std::vector<std::vector<Integer>> multiplication_matrix(const IntPolynomial& f, const std::vector<Integer>& a) {
  const int d = f.degree();
  std::vector<std::vector<Integer>> mat(d, std::vector<Integer>(d, 0));
  for (int col = 0; col < d; ++col) {
    // a * x^col, then reduce mod f
    std::vector<Integer> prod(a.size() + col, 0);
    for (std::size_t i = 0; i < a.size(); ++i) prod[i + col] = a[i];
    for (int k = static_cast<int>(prod.size()) - 1; k >= d; --k) {
      const Integer c = prod[k];
      if (c == 0) continue;
      for (int j = 0; j <= d; ++j) prod[k - d + j] -= c * f[j];
    }
    for (int r = 0; r < d && r < static_cast<int>(prod.size()); ++r) mat[r][col] = prod[r];
  }
  return mat;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2026ULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntPolynomial random_poly(int degree, long bound, bool monic) {
  std::vector<Integer> c(degree + 1);
  for (int k = 0; k <= degree; ++k) c[k] = uniform(-bound, bound);
  if (monic) c[degree] = 1;
  while (c[degree] == 0) c[degree] = uniform(-bound, bound);
  return IntPolynomial(c);
}

}  // namespace oracle

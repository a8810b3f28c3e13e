#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zpflt/arith/polynomial.hpp"

namespace zpflt {

/// Polynomial over F_q, q prime below 2^32, coefficients ascending in [0, q).
class ModPolynomial {
 public:
  ModPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  ModPolynomial(std::uint64_t modulus, const IntPolynomial& f);

  std::uint64_t modulus() const { return q_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.back(); }

  ModPolynomial monic() const;
  ModPolynomial derivative() const;
  std::uint64_t eval(std::uint64_t x) const;

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
  friend bool operator==(const ModPolynomial& a, const ModPolynomial& b) {
    return a.q_ == b.q_ && a.c_ == b.c_;
  }

  std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& b) const;
  ModPolynomial rem(const ModPolynomial& b) const { return divmod(b).second; }

 private:
  void trim();

  std::uint64_t q_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q);

/// Monic gcd (zero if both inputs are zero).
ModPolynomial gcd(ModPolynomial a, ModPolynomial b);

/// base^e mod m, m nonzero.
ModPolynomial powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& m);

struct DegreeBucket {
  int degree;            // common degree of the irreducible factors
  ModPolynomial product; // product of all monic irreducible factors of that degree

  int factor_count() const { return product.degree() / degree; }
};

/// Distinct-degree factorization of a monic squarefree polynomial.
/// Throws not_squarefree when gcd(f, f') != 1, invalid_argument when f is
/// not monic or has degree < 1.
std::vector<DegreeBucket> distinct_degree_factor(const ModPolynomial& f);

/// All roots of f in F_q (with f squarefree, each listed once), ascending.
std::vector<std::uint64_t> roots_mod(const ModPolynomial& f);

}  // namespace zpflt

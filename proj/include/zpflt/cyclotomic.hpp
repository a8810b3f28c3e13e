#pragma once

#include <vector>

#include "zpflt/arith/polynomial.hpp"

namespace zpflt {

/// The n-th layer of the cyclotomic Z_p-extension: the degree p^n subfield
/// of Q(zeta_{p^(n+1)}).
struct LayerSpec {
  long p;
  long n;

  LayerSpec(long p, long n);

  long degree() const;         // p^n
  long conductor() const;      // p^(n+1)
};

/// A Z-linear combination sum_a counts[a] * zeta^a of m-th roots of unity.
class ExponentMultiset {
 public:
  explicit ExponentMultiset(long modulus);

  static ExponentMultiset unit(long modulus);  // zeta^0 = 1
  static ExponentMultiset from_exponents(long modulus, const std::vector<long>& exponents);

  long modulus() const { return m_; }
  const std::vector<Integer>& counts() const { return counts_; }
  Integer count(long a) const;

  void add(long a, const Integer& c);

  /// Product in the group ring Z[Z/m].
  friend ExponentMultiset operator*(const ExponentMultiset& x, const ExponentMultiset& y);

  /// Tr_{Q(zeta_m)/Q} of the element, m a prime power.
  Integer trace() const;

 private:
  long m_;
  std::vector<Integer> counts_;
};

/// Tr_{Q(zeta_m)/Q}(zeta_m^a) for a prime power m = p^k.
Integer trace_zeta(long m, long a);

/// The order-(p-1) subgroup of (Z/p^(n+1))^x, ascending.
std::vector<long> period_subgroup(const LayerSpec& spec);

/// Power sums s_1..s_d of the conjugates of the Gaussian period over
/// period_subgroup(spec).
std::vector<Integer> period_power_sums(const LayerSpec& spec);

/// Monic e_k-from-p_k conversion; throws internal_consistency if some
/// elementary symmetric function fails to be an integer.
IntPolynomial polynomial_from_power_sums(const std::vector<Integer>& power_sums);

/// Minimal polynomial of the Gaussian period generating the layer.
IntPolynomial layer_polynomial(const LayerSpec& spec);

/// q^(p-1) != 1 (mod p^2); independent of n. Throws invalid_argument when
/// q == p or either argument is not prime or p < 3.
bool is_inert_by_congruence(long q, long p);

}  // namespace zpflt

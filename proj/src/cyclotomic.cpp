#include "zpflt/cyclotomic.hpp"

#include <cmath>

namespace zpflt {

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long reduce(long a, long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long prime_of_power(long m) {
  const Integer base = prime_power_base(Integer(m));
  if (base == 0) fail(ErrorKind::invalid_argument, "trace_zeta: modulus " + std::to_string(m) + " is not a prime power");
  return base.get_si();
}

// closed form: phi(m) at a == 0, -p^(k-1) on the order-p roots, 0 elsewhere
long trace_zeta_with_prime(long m, long p, long a) {
  const long prev = m / p;
  const long r = reduce(a, m);
  if (r == 0) return m - prev;
  if (r % prev == 0) return -prev;
  return 0;
}

}  // namespace

LayerSpec::LayerSpec(long p_, long n_) : p(p_), n(n_) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::invalid_argument, "layer needs an odd prime p, got " + std::to_string(p));
  if (n < 1) fail(ErrorKind::invalid_argument, "layer index n must be >= 1");
  // the convolution tables are dense in p^(n+1)
  if ((n + 1) * std::log2(static_cast<double>(p)) > 24)
    fail(ErrorKind::invalid_argument, "layer conductor p^(n+1) too large");
}

long LayerSpec::degree() const { return ipow(p, n); }
long LayerSpec::conductor() const { return ipow(p, n + 1); }

ExponentMultiset::ExponentMultiset(long modulus) : m_(modulus), counts_(static_cast<std::size_t>(modulus)) {
  if (modulus < 1) fail(ErrorKind::invalid_argument, "exponent multiset modulus must be >= 1");
}

ExponentMultiset ExponentMultiset::unit(long modulus) {
  ExponentMultiset e(modulus);
  e.counts_[0] = 1;
  return e;
}

ExponentMultiset ExponentMultiset::from_exponents(long modulus, const std::vector<long>& exponents) {
  ExponentMultiset e(modulus);
  for (long a : exponents) e.add(a, 1);
  return e;
}

Integer ExponentMultiset::count(long a) const { return counts_[static_cast<std::size_t>(reduce(a, m_))]; }

void ExponentMultiset::add(long a, const Integer& c) { counts_[static_cast<std::size_t>(reduce(a, m_))] += c; }

ExponentMultiset operator*(const ExponentMultiset& x, const ExponentMultiset& y) {
  if (x.m_ != y.m_) fail(ErrorKind::invalid_argument, "exponent multisets over different moduli");
  const long m = x.m_;
  ExponentMultiset out(m);
  std::vector<long> support;
  for (long b = 0; b < m; ++b)
    if (y.counts_[static_cast<std::size_t>(b)] != 0) support.push_back(b);
  for (long a = 0; a < m; ++a) {
    const Integer& ca = x.counts_[static_cast<std::size_t>(a)];
    if (ca == 0) continue;
    for (long b : support) {
      long s = a + b;
      if (s >= m) s -= m;
      out.counts_[static_cast<std::size_t>(s)] += ca * y.counts_[static_cast<std::size_t>(b)];
    }
  }
  return out;
}

Integer ExponentMultiset::trace() const {
  const long p = prime_of_power(m_);
  Integer t = 0;
  for (long a = 0; a < m_; ++a) {
    const Integer& c = counts_[static_cast<std::size_t>(a)];
    if (c != 0) t += c * trace_zeta_with_prime(m_, p, a);
  }
  return t;
}

Integer trace_zeta(long m, long a) {
  return trace_zeta_with_prime(m, prime_of_power(m), a);
}

std::vector<long> period_subgroup(const LayerSpec& spec) {
  const long m = spec.conductor();
  std::vector<long> h;
  for (long x = 1; x < m; ++x) {
    if (x % spec.p == 0) continue;
    if (modpow_u64(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(spec.p - 1),
                   static_cast<std::uint64_t>(m)) == 1)
      h.push_back(x);
  }
  if (static_cast<long>(h.size()) != spec.p - 1)
    fail(ErrorKind::internal_consistency, "period subgroup has wrong order");
  return h;
}

std::vector<Integer> period_power_sums(const LayerSpec& spec) {
  const long m = spec.conductor();
  const long d = spec.degree();
  const ExponentMultiset eta = ExponentMultiset::from_exponents(m, period_subgroup(spec));
  std::vector<Integer> sums;
  sums.reserve(static_cast<std::size_t>(d));
  ExponentMultiset power = ExponentMultiset::unit(m);
  const Integer index = spec.p - 1;  // [Q(zeta_m) : layer]
  for (long k = 1; k <= d; ++k) {
    power = power * eta;
    const Integer tr = power.trace();
    if (tr % index != 0) fail(ErrorKind::internal_consistency, "trace not divisible by subfield index");
    sums.push_back(tr / index);
  }
  return sums;
}

IntPolynomial polynomial_from_power_sums(const std::vector<Integer>& s) {
  const std::size_t d = s.size();
  std::vector<Integer> e(d + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Integer term = e[k - i] * s[i - 1];
      if (i & 1) acc += term; else acc -= term;
    }
    const Rational ek(acc, Integer(static_cast<unsigned long>(k)));
    Rational canon = ek;
    canon.canonicalize();
    if (canon.get_den() != 1)
      fail(ErrorKind::internal_consistency,
           "Newton identities: e_" + std::to_string(k) + " = " + canon.get_str() + " is not integral");
    e[k] = canon.get_num();
  }
  // f = sum_k (-1)^k e_k x^(d-k)
  std::vector<Integer> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[d - k] = (k & 1) ? Integer(-e[k]) : e[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial layer_polynomial(const LayerSpec& spec) {
  return polynomial_from_power_sums(period_power_sums(spec));
}

bool is_inert_by_congruence(long q, long p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::invalid_argument, "p must be an odd prime");
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q)))
    fail(ErrorKind::invalid_argument, "q must be prime");
  if (q == p) fail(ErrorKind::invalid_argument, "q = p is the ramified prime");
  const Integer p2 = Integer(p) * p;
  return modpow(Integer(q), Integer(p - 1), p2) != 1;
}

}  // namespace zpflt

#include "zpflt/arith/integer.hpp"

#include "zpflt/error.hpp"

namespace zpflt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_squarefree: return "not-squarefree";
    case ErrorKind::not_representable: return "not-representable";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::internal_consistency: return "internal-consistency";
    case ErrorKind::invalid_context: return "invalid-context";
    case ErrorKind::transport: return "transport";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Integer modpow(const Integer& base, const Integer& exponent, const Integer& modulus) {
  if (modulus < 2) fail(ErrorKind::invalid_argument, "modpow: modulus must be >= 2");
  if (exponent < 0) fail(ErrorKind::invalid_argument, "modpow: exponent must be >= 0");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::uint64_t modpow_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus < 2) fail(ErrorKind::invalid_argument, "modpow: modulus must be >= 2");
  std::uint64_t result = 1;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod_u64(result, base, modulus);
    base = mulmod_u64(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = modpow_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

unsigned long valuation2(const Integer& n) {
  if (n == 0) fail(ErrorKind::invalid_argument, "valuation of zero");
  return mpz_scan1(n.get_mpz_t(), 0);
}

unsigned long valuation(const Integer& n, const Integer& p) {
  if (n == 0) fail(ErrorKind::invalid_argument, "valuation of zero");
  if (p < 2) fail(ErrorKind::invalid_argument, "valuation base must be >= 2");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

bool is_power_of_two(const Integer& n) {
  if (n <= 0) return false;
  return mpz_popcount(n.get_mpz_t()) == 1;
}

bool is_perfect_square(const Integer& n) {
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer mod(const Integer& n, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t mod_u64(const Integer& n, std::uint64_t m) {
  Integer r = mod(n, Integer(static_cast<unsigned long>(m)));
  return r.get_ui();
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::pair<unsigned, bool> prime_power_exponent(const Integer& n, const Integer& p) {
  if (n < 2 || p < 2) return {0, false};
  Integer rest;
  unsigned long k = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  if (rest != 1 || k == 0) return {0, false};
  return {static_cast<unsigned>(k), true};
}

Integer prime_power_base(const Integer& n) {
  if (n < 2) return 0;
  Integer p = 2;
  while (p * p <= n) {
    if (n % p == 0) break;
    ++p;
  }
  if (p * p > n) p = n;
  return prime_power_exponent(n, p).second ? p : Integer(0);
}

std::string to_string(const Integer& n) { return n.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace zpflt

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zpflt {

using Integer = mpz_class;
using Rational = mpq_class;

/// base^exponent mod modulus, result in [0, modulus).
Integer modpow(const Integer& base, const Integer& exponent, const Integer& modulus);

/// Same contract on machine words; modulus < 2^64, uses a 128-bit product.
std::uint64_t modpow_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// 2-adic valuation; n must be nonzero.
unsigned long valuation2(const Integer& n);
/// p-adic valuation; n must be nonzero, p >= 2.
unsigned long valuation(const Integer& n, const Integer& p);

/// n = 2^k with k >= 0; false for n <= 0.
bool is_power_of_two(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Least non-negative residue of n mod m, m >= 1.
Integer mod(const Integer& n, const Integer& m);
std::uint64_t mod_u64(const Integer& n, std::uint64_t m);

Integer pow(const Integer& base, unsigned long exponent);

/// Returns (k, true) if n == p^k with k >= 1, otherwise (0, false).
std::pair<unsigned, bool> prime_power_exponent(const Integer& n, const Integer& p);

/// Returns p if n == p^k for a prime p and k >= 1, otherwise 0. Trial
/// division, intended for the small moduli used by the layer construction.
Integer prime_power_base(const Integer& n);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace zpflt

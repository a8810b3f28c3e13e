#include <doctest.h>

#include "oracles.hpp"
#include "zpflt/arith/integer.hpp"
#include "zpflt/arith/mod_poly.hpp"
#include "zpflt/arith/resultant.hpp"
#include "zpflt/arith/sturm.hpp"
#include "zpflt/error.hpp"

using namespace zpflt;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected zpflt::Error");
  return ErrorKind::internal_consistency;
}

IntPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

}  // namespace

TEST_SUITE("exact-arith") {

TEST_CASE("modpow examples") {
  CHECK(modpow(2, 1092, Integer(1093) * 1093) == 1);
  CHECK(modpow(2, 4, 25) == 16);
  CHECK(modpow(7, 0, 10) == 1);
  CHECK(modpow(-3, 3, 7) == mod(Integer(-27), 7));
  CHECK(kind_of([] { modpow(2, 3, 1); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { modpow(2, -1, 5); }) == ErrorKind::invalid_argument);
}

TEST_CASE("modpow agrees with repeated multiplication") {
  for (std::uint64_t m = 2; m < 50; ++m)
    for (std::uint64_t b = 0; b < 50; ++b)
      for (std::uint64_t e = 0; e < 30; ++e) {
        const auto want = oracle::naive_modpow(b, e, m);
        REQUIRE(modpow(Integer(static_cast<unsigned long>(b)), Integer(static_cast<unsigned long>(e)),
                       Integer(static_cast<unsigned long>(m))) == want);
        REQUIRE(modpow_u64(b, e, m) == want);
      }
}

TEST_CASE("primality and valuations") {
  CHECK(is_prime(std::uint64_t{1093}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2,3,5,7
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    REQUIRE(is_prime(n) == trial);
    REQUIRE(is_prime(Integer(static_cast<unsigned long>(n))) == trial);
  }
  CHECK(valuation2(Integer(96)) == 5);
  CHECK(valuation(Integer(5 * 5 * 5 * 7), 5) == 3);
  CHECK(is_power_of_two(Integer(1)));
  CHECK(is_power_of_two(Integer(64)));
  CHECK_FALSE(is_power_of_two(Integer(-64)));
  CHECK_FALSE(is_power_of_two(Integer(0)));
  CHECK_FALSE(is_power_of_two(Integer(12)));
  CHECK(is_perfect_square(Integer(1849)));
  CHECK_FALSE(is_perfect_square(Integer(-4)));
  CHECK(prime_power_exponent(Integer(125), 5) == std::pair<unsigned, bool>{3, true});
  CHECK_FALSE(prime_power_exponent(Integer(50), 5).second);
  CHECK(prime_power_base(Integer(343)) == 7);
}

TEST_CASE("polynomial basics") {
  const IntPolynomial f = P({1, -3, 0, 1});
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "x^3 - 3*x + 1");
  CHECK(f.eval(Integer(2)) == 3);
  CHECK(f.derivative() == P({-3, 0, 3}));
  CHECK(IntPolynomial().degree() == -1);
  CHECK(P({0, 0}).is_zero());
  // x -> 2 - x
  CHECK(f.reflect().shift(Integer(-2)) == P({3, -9, 6, -1}));
  CHECK(parse_coefficients("-3,9,-6,1") == P({-3, 9, -6, 1}));
  CHECK(format_coefficients(P({-3, 9, -6, 1})) == "-3,9,-6,1");
  for (const char* bad : {"", "1,,2", "1,x", " ", "1,2,"})
    CHECK(kind_of([&] { parse_coefficients(bad); }) == ErrorKind::invalid_argument);
}

TEST_CASE("division identities") {
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial a = oracle::random_poly(static_cast<int>(oracle::uniform(0, 8)), 20, false);
    const IntPolynomial b = oracle::random_poly(static_cast<int>(oracle::uniform(0, 5)), 20, false);
    const IntPolynomial r = pseudo_rem(a, b);
    CHECK(r.degree() < b.degree());
    const auto [q, rr] = divmod(to_rational(a), to_rational(b));
    CHECK(q * to_rational(b) + rr == to_rational(a));
    const IntPolynomial m = oracle::random_poly(static_cast<int>(oracle::uniform(1, 5)), 20, true);
    const IntPolynomial rm = rem_monic(a, m);
    CHECK(rm.degree() < m.degree());
    CHECK(to_rational(rm) == divmod(to_rational(a), to_rational(m)).second);
    CHECK(content(primitive_part(a)) == (a.is_zero() ? 0 : 1));
  }
}

TEST_CASE("rational inverse modulo a polynomial") {
  const RatPolynomial f = to_rational(P({-3, 9, -6, 1}));
  const RatPolynomial a = to_rational(P({2, -1}));
  const auto [g, s] = inverse_mod(a, f);
  CHECK(g == RatPolynomial{Rational(1)});
  CHECK(divmod(s * a, f).second == RatPolynomial{Rational(1)});
}

TEST_CASE("resultant matches the Sylvester determinant") {
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial f = oracle::random_poly(static_cast<int>(oracle::uniform(1, 7)), 12, false);
    const IntPolynomial g = oracle::random_poly(static_cast<int>(oracle::uniform(1, 7)), 12, false);
    REQUIRE(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
  CHECK(resultant(P({1, 1}), IntPolynomial()) == 0);
  CHECK(resultant(P({-2, 0, 1}), P({5})) == 25);
}

TEST_CASE("discriminant examples") {
  CHECK(poly_discriminant(P({1, -3, 0, 1})) == 81);
  CHECK(poly_discriminant(P({-3, 9, -6, 1})) == 81);
  CHECK(poly_discriminant(P({0, 0, 1})) == 0);
  CHECK(poly_discriminant(P({5, 1})) == 1);
  CHECK(kind_of([] { poly_discriminant(P({1, 2})); }) == ErrorKind::invalid_argument);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial f = oracle::random_poly(3, 15, true);
    REQUIRE(poly_discriminant(f) == oracle::cubic_disc(f[2], f[1], f[0]));
  }
}

TEST_CASE("discriminant is shift invariant") {
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial f = oracle::random_poly(static_cast<int>(oracle::uniform(1, 5)), 10, true);
    const Integer c = oracle::uniform(-10, 10);
    REQUIRE(poly_discriminant(f.shift(c)) == poly_discriminant(f));
  }
}

TEST_CASE("distinct-degree factorization examples") {
  const IntPolynomial f = P({1, -3, 0, 1});
  auto b2 = distinct_degree_factor(ModPolynomial(2, f));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].degree == 3);
  CHECK(b2[0].product == ModPolynomial(2, f));
  auto b17 = distinct_degree_factor(ModPolynomial(17, f));
  REQUIRE(b17.size() == 1);
  CHECK(b17[0].degree == 1);
  CHECK(b17[0].factor_count() == 3);
  auto b5 = distinct_degree_factor(ModPolynomial(5, P({1, 0, 1})));
  REQUIRE(b5.size() == 1);
  CHECK(b5[0].degree == 1);
  CHECK(roots_mod(ModPolynomial(5, P({1, 0, 1}))) == std::vector<std::uint64_t>{2, 3});
  CHECK(kind_of([] { distinct_degree_factor(ModPolynomial(3, P({0, 0, 1}))); }) == ErrorKind::not_squarefree);
  CHECK(kind_of([] { distinct_degree_factor(ModPolynomial(7, P({1, 2}))); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { ModPolynomial(9, P({1, 1})); }) == ErrorKind::invalid_argument);
}

TEST_CASE("distinct-degree factorization on random squarefree input") {
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 31, 53, 97};
  int tested = 0;
  while (tested < 400) {
    const std::uint64_t q = primes[oracle::uniform(0, 8)];
    const IntPolynomial f = oracle::random_poly(static_cast<int>(oracle::uniform(1, 9)), 100, true);
    const ModPolynomial fm(q, f);
    if (gcd(fm, fm.derivative()).degree() != 0) continue;
    ++tested;
    const auto buckets = distinct_degree_factor(fm);
    int total = 0;
    ModPolynomial prod(q, std::vector<std::uint64_t>{1});
    for (const auto& b : buckets) {
      REQUIRE(b.product.degree() % b.degree == 0);
      total += b.product.degree();
      prod = prod * b.product;
    }
    REQUIRE(total == f.degree());
    REQUIRE(prod == fm);
    // linear bucket is exactly the brute-force roots
    const auto brute = oracle::brute_roots(f, q);
    int linear = 0;
    for (const auto& b : buckets)
      if (b.degree == 1) linear = b.factor_count();
    REQUIRE(linear == static_cast<int>(brute.size()));
    REQUIRE(roots_mod(fm) == brute);
  }
}

TEST_CASE("Sturm examples") {
  CHECK(sturm_real_root_count(P({1, -3, 0, 1})) == 3);
  CHECK(sturm_real_root_count(P({1, 0, 1})) == 0);
  CHECK(sturm_real_root_count(P({0, 1})) == 1);
  CHECK(kind_of([] { sturm_real_root_count(P({1, 2, 1})); }) == ErrorKind::not_squarefree);
  const auto chain = sturm_chain(P({1, -3, 0, 1}));
  CHECK(sturm_root_count_in(chain, Rational(0), Rational(1)) == 1);
  CHECK(sturm_root_count_in(chain, Rational(0), Rational(2)) == 2);
  CHECK(sturm_root_count_in(chain, Rational(-2), Rational(0)) == 1);
}

TEST_CASE("Sturm agrees with Descartes bisection") {
  int tested = 0;
  while (tested < 300) {
    const int deg = tested % 2 ? 5 : 3;
    const IntPolynomial f = oracle::random_poly(deg, 30, false);
    if (resultant(f, f.derivative()) == 0) continue;
    ++tested;
    REQUIRE(sturm_real_root_count(f) == oracle::real_root_count(f));
  }
  // product of linear factors with known roots
  IntPolynomial g = P({1});
  for (long r : {-7, -1, 0, 2, 3, 11}) g = g * P({-r, 1});
  CHECK(sturm_real_root_count(g) == 6);
  CHECK(oracle::real_root_count(g) == 6);
  CHECK(sturm_real_root_count(g * P({5, 0, 1})) == 6);
}

}  // TEST_SUITE

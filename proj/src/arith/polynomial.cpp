#include "zpflt/arith/polynomial.hpp"

#include <sstream>

namespace zpflt {

IntPolynomial rem_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (!monic.is_monic()) fail(ErrorKind::invalid_argument, "rem_monic: divisor must be monic");
  const int d = monic.degree();
  if (a.degree() < d) return a;
  std::vector<Integer> r = a.coeffs();
  for (int k = a.degree(); k >= d; --k) {
    const Integer t = r[static_cast<std::size_t>(k)];
    if (t == 0) continue;
    for (int j = 0; j <= d; ++j) r[static_cast<std::size_t>(k - d + j)] -= t * monic[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(d));
  return IntPolynomial(std::move(r));
}

IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorKind::invalid_argument, "pseudo_rem by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Integer t = r[static_cast<std::size_t>(k)];
    for (auto& v : r) v *= lb;
    if (t != 0) {
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b[static_cast<std::size_t>(j)];
    }
  }
  // each of the deg(a) - deg(b) + 1 steps scaled r by lb exactly once
  r.resize(static_cast<std::size_t>(db));
  return IntPolynomial(std::move(r));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  const Integer g = content(f);
  std::vector<Integer> c = f.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> c;
  c.reserve(f.size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> inverse_mod(const RatPolynomial& a, const RatPolynomial& b) {
  // invariant: s0*a == r0, s1*a == r1 (mod b)
  RatPolynomial r0 = divmod(a, b).second, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(Rational(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  const Rational inv = Rational(1) / r0.lead();
  return {r0 * inv, divmod(s0 * inv, b).second};
}

IntPolynomial parse_coefficients(const std::string& text) {
  std::vector<Integer> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorKind::invalid_argument, "empty coefficient in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    Integer v;
    if (tok.front() == '+') tok.erase(0, 1);
    if (v.set_str(tok, 10) != 0) fail(ErrorKind::invalid_argument, "bad coefficient '" + tok + "'");
    c.push_back(v);
  }
  if (c.empty()) fail(ErrorKind::invalid_argument, "empty coefficient list");
  if (!text.empty() && text.back() == ',') fail(ErrorKind::invalid_argument, "trailing comma in '" + text + "'");
  return IntPolynomial(std::move(c));
}

std::string format_coefficients(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f[i].get_str();
  }
  return out;
}

}  // namespace zpflt

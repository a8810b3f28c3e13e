#include "zpflt/arith/resultant.hpp"

#include <utility>

namespace zpflt {

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPolynomial a = f, b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
  }
  if (b.degree() == 0) return sign * pow(b.lead(), static_cast<unsigned long>(a.degree()));

  const Integer ca = content(a), cb = content(b);
  a = primitive_part(a);
  b = primitive_part(b);
  const Integer t = pow(ca, static_cast<unsigned long>(b.degree())) *
                    pow(cb, static_cast<unsigned long>(a.degree()));
  Integer gg = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPolynomial r = pseudo_rem(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    const Integer divisor = gg * pow(h, static_cast<unsigned long>(delta));
    std::vector<Integer> rc = r.coeffs();
    for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
    b = IntPolynomial(std::move(rc));
    gg = a.lead();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = pow(gg, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      Integer num = pow(b.lead(), static_cast<unsigned long>(da));
      Integer den = pow(h, static_cast<unsigned long>(da - 1));
      Integer res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * t * res;
    }
  }
}

Integer poly_discriminant(const IntPolynomial& f) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "discriminant needs degree >= 1");
  if (!f.is_monic()) fail(ErrorKind::invalid_argument, "discriminant: polynomial must be monic");
  const long d = f.degree();
  if (d == 1) return 1;
  Integer r = resultant(f, f.derivative());
  return ((d * (d - 1) / 2) % 2) ? Integer(-r) : r;
}

}  // namespace zpflt

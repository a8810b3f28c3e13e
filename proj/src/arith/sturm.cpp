#include "zpflt/arith/sturm.hpp"

namespace zpflt {

namespace {

int sign_of(const Integer& v) { return sgn(v); }
int sign_of(const Rational& v) { return sgn(v); }

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
  if (f.is_zero()) fail(ErrorKind::invalid_argument, "Sturm chain of the zero polynomial");
  std::vector<IntPolynomial> chain{primitive_part(f)};
  if (f.degree() == 0) return chain;
  chain.push_back(primitive_part(f.derivative()));
  while (true) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    if (b.degree() == 0) break;
    IntPolynomial r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    // prem multiplies by lc(b)^(delta+1); undo a negative factor
    const int delta = a.degree() - b.degree();
    if (sgn(b.lead()) < 0 && ((delta + 1) & 1)) r = -r;
    chain.push_back(-primitive_part(r));
  }
  return chain;
}

int sturm_real_root_count(const IntPolynomial& f) {
  const auto chain = sturm_chain(f);
  if (chain.back().degree() > 0)
    fail(ErrorKind::not_squarefree, "sturm_real_root_count: polynomial is not squarefree");
  std::vector<int> at_pos, at_neg;
  for (const auto& p : chain) {
    const int s = sign_of(p.lead());
    at_pos.push_back(s);
    at_neg.push_back((p.degree() & 1) ? -s : s);
  }
  return variations(at_neg) - variations(at_pos);
}

int sturm_root_count_in(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b) {
  std::vector<int> sa, sb;
  for (const auto& p : chain) {
    sa.push_back(sign_of(p.eval(a)));
    sb.push_back(sign_of(p.eval(b)));
  }
  return variations(sa) - variations(sb);
}

}  // namespace zpflt

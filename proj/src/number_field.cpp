#include "zpflt/number_field.hpp"

#include <algorithm>

#include "zpflt/arith/mod_poly.hpp"
#include "zpflt/arith/resultant.hpp"

namespace zpflt {

std::shared_ptr<const NumberField> NumberField::create(IntPolynomial f) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "number field needs a polynomial of degree >= 1");
  if (!f.is_monic()) fail(ErrorKind::invalid_argument, "defining polynomial must be monic");
  Integer d = poly_discriminant(f);
  if (d == 0) fail(ErrorKind::invalid_argument, "defining polynomial has a repeated root");
  return std::shared_ptr<const NumberField>(new NumberField(std::move(f), std::move(d)));
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Integer> coords, unsigned long denom_exp)
    : field_(std::move(field)), denom_exp_(denom_exp) {
  if (!field_) fail(ErrorKind::invalid_argument, "field element without a field");
  const auto d = static_cast<std::size_t>(field_->degree());
  if (coords.size() > d) {
    coords_ = rem_monic(IntPolynomial(std::move(coords)), field_->polynomial()).coeffs();
  } else {
    coords_ = std::move(coords);
  }
  coords_.resize(d, Integer(0));
  normalize();
}

FieldElement FieldElement::from_integer(FieldPtr field, const Integer& v) {
  return FieldElement(std::move(field), std::vector<Integer>{v}, 0);
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (!is_power_of_two(c.get_den()))
    fail(ErrorKind::not_representable, "denominator of " + c.get_str() + " is not a power of two");
  return FieldElement(std::move(field), std::vector<Integer>{c.get_num()}, valuation2(c.get_den()));
}

FieldElement FieldElement::theta(FieldPtr field) {
  if (field->degree() == 1) {
    // theta is the rational root -f(0)
    return from_integer(field, -field->polynomial()[0]);
  }
  return FieldElement(std::move(field), std::vector<Integer>{0, 1}, 0);
}

void FieldElement::normalize() {
  if (is_zero()) {
    denom_exp_ = 0;
    return;
  }
  while (denom_exp_ > 0 && std::all_of(coords_.begin(), coords_.end(),
                                       [](const Integer& v) { return mpz_even_p(v.get_mpz_t()); })) {
    for (auto& v : coords_) v >>= 1;  // exact: v is even
    --denom_exp_;
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& v) { return v == 0; });
}

Integer FieldElement::height() const {
  Integer h = 0;
  for (const auto& v : coords_) h = std::max(h, Integer(abs(v)));
  return h;
}

FieldElement FieldElement::operator-() const {
  std::vector<Integer> c = coords_;
  for (auto& v : c) v = -v;
  return FieldElement(field_, std::move(c), denom_exp_);
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && a.field()->polynomial() != b.field()->polynomial())
    fail(ErrorKind::invalid_argument, "field elements belong to different fields");
}

std::vector<Integer> scaled(const std::vector<Integer>& c, unsigned long shift) {
  std::vector<Integer> out = c;
  for (auto& v : out) v <<= shift;
  return out;
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const unsigned long e = std::max(a.denom_exp_, b.denom_exp_);
  std::vector<Integer> x = scaled(a.coords_, e - a.denom_exp_);
  const std::vector<Integer> y = scaled(b.coords_, e - b.denom_exp_);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return FieldElement(a.field_, std::move(x), e);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const IntPolynomial prod = a.numerator() * b.numerator();
  return FieldElement(a.field_, prod.coeffs(), a.denom_exp_ + b.denom_exp_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (b.is_zero()) fail(ErrorKind::invalid_argument, "division by zero in number field");
  const RatPolynomial f = to_rational(a.field_->polynomial());
  auto [g, inv] = inverse_mod(to_rational(b.numerator()), f);
  if (g.degree() != 0) fail(ErrorKind::invalid_argument, "divisor is a zero divisor (defining polynomial reducible)");
  const RatPolynomial q = divmod(to_rational(a.numerator()) * inv, f).second;

  Integer den = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  if (!is_power_of_two(den))
    fail(ErrorKind::not_representable, "quotient " + a.to_string() + " / " + b.to_string() +
                                           " has a denominator with an odd prime factor");
  std::vector<Integer> coords;
  coords.reserve(q.size());
  for (const auto& c : q.coeffs()) {
    Integer v;
    mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    coords.push_back(v * c.get_num());
  }
  // a/b = coords / (den * 2^e_a) * 2^e_b
  long exp = static_cast<long>(valuation2(den)) + static_cast<long>(a.denom_exp_) - static_cast<long>(b.denom_exp_);
  if (exp < 0) {
    for (auto& v : coords) v <<= static_cast<unsigned long>(-exp);
    exp = 0;
  }
  return FieldElement(a.field_, std::move(coords), static_cast<unsigned long>(exp));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->polynomial() == b.field_->polynomial() && a.denom_exp_ == b.denom_exp_ && a.coords_ == b.coords_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (a.denom_exp_ != b.denom_exp_) return a.denom_exp_ < b.denom_exp_;
  return a.coords_ < b.coords_;
}

std::string FieldElement::to_string(const std::string& var) const {
  std::string num = numerator().to_string(var);
  if (denom_exp_ == 0) return num;
  const bool compound = num.find_first_of(" ") != std::string::npos;
  return (compound ? "(" + num + ")" : num) + "/" + pow(Integer(2), denom_exp_).get_str();
}

FieldElement nf_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  fail(ErrorKind::invalid_argument, "unknown arithmetic operation");
}

Integer numerator_norm(const FieldElement& a) {
  if (a.is_zero()) return 0;
  return resultant(a.field()->polynomial(), a.numerator());
}

Rational norm(const FieldElement& a) {
  Rational n(numerator_norm(a), pow(Integer(2), static_cast<unsigned long>(a.field()->degree()) * a.denom_exp()));
  n.canonicalize();
  return n;
}

// ---------------------------------------------------------------------------

int SplittingPattern::total() const {
  int t = 0;
  for (int d : degrees) t += d;
  return t;
}

bool SplittingPattern::all_equal() const {
  return std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) == degrees.end();
}

std::string SplittingPattern::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s + "]";
}

namespace {

SplittingPattern pattern_with_disc(const IntPolynomial& f, const Integer& disc, std::uint64_t q) {
  if (mod(disc, Integer(static_cast<unsigned long>(q))) == 0)
    fail(ErrorKind::inconclusive, std::to_string(q) + " divides disc(f); the pattern of f need not match the field");
  SplittingPattern out;
  for (const auto& bucket : distinct_degree_factor(ModPolynomial(q, f)))
    out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(bucket.factor_count()), bucket.degree);
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace

SplittingPattern splitting_pattern(const IntPolynomial& f, std::uint64_t q) {
  if (!f.is_monic() || f.degree() < 1) fail(ErrorKind::invalid_argument, "splitting pattern needs a monic polynomial");
  return pattern_with_disc(f, poly_discriminant(f), q);
}

SplittingPattern splitting_pattern(const NumberField& field, std::uint64_t q) {
  return pattern_with_disc(field.polynomial(), field.disc(), q);
}

// ---------------------------------------------------------------------------

namespace {

// (x - c)^d mod p, ascending
std::vector<std::uint64_t> linear_power_mod(long c, int d, long p) {
  const auto q = static_cast<std::uint64_t>(p);
  ModPolynomial acc(q, std::vector<std::uint64_t>{1});
  const ModPolynomial lin(q, std::vector<std::uint64_t>{(q - static_cast<std::uint64_t>(c) % q) % q, 1});
  for (int i = 0; i < d; ++i) acc = acc * lin;
  return acc.coeffs();
}

std::uint64_t rational_mod(const Rational& v, long p) {
  const auto q = static_cast<std::uint64_t>(p);
  const std::uint64_t num = mod_u64(v.get_num(), q);
  const std::uint64_t den = mod_u64(v.get_den(), q);
  return mulmod_u64(num, inverse_mod(den, q), q);
}

}  // namespace

RamifiedPrimeContext::RamifiedPrimeContext(FieldPtr field, long p, long residue_point)
    : field_(std::move(field)), p_(p), c_(residue_point) {
  if (p_ < 3 || !is_prime(static_cast<std::uint64_t>(p_)))
    fail(ErrorKind::invalid_argument, "ramified prime context needs an odd prime");
  if (c_ < 0 || c_ >= p_) fail(ErrorKind::invalid_context, "residue point out of range");
  const ModPolynomial f(static_cast<std::uint64_t>(p_), field_->polynomial());
  if (f.coeffs() != linear_power_mod(c_, field_->degree(), p_))
    fail(ErrorKind::invalid_context, "f is not congruent to (x - " + std::to_string(c_) + ")^" +
                                         std::to_string(field_->degree()) + " mod " + std::to_string(p_));
}

RamifiedPrimeContext RamifiedPrimeContext::find(FieldPtr field, long p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::invalid_argument, "ramified prime context needs an odd prime");
  const ModPolynomial f(static_cast<std::uint64_t>(p), field->polynomial());
  for (long c = 0; c < p; ++c) {
    if (f.coeffs() == linear_power_mod(c, field->degree(), p)) return RamifiedPrimeContext(field, p, c);
  }
  fail(ErrorKind::invalid_context, "no c with f == (x - c)^d mod " + std::to_string(p));
}

long residue_at_p(const RamifiedPrimeContext& ctx, const FieldElement& a) {
  const auto q = static_cast<std::uint64_t>(ctx.p());
  const ModPolynomial g(q, a.numerator());
  std::uint64_t r = g.eval(static_cast<std::uint64_t>(ctx.residue_point()));
  const std::uint64_t half = inverse_mod(2, q);
  r = mulmod_u64(r, modpow_u64(half, a.denom_exp(), q), q);
  return static_cast<long>(r);
}

bool check_norm_residue(const RamifiedPrimeContext& ctx, const FieldElement& a) {
  if (!prime_power_exponent(Integer(ctx.field()->degree()), Integer(ctx.p())).second)
    fail(ErrorKind::invalid_argument, "norm-residue congruence needs degree p^n");
  return rational_mod(norm(a), ctx.p()) == static_cast<std::uint64_t>(residue_at_p(ctx, a));
}

InertPrimeContext::InertPrimeContext(FieldPtr field) : field_(std::move(field)) {
  const SplittingPattern pat = splitting_pattern(*field_, 2);
  if (!pat.is_inert()) fail(ErrorKind::invalid_context, "2 is not inert: pattern " + pat.to_string());
}

long ord_at_q(const InertPrimeContext& ctx, const FieldElement& a) {
  if (a.is_zero()) fail(ErrorKind::invalid_argument, "valuation of zero");
  const Rational n = norm(a);
  const long v = static_cast<long>(valuation2(n.get_num())) - static_cast<long>(valuation2(n.get_den()));
  const long d = ctx.field()->degree();
  if (v % d != 0)
    fail(ErrorKind::internal_consistency, "v_2(norm) = " + std::to_string(v) + " not divisible by degree with 2 inert");
  return v / d;
}

bool is_s_unit(const InertPrimeContext&, const FieldElement& a) {
  if (a.is_zero()) return false;
  return is_power_of_two(abs(numerator_norm(a)));
}

}  // namespace zpflt

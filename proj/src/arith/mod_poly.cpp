#include "zpflt/arith/mod_poly.hpp"

namespace zpflt {

namespace {

void check_modulus(std::uint64_t q) {
  if (q < 2 || q >= (std::uint64_t{1} << 32) || !is_prime(q))
    fail(ErrorKind::invalid_argument, "modulus must be a prime below 2^32, got " + std::to_string(q));
}

}  // namespace

ModPolynomial::ModPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : q_(modulus), c_(std::move(coeffs)) {
  check_modulus(q_);
  for (auto& v : c_) v %= q_;
  trim();
}

ModPolynomial::ModPolynomial(std::uint64_t modulus, const IntPolynomial& f) : q_(modulus) {
  check_modulus(q_);
  c_.reserve(f.size());
  for (const auto& v : f.coeffs()) c_.push_back(mod_u64(v, q_));
  trim();
}

void ModPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) fail(ErrorKind::invalid_argument, "inverse of zero mod " + std::to_string(q));
  return modpow_u64(a, q - 2, q);
}

ModPolynomial ModPolynomial::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inverse_mod(c_.back(), q_);
  std::vector<std::uint64_t> c = c_;
  for (auto& v : c) v = mulmod_u64(v, inv, q_);
  return ModPolynomial(q_, std::move(c));
}

ModPolynomial ModPolynomial::derivative() const {
  if (c_.size() <= 1) return ModPolynomial(q_, std::vector<std::uint64_t>{});
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod_u64(c_[i], i % q_, q_);
  return ModPolynomial(q_, std::move(d));
}

std::uint64_t ModPolynomial::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= q_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod_u64(acc, x, q_) + *it) % q_;
  return acc;
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % a.q_;
  return ModPolynomial(a.q_, std::move(c));
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + a.q_ - b[i]) % a.q_;
  return ModPolynomial(a.q_, std::move(c));
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ModPolynomial(a.q_, std::vector<std::uint64_t>{});
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
  }
  std::vector<std::uint64_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint64_t>(acc[i] % a.q_);
  return ModPolynomial(a.q_, std::move(c));
}

std::pair<ModPolynomial, ModPolynomial> ModPolynomial::divmod(const ModPolynomial& b) const {
  if (b.is_zero()) fail(ErrorKind::invalid_argument, "mod-q polynomial division by zero");
  const int db = b.degree();
  if (degree() < db) return {ModPolynomial(q_, std::vector<std::uint64_t>{}), *this};
  std::vector<std::uint64_t> r = c_;
  std::vector<std::uint64_t> quo(static_cast<std::size_t>(degree() - db + 1), 0);
  const std::uint64_t inv = inverse_mod(b.lead(), q_);
  for (int k = degree(); k >= db; --k) {
    const std::uint64_t t = mulmod_u64(r[static_cast<std::size_t>(k)], inv, q_);
    if (t == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(k - db + j)];
      slot = (slot + q_ - mulmod_u64(t, b.c_[static_cast<std::size_t>(j)], q_)) % q_;
    }
  }
  return {ModPolynomial(q_, std::move(quo)), ModPolynomial(q_, std::move(r))};
}

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPolynomial powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& m) {
  ModPolynomial result(m.modulus(), std::vector<std::uint64_t>{1});
  result = result.rem(m);
  ModPolynomial b = base.rem(m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result).rem(m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b).rem(m);
  }
  return result;
}

std::vector<DegreeBucket> distinct_degree_factor(const ModPolynomial& f) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "distinct_degree_factor: degree must be >= 1");
  if (f.lead() != 1) fail(ErrorKind::invalid_argument, "distinct_degree_factor: polynomial must be monic");
  if (gcd(f, f.derivative()).degree() != 0)
    fail(ErrorKind::not_squarefree, "polynomial is not squarefree mod " + std::to_string(f.modulus()));

  const std::uint64_t q = f.modulus();
  const ModPolynomial x(q, std::vector<std::uint64_t>{0, 1});
  std::vector<DegreeBucket> out;
  ModPolynomial rest = f;
  ModPolynomial h = x;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, Integer(static_cast<unsigned long>(q)), rest);
    ModPolynomial g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.push_back({i, g});
      rest = rest.divmod(g).first;
      h = h.rem(rest);
    }
  }
  if (rest.degree() > 0) out.push_back({rest.degree(), rest.monic()});
  return out;
}

std::vector<std::uint64_t> roots_mod(const ModPolynomial& f) {
  std::vector<std::uint64_t> roots;
  if (f.degree() < 1) return roots;
  const std::uint64_t q = f.modulus();
  const ModPolynomial x(q, std::vector<std::uint64_t>{0, 1});
  // restrict to the product of the linear factors first
  ModPolynomial lin = gcd(f, powmod(x, Integer(static_cast<unsigned long>(q)), f) - x);
  if (lin.degree() < 1) return roots;
  for (std::uint64_t r = 0; r < q && static_cast<int>(roots.size()) < lin.degree(); ++r)
    if (lin.eval(r) == 0) roots.push_back(r);
  return roots;
}

}  // namespace zpflt

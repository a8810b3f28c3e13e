#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "zpflt/arith/integer.hpp"
#include "zpflt/error.hpp"

namespace zpflt {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The representation is kept trimmed: the leading coefficient is nonzero
/// unless the polynomial is zero, in which case the coefficient list is empty.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& s) { return Polynomial(std::vector<Scalar>{s}); }
  static Polynomial monomial(const Scalar& s, std::size_t deg) {
    std::vector<Scalar> c(deg + 1, Scalar(0));
    c[deg] = s;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  const std::vector<Scalar>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& lead() const { return c_.back(); }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// f(x + s), by repeated synthetic division (Taylor shift).
  Polynomial shift(const Scalar& s) const {
    std::vector<Scalar> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j-- > i;) a[j] += s * a[j + 1];
    }
    return Polynomial(std::move(a));
  }

  /// f(-x)
  Polynomial reflect() const {
    std::vector<Scalar> a = c_;
    for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
    return Polynomial(std::move(a));
  }

  Polynomial operator-() const {
    std::vector<Scalar> a = c_;
    for (auto& v : a) v = -v;
    return Polynomial(std::move(a));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

template <class Scalar>
std::string Polynomial<Scalar>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& v = c_[k];
    if (v == 0) continue;
    Scalar mag = v < 0 ? Scalar(-v) : v;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (!unit || k == 0) out += mag.get_str();
    if (k >= 1) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

/// Long division over a field: a = q*b + r with deg r < deg b.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                          const Polynomial<Scalar>& b) {
  if (b.is_zero()) fail(ErrorKind::invalid_argument, "polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Scalar>{}, a};
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Scalar t = r[static_cast<std::size_t>(k)] / lb;
    if (t == 0) continue;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b[static_cast<std::size_t>(j)];
  }
  return {Polynomial<Scalar>(std::move(q)), Polynomial<Scalar>(std::move(r))};
}

/// Remainder of a modulo a monic integer polynomial (exact over Z).
IntPolynomial rem_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b);

/// Positive gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPolynomial& f);
/// f / content(f), sign of the leading coefficient preserved.
IntPolynomial primitive_part(const IntPolynomial& f);

RatPolynomial to_rational(const IntPolynomial& f);

/// Extended gcd over Q: returns (g, s) with s*a == g (mod b), g monic gcd.
std::pair<RatPolynomial, RatPolynomial> inverse_mod(const RatPolynomial& a, const RatPolynomial& b);

/// Parses "c0,c1,...,cd" (ascending); throws invalid_argument on bad input.
IntPolynomial parse_coefficients(const std::string& text);
std::string format_coefficients(const IntPolynomial& f);

}  // namespace zpflt

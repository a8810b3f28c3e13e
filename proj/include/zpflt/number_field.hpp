#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zpflt/arith/polynomial.hpp"

namespace zpflt {

/// A number field presented as Q[x]/(f) with f monic integral. Arithmetic
/// happens in the order Z[theta][1/2].
class NumberField {
 public:
  /// Throws invalid_argument if f is not monic, has degree < 1, or has a
  /// vanishing discriminant. Irreducibility is assumed, not checked.
  static std::shared_ptr<const NumberField> create(IntPolynomial f);

  const IntPolynomial& polynomial() const { return f_; }
  int degree() const { return f_.degree(); }
  const Integer& disc() const { return disc_; }

 private:
  NumberField(IntPolynomial f, Integer disc) : f_(std::move(f)), disc_(std::move(disc)) {}

  IntPolynomial f_;
  Integer disc_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// numerator(theta) / 2^denom_exp with numerator given by power-basis
/// coordinates. Stored reduced: a positive denom_exp implies some odd coordinate.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Integer> coords, unsigned long denom_exp = 0);

  static FieldElement from_integer(FieldPtr field, const Integer& v);
  /// Throws not_representable unless the denominator is a power of two.
  static FieldElement from_rational(FieldPtr field, const Rational& v);
  static FieldElement theta(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Integer>& coords() const { return coords_; }
  unsigned long denom_exp() const { return denom_exp_; }

  bool is_zero() const;
  bool is_integral() const { return denom_exp_ == 0; }
  IntPolynomial numerator() const { return IntPolynomial(coords_); }
  /// max |coordinate| of the numerator
  Integer height() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  /// Throws invalid_argument on division by zero and not_representable when
  /// the quotient needs an odd denominator.
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Total order used for deterministic output: denom_exp, then coordinates.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Integer> coords_;
  unsigned long denom_exp_ = 0;
};

enum class ArithOp { add, sub, mul, div };

FieldElement nf_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// N(a) = Res(f, numerator) / 2^(d * denom_exp); N(0) = 0.
Rational norm(const FieldElement& a);

/// Res(f, numerator): the norm of the integral numerator.
Integer numerator_norm(const FieldElement& a);

struct SplittingPattern {
  std::vector<int> degrees;  // ascending

  int total() const;
  bool is_inert() const { return degrees.size() == 1; }
  bool all_equal() const;
  std::string to_string() const;

  friend bool operator==(const SplittingPattern&, const SplittingPattern&) = default;
};

/// Residue degrees of the factors of f mod q. Throws inconclusive when q
/// divides disc(f).
SplittingPattern splitting_pattern(const NumberField& field, std::uint64_t q);
SplittingPattern splitting_pattern(const IntPolynomial& f, std::uint64_t q);

/// p with f == (x - c)^d (mod p); realises the prime (p, theta - c).
class RamifiedPrimeContext {
 public:
  /// Throws invalid_context when the congruence fails for c.
  RamifiedPrimeContext(FieldPtr field, long p, long residue_point);
  /// Scans c = 0..p-1; throws invalid_context if no c works.
  static RamifiedPrimeContext find(FieldPtr field, long p);

  const FieldPtr& field() const { return field_; }
  long p() const { return p_; }
  long residue_point() const { return c_; }

 private:
  FieldPtr field_;
  long p_;
  long c_;
};

/// Image of a in O/(p, theta - c) = F_p.
long residue_at_p(const RamifiedPrimeContext& ctx, const FieldElement& a);

/// norm(a) == residue_at_p(a) (mod p). Requires degree == p^n.
bool check_norm_residue(const RamifiedPrimeContext& ctx, const FieldElement& a);

/// Witness that 2 is inert: f stays irreducible mod 2.
class InertPrimeContext {
 public:
  /// Throws inconclusive if 2 | disc(f), invalid_context if 2 is not inert.
  explicit InertPrimeContext(FieldPtr field);

  const FieldPtr& field() const { return field_; }

 private:
  FieldPtr field_;
};

/// Valuation at q = 2*O; a != 0.
long ord_at_q(const InertPrimeContext& ctx, const FieldElement& a);

/// True iff a != 0 and |N(numerator)| is a power of two.
bool is_s_unit(const InertPrimeContext& ctx, const FieldElement& a);

}  // namespace zpflt

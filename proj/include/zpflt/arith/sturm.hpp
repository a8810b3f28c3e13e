#pragma once

#include <vector>

#include "zpflt/arith/polynomial.hpp"

namespace zpflt {

/// Sturm chain f, f', -rem(...) kept over Z: each remainder is scaled by a
/// positive constant and made primitive, which preserves every sign the
/// sign-variation count depends on.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f);

/// Number of distinct real roots of a squarefree f. Throws not_squarefree
/// when gcd(f, f') is nonconstant and invalid_argument for the zero polynomial.
int sturm_real_root_count(const IntPolynomial& f);

/// Distinct real roots of f in the half-open interval (a, b].
int sturm_root_count_in(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b);

}  // namespace zpflt

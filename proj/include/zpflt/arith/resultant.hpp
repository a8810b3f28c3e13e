#pragma once

#include "zpflt/arith/polynomial.hpp"

namespace zpflt {

/// Res(f, g) by the subresultant pseudo-remainder sequence; exact over Z.
/// Res(f, 0) = 0; Res(f, c) = c^deg(f) for a nonzero constant c.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f'). Requires f monic of degree >= 1.
Integer poly_discriminant(const IntPolynomial& f);

}  // namespace zpflt

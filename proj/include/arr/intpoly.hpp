#pragma once

#include <vector>

#include "arr/rational.hpp"

namespace arr {

// Dense integer polynomial, coefficients constant-first, no trailing zeros.
// The zero polynomial is the empty vector.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    bool is_zero() const { return c.empty(); }
    long degree() const { return (long)c.size() - 1; }  // -1 for zero
    const Int& lead() const { return c.back(); }

    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);

// Division by a monic divisor; remainder comes out identically zero for the
// callers here (cyclotomic products divide x^m - 1 exactly).
void poly_divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot,
                       IntPoly& rem);

// x^m - 1.
IntPoly poly_x_pow_minus_one(long m);

// The m-th cyclotomic polynomial, computed by exact division of x^m - 1 by
// the product of the cyclotomic polynomials of the proper divisors of m.
IntPoly cyclotomic_poly(long m);

// Euler's totient.
long euler_phi(long m);

}  // namespace arr

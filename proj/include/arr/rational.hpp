#pragma once

#include <gmpxx.h>

#include <string>

namespace arr {

// Exact arithmetic backbone. Int is an arbitrary-precision integer, Rat a
// rational kept in lowest terms with positive denominator (GMP canonical
// form). Nothing in the library ever rounds except the report renderer.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// n choose 2, the pair count used throughout.
inline Int binom2(const Int& n) { return n * (n - 1) / 2; }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Renders an exact rational with `sig` significant digits, round-half-even.
// Deterministic; used only at the reporting boundary.
std::string decimal_string(const Rat& value, int sig = 12);

}  // namespace arr

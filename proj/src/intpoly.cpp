#include "arr/intpoly.hpp"

#include <algorithm>

#include "arr/errors.hpp"

namespace arr {

namespace {

void trim(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(c); }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return IntPoly(std::move(r));
}

void poly_divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot,
                       IntPoly& rem) {
    if (den.is_zero() || den.lead() != 1)
        throw CheckFailure("poly_divmod_monic: divisor must be monic");
    std::vector<Int> r = num.c;
    const long dd = den.degree();
    std::vector<Int> q;
    if ((long)r.size() > dd) q.assign(r.size() - dd, Int(0));
    for (long i = (long)r.size() - 1; i >= dd; --i) {
        Int coef = r[i];
        if (coef == 0) continue;
        q[i - dd] = coef;
        for (long j = 0; j <= dd; ++j) r[i - dd + j] -= coef * den.c[j];
    }
    quot = IntPoly(std::move(q));
    rem = IntPoly(std::move(r));
}

IntPoly poly_x_pow_minus_one(long m) {
    std::vector<Int> c(m + 1, Int(0));
    c[0] = -1;
    c[m] = 1;
    return IntPoly(std::move(c));
}

IntPoly cyclotomic_poly(long m) {
    if (m < 1) throw ParameterOutOfRange("cyclotomic_poly: m must be >= 1");
    std::vector<long> divisors;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    // phi[d] for every divisor d of m, smallest first.
    std::vector<IntPoly> phi(divisors.size());
    for (size_t i = 0; i < divisors.size(); ++i) {
        const long d = divisors[i];
        IntPoly prod({std::vector<Int>{Int(1)}});
        for (size_t j = 0; j < i; ++j)
            if (d % divisors[j] == 0) prod = poly_mul(prod, phi[j]);
        IntPoly quot, rem;
        poly_divmod_monic(poly_x_pow_minus_one(d), prod, quot, rem);
        if (!rem.is_zero())
            throw CheckFailure("cyclotomic_poly: inexact division");
        phi[i] = std::move(quot);
    }
    return phi.back();
}

long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace arr

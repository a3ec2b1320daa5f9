#include "arr/rational.hpp"

#include <cstdlib>

namespace arr {

namespace {

// Compares a/b against 10^e (a, b > 0), avoiding any rational construction.
int cmp_pow10(const Int& a, const Int& b, long e) {
    if (e >= 0) return cmp(a, Int(b * pow_int(10, (unsigned long)e)));
    return cmp(Int(a * pow_int(10, (unsigned long)(-e))), b);
}

}  // namespace

std::string decimal_string(const Rat& value, int sig) {
    if (value == 0) return "0";
    const bool neg = value < 0;
    Int a = abs(value.get_num());
    Int b = value.get_den();

    // Decimal exponent e with 10^e <= a/b < 10^{e+1}.
    long e = (long)mpz_sizeinbase(a.get_mpz_t(), 10) -
             (long)mpz_sizeinbase(b.get_mpz_t(), 10);
    while (cmp_pow10(a, b, e) < 0) --e;
    while (cmp_pow10(a, b, e + 1) >= 0) ++e;

    // q = a/b * 10^{sig-1-e}, rounded half-even to an integer with sig digits.
    long k = sig - 1 - e;
    Int num = a, den = b;
    if (k >= 0)
        num *= pow_int(10, (unsigned long)k);
    else
        den *= pow_int(10, (unsigned long)(-k));
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(Int(2 * r), den);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t())))
        ++q;
    if (q == pow_int(10, (unsigned long)sig)) {  // rounding carried over
        q = pow_int(10, (unsigned long)(sig - 1));
        ++e;
    }

    std::string digits = q.get_str();
    std::string out = neg ? "-" : "";
    if (e >= 0 && e <= 17) {
        long ip = e + 1;  // digits before the point
        if (ip >= sig) {
            out += digits + std::string(ip - sig, '0');
        } else {
            out += digits.substr(0, ip) + "." + digits.substr(ip);
        }
    } else if (e < 0 && e >= -9) {
        out += "0." + std::string(-e - 1, '0') + digits;
    } else {
        out += digits.substr(0, 1) + "." + digits.substr(1) + "e" +
               (e >= 0 ? "+" : "") + std::to_string(e);
    }
    return out;
}

}  // namespace arr

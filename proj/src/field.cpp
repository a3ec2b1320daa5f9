#include "arr/field.hpp"

#include <algorithm>
#include <sstream>

namespace arr {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

long mod_norm(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// ---- F_p[x] helpers. Polynomials are vector<long>, constant-first, entries
// ---- reduced mod p, no trailing zeros.

using FPoly = std::vector<long>;

void fp_trim(FPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly fp_mul(const FPoly& a, const FPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

long fp_inv_scalar(long a, long p) {
    // extended Euclid on integers
    long t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
    while (new_r != 0) {
        long q = r / new_r;
        long tmp_t = t - q * new_t;
        t = new_t;
        new_t = tmp_t;
        long tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw DivisionByZero("no inverse mod p");
    return mod_norm(t, p);
}

// a mod b (b nonzero, not necessarily monic).
FPoly fp_mod(FPoly a, const FPoly& b, long p) {
    const long ib = fp_inv_scalar(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long coef = (a.back() * ib) % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = mod_norm(a[shift + j] - coef * b[j], p);
        fp_trim(a);
    }
    return a;
}

FPoly fp_gcd(FPoly a, FPoly b, long p) {
    while (!b.empty()) {
        FPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {  // make monic
        long inv = fp_inv_scalar(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

// a^-1 mod modulus via extended Euclid in F_p[x].
FPoly fp_inv_mod(const FPoly& a, const FPoly& modulus, long p) {
    FPoly r0 = modulus, r1 = a, t0 = {}, t1 = {1};
    fp_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        FPoly q;
        FPoly rem = r0;
        const long inv_lead = fp_inv_scalar(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long coef = (rem.back() * inv_lead) % p;
            size_t shift = rem.size() - r1.size();
            q[shift] = coef;
            for (size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = mod_norm(rem[shift + j] - coef * r1[j], p);
            fp_trim(rem);
        }
        fp_trim(q);
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q * t1)
        FPoly qt = fp_mul(q, t1, p);
        FPoly nt(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < t0.size(); ++i) nt[i] = t0[i];
        for (size_t i = 0; i < qt.size(); ++i) nt[i] = mod_norm(nt[i] - qt[i], p);
        fp_trim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.size() != 1) throw DivisionByZero("element not invertible");
    const long inv = fp_inv_scalar(r0[0], p);
    for (auto& c : t0) c = (c * inv) % p;
    fp_trim(t0);
    return t0;
}

// x^(p^i) mod f, by iterating the Frobenius power.
FPoly fp_x_frobenius_pow(const FPoly& f, long p, int i) {
    FPoly r = {0, 1};  // x
    r = fp_mod(r, f, p);
    for (int step = 0; step < i; ++step) {
        // r <- r^p mod f by square-and-multiply on the exponent p
        FPoly base = r, acc = {1};
        long e = p;
        while (e > 0) {
            if (e & 1) acc = fp_mod(fp_mul(acc, base, p), f, p);
            base = fp_mod(fp_mul(base, base, p), f, p);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

bool fp_irreducible_gcd_test(const FPoly& f, long p, int k) {
    // f (monic, degree k) is reducible iff it shares a factor with
    // x^(p^i) - x for some i <= k/2.
    for (int i = 1; i <= k / 2; ++i) {
        FPoly xpi = fp_x_frobenius_pow(f, p, i);
        // xpi - x
        FPoly diff = xpi;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_norm(diff[1] - 1, p);
        fp_trim(diff);
        FPoly g = fp_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool fp_irreducible_exhaustive(const FPoly& f, long p, int k) {
    // Trial division by every monic polynomial of degree 1..k/2.
    for (int deg = 1; deg <= k / 2; ++deg) {
        std::vector<long> coeffs(deg, 0);
        while (true) {
            FPoly divisor(coeffs.begin(), coeffs.end());
            divisor.push_back(1);  // monic
            if (fp_mod(f, divisor, p).empty()) return false;
            int pos = 0;
            while (pos < deg && ++coeffs[pos] == p) coeffs[pos++] = 0;
            if (pos == deg) break;
        }
    }
    return true;
}

// ---- Q[x] helpers for cyclotomic arithmetic: vector<Rat>, constant-first.

using QPoly = std::vector<Rat>;

void q_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    q_trim(r);
    return r;
}

// a mod the (integer, monic) cyclotomic modulus.
QPoly q_mod_phi(QPoly a, const IntPoly& phi) {
    const size_t dd = phi.c.size() - 1;
    while (a.size() > dd) {
        Rat coef = a.back();
        size_t shift = a.size() - 1 - dd;
        if (coef != 0)
            for (size_t j = 0; j < dd; ++j)
                a[shift + j] -= coef * Rat(phi.c[j]);
        a.pop_back();
        q_trim(a);
    }
    return a;
}

// Extended Euclid in Q[x] against the modulus.
QPoly q_inv_mod_phi(const QPoly& a, const IntPoly& phi) {
    QPoly r0(phi.c.size());
    for (size_t i = 0; i < phi.c.size(); ++i) r0[i] = Rat(phi.c[i]);
    QPoly r1 = a, t0 = {}, t1 = {Rat(1)};
    q_trim(r1);
    while (!r1.empty()) {
        QPoly q;
        QPoly rem = r0;
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rat(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat coef = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = coef;
            for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= coef * r1[j];
            q_trim(rem);
        }
        q_trim(q);
        QPoly qt = q_mul(q, t1);
        QPoly nt(std::max(t0.size(), qt.size()), Rat(0));
        for (size_t i = 0; i < t0.size(); ++i) nt[i] = t0[i];
        for (size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
        q_trim(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.size() != 1) throw DivisionByZero("cyclotomic element not invertible");
    QPoly out = t0;
    for (auto& c : out) c /= r0[0];
    q_trim(out);
    return out;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- descriptor

int FieldDescriptor::degree() const {
    switch (kind) {
        case FieldKind::Rational: return 1;
        case FieldKind::FiniteField: return k;
        case FieldKind::Cyclotomic: return phi_m;
    }
    return 1;
}

Int FieldDescriptor::order() const {
    return pow_int(Int(p), (unsigned long)k);
}

std::string FieldDescriptor::name() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::FiniteField:
            return "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
        case FieldKind::Cyclotomic:
            return "Q(zeta_" + std::to_string(m) + ")";
    }
    return "?";
}

FieldDesc make_rational() {
    static const FieldDesc instance = [] {
        auto d = std::make_shared<FieldDescriptor>();
        d->kind = FieldKind::Rational;
        return FieldDesc(d);
    }();
    return instance;
}

FieldDesc make_finite_field(long p, int k) {
    if (!is_prime(p)) throw ParameterOutOfRange("GF: p must be prime");
    if (k < 1 || k > 24) throw ParameterOutOfRange("GF: bad extension degree");
    auto d = std::make_shared<FieldDescriptor>();
    d->kind = FieldKind::FiniteField;
    d->p = p;
    d->k = k;
    d->modulus = canonical_irreducible(p, k);
    return d;
}

FieldDesc make_cyclotomic(long m) {
    if (m < 1) throw ParameterOutOfRange("cyclotomic: m must be >= 1");
    auto d = std::make_shared<FieldDescriptor>();
    d->kind = FieldKind::Cyclotomic;
    d->m = m;
    d->phi = cyclotomic_poly(m);
    d->phi_m = (int)d->phi.degree();
    return d;
}

bool same_field(const FieldDesc& a, const FieldDesc& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case FieldKind::Rational: return true;
        case FieldKind::FiniteField: return a->p == b->p && a->k == b->k;
        case FieldKind::Cyclotomic: return a->m == b->m;
    }
    return false;
}

std::vector<long> canonical_irreducible(long p, int k) {
    if (!is_prime(p)) throw ParameterOutOfRange("p must be prime");
    if (k < 1) throw ParameterOutOfRange("k must be >= 1");
    // Walk coefficient vectors (c0,...,c_{k-1}) in lexicographic order,
    // constant coefficient most significant.
    std::vector<long> c(k, 0);
    while (true) {
        FPoly f(c.begin(), c.end());
        f.push_back(1);
        bool irr = (k == 1) ||
                   (k <= 4 ? fp_irreducible_exhaustive(f, p, k)
                           : fp_irreducible_gcd_test(f, p, k));
        if (irr) return std::vector<long>(f.begin(), f.end());
        int pos = k - 1;
        while (pos >= 0 && ++c[pos] == p) c[pos--] = 0;
        if (pos < 0)
            throw CheckFailure("no irreducible polynomial found");  // unreachable
    }
}

// ------------------------------------------------------------------ elements

FieldElement::FieldElement(FieldDesc desc, Rat value)
    : desc_(std::move(desc)), payload_(std::move(value)) {
    if (desc_->kind != FieldKind::Rational)
        throw DescriptorMismatch("rational payload in non-rational field");
    std::get<Rat>(payload_).canonicalize();
}

FieldElement::FieldElement(FieldDesc desc, std::vector<long> coeff)
    : desc_(std::move(desc)), payload_(std::move(coeff)) {
    if (desc_->kind != FieldKind::FiniteField)
        throw DescriptorMismatch("coefficient payload in non-finite field");
    auto& c = std::get<std::vector<long>>(payload_);
    if ((int)c.size() != desc_->k) throw BadFieldElement("wrong payload length");
    for (auto& x : c) x = mod_norm(x, desc_->p);
}

FieldElement::FieldElement(FieldDesc desc, std::vector<Rat> coeff)
    : desc_(std::move(desc)), payload_(std::move(coeff)) {
    if (desc_->kind != FieldKind::Cyclotomic)
        throw DescriptorMismatch("cyclotomic payload in non-cyclotomic field");
    auto& c = std::get<std::vector<Rat>>(payload_);
    if ((int)c.size() != desc_->phi_m)
        throw BadFieldElement("wrong payload length");
    for (auto& x : c) x.canonicalize();
}

FieldElement FieldElement::zero(const FieldDesc& desc) {
    return from_integer(desc, 0);
}

FieldElement FieldElement::one(const FieldDesc& desc) {
    return from_integer(desc, 1);
}

FieldElement FieldElement::from_integer(const FieldDesc& desc, long n) {
    switch (desc->kind) {
        case FieldKind::Rational: return FieldElement(desc, Rat(n));
        case FieldKind::FiniteField: {
            std::vector<long> c(desc->k, 0);
            c[0] = mod_norm(n, desc->p);
            return FieldElement(desc, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            std::vector<Rat> c(desc->phi_m, Rat(0));
            c[0] = Rat(n);
            return FieldElement(desc, std::move(c));
        }
    }
    throw CheckFailure("unreachable");
}

FieldElement FieldElement::from_rational(const FieldDesc& desc, const Rat& v) {
    switch (desc->kind) {
        case FieldKind::Rational: return FieldElement(desc, v);
        case FieldKind::FiniteField: {
            // floor-division remainders are non-negative for positive p
            Int num = v.get_num(), den = v.get_den();
            long dm = (long)mpz_fdiv_ui(den.get_mpz_t(), desc->p);
            if (dm == 0) throw BadFieldElement("denominator divisible by p");
            long nm = (long)mpz_fdiv_ui(num.get_mpz_t(), desc->p);
            std::vector<long> c(desc->k, 0);
            c[0] = (nm * fp_inv_scalar(dm, desc->p)) % desc->p;
            return FieldElement(desc, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            std::vector<Rat> c(desc->phi_m, Rat(0));
            c[0] = v;
            return FieldElement(desc, std::move(c));
        }
    }
    throw CheckFailure("unreachable");
}

bool FieldElement::is_zero() const {
    switch (desc_->kind) {
        case FieldKind::Rational: return std::get<Rat>(payload_) == 0;
        case FieldKind::FiniteField: {
            for (long c : std::get<std::vector<long>>(payload_))
                if (c != 0) return false;
            return true;
        }
        case FieldKind::Cyclotomic: {
            for (const Rat& c : std::get<std::vector<Rat>>(payload_))
                if (c != 0) return false;
            return true;
        }
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(desc_); }

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (!same_field(desc_, rhs.desc_))
        throw DescriptorMismatch(desc_->name() + " vs " + rhs.desc_->name());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same_field(rhs);
    switch (desc_->kind) {
        case FieldKind::Rational:
            return FieldElement(desc_, Rat(std::get<Rat>(payload_) +
                                           std::get<Rat>(rhs.payload_)));
        case FieldKind::FiniteField: {
            auto c = std::get<std::vector<long>>(payload_);
            const auto& d = std::get<std::vector<long>>(rhs.payload_);
            for (size_t i = 0; i < c.size(); ++i)
                c[i] = mod_norm(c[i] + d[i], desc_->p);
            return FieldElement(desc_, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            auto c = std::get<std::vector<Rat>>(payload_);
            const auto& d = std::get<std::vector<Rat>>(rhs.payload_);
            for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            return FieldElement(desc_, std::move(c));
        }
    }
    throw CheckFailure("unreachable");
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return *this + (-rhs);
}

FieldElement FieldElement::operator-() const {
    switch (desc_->kind) {
        case FieldKind::Rational:
            return FieldElement(desc_, Rat(-std::get<Rat>(payload_)));
        case FieldKind::FiniteField: {
            auto c = std::get<std::vector<long>>(payload_);
            for (auto& x : c) x = mod_norm(-x, desc_->p);
            return FieldElement(desc_, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            auto c = std::get<std::vector<Rat>>(payload_);
            for (auto& x : c) x = -x;
            return FieldElement(desc_, std::move(c));
        }
    }
    throw CheckFailure("unreachable");
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same_field(rhs);
    switch (desc_->kind) {
        case FieldKind::Rational:
            return FieldElement(desc_, Rat(std::get<Rat>(payload_) *
                                           std::get<Rat>(rhs.payload_)));
        case FieldKind::FiniteField: {
            const auto& a = std::get<std::vector<long>>(payload_);
            const auto& b = std::get<std::vector<long>>(rhs.payload_);
            FPoly prod = fp_mul(FPoly(a.begin(), a.end()),
                                FPoly(b.begin(), b.end()), desc_->p);
            FPoly red = fp_mod(prod, FPoly(desc_->modulus.begin(),
                                           desc_->modulus.end()),
                               desc_->p);
            red.resize(desc_->k, 0);
            return FieldElement(desc_, std::vector<long>(red.begin(), red.end()));
        }
        case FieldKind::Cyclotomic: {
            const auto& a = std::get<std::vector<Rat>>(payload_);
            const auto& b = std::get<std::vector<Rat>>(rhs.payload_);
            QPoly prod = q_mul(QPoly(a.begin(), a.end()),
                               QPoly(b.begin(), b.end()));
            QPoly red = q_mod_phi(std::move(prod), desc_->phi);
            red.resize(desc_->phi_m, Rat(0));
            return FieldElement(desc_, std::vector<Rat>(red.begin(), red.end()));
        }
    }
    throw CheckFailure("unreachable");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    switch (desc_->kind) {
        case FieldKind::Rational:
            return FieldElement(desc_, Rat(1 / std::get<Rat>(payload_)));
        case FieldKind::FiniteField: {
            const auto& a = std::get<std::vector<long>>(payload_);
            FPoly inv = fp_inv_mod(FPoly(a.begin(), a.end()),
                                   FPoly(desc_->modulus.begin(),
                                         desc_->modulus.end()),
                                   desc_->p);
            inv.resize(desc_->k, 0);
            return FieldElement(desc_, std::vector<long>(inv.begin(), inv.end()));
        }
        case FieldKind::Cyclotomic: {
            const auto& a = std::get<std::vector<Rat>>(payload_);
            QPoly inv = q_inv_mod_phi(QPoly(a.begin(), a.end()), desc_->phi);
            inv.resize(desc_->phi_m, Rat(0));
            return FieldElement(desc_, std::vector<Rat>(inv.begin(), inv.end()));
        }
    }
    throw CheckFailure("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same_field(rhs);
    return payload_ == rhs.payload_;
}

std::string FieldElement::encode() const {
    switch (desc_->kind) {
        case FieldKind::Rational: return rat_str(std::get<Rat>(payload_));
        case FieldKind::FiniteField: {
            const auto& c = std::get<std::vector<long>>(payload_);
            std::string s = "[";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(c[i]);
            }
            return s + "]";
        }
        case FieldKind::Cyclotomic: {
            const auto& c = std::get<std::vector<Rat>>(payload_);
            std::string s = "[";
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += rat_str(c[i]);
            }
            return s + "]";
        }
    }
    return "";
}

bool FieldElement::is_real() const {
    switch (desc_->kind) {
        case FieldKind::Rational: return true;
        case FieldKind::FiniteField: return false;
        case FieldKind::Cyclotomic: {
            // Apply zeta -> zeta^(m-1) to the power basis and compare.
            const auto& c = std::get<std::vector<Rat>>(payload_);
            const long m = desc_->m;
            QPoly conj;
            for (size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                long e = (long)((m - (long)i) % m);
                if ((size_t)e + 1 > conj.size()) conj.resize(e + 1, Rat(0));
                conj[e] += c[i];
            }
            q_trim(conj);
            QPoly red = q_mod_phi(std::move(conj), desc_->phi);
            red.resize(desc_->phi_m, Rat(0));
            return std::vector<Rat>(red.begin(), red.end()) == c;
        }
    }
    return false;
}

const Rat& FieldElement::rational_value() const {
    if (desc_->kind != FieldKind::Rational)
        throw DescriptorMismatch("not a rational element");
    return std::get<Rat>(payload_);
}

const std::vector<long>& FieldElement::finite_coeffs() const {
    if (desc_->kind != FieldKind::FiniteField)
        throw DescriptorMismatch("not a finite field element");
    return std::get<std::vector<long>>(payload_);
}

const std::vector<Rat>& FieldElement::cyclo_coeffs() const {
    if (desc_->kind != FieldKind::Cyclotomic)
        throw DescriptorMismatch("not a cyclotomic element");
    return std::get<std::vector<Rat>>(payload_);
}

// ------------------------------------------------------------ roots of unity

std::vector<FieldElement> finite_field_elements(const FieldDesc& desc) {
    if (desc->kind != FieldKind::FiniteField)
        throw DescriptorMismatch("finite_field_elements");
    std::vector<FieldElement> out;
    std::vector<long> c(desc->k, 0);
    while (true) {
        out.push_back(FieldElement(desc, c));
        int pos = 0;
        while (pos < desc->k && ++c[pos] == desc->p) c[pos++] = 0;
        if (pos == desc->k) break;
    }
    // canonical encoding order
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) {
                  return a.encode() < b.encode();
              });
    return out;
}

namespace {

FieldElement ff_pow(const FieldElement& base, Int e) {
    FieldElement acc = FieldElement::one(base.field());
    FieldElement b = base;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Least multiplicative generator under canonical encoding order. Brute
// force order test; fine for the coordinate-level field sizes used here.
FieldElement least_generator(const FieldDesc& desc) {
    const Int q1 = desc->order() - 1;
    if (!q1.fits_slong_p() || q1 > (1L << 24))
        throw ParameterOutOfRange("field too large for generator search");
    const std::vector<long> fs = prime_factors(q1.get_si());
    for (const FieldElement& g : finite_field_elements(desc)) {
        if (g.is_zero()) continue;
        bool primitive = true;
        for (long f : fs) {
            if (ff_pow(g, q1 / f).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw CheckFailure("no multiplicative generator found");
}

}  // namespace

FieldElement root_of_unity(const FieldDesc& desc, long n) {
    if (n < 1) throw ParameterOutOfRange("root_of_unity: n >= 1");
    switch (desc->kind) {
        case FieldKind::Rational:
            if (n == 1) return FieldElement::one(desc);
            if (n == 2) return FieldElement::from_integer(desc, -1);
            throw NoSuchRoot("Q has only 1st and 2nd roots of unity");
        case FieldKind::Cyclotomic: {
            if (desc->m % n != 0)
                throw NoSuchRoot("n does not divide m");
            const long e = desc->m / n;
            QPoly mono(e + 1, Rat(0));
            mono[e] = 1;
            QPoly red = q_mod_phi(std::move(mono), desc->phi);
            red.resize(desc->phi_m, Rat(0));
            return FieldElement(desc, std::vector<Rat>(red.begin(), red.end()));
        }
        case FieldKind::FiniteField: {
            const Int q1 = desc->order() - 1;
            if (q1 % n != 0)
                throw NoSuchRoot("n does not divide p^k - 1");
            return ff_pow(least_generator(desc), q1 / n);
        }
    }
    throw CheckFailure("unreachable");
}

FieldElement cyclotomic_monomial(const FieldDesc& desc, long e) {
    if (desc->kind != FieldKind::Cyclotomic)
        throw DescriptorMismatch("cyclotomic_monomial");
    long r = e % desc->m;
    if (r < 0) r += desc->m;
    QPoly mono(r + 1, Rat(0));
    mono[r] = 1;
    QPoly red = q_mod_phi(std::move(mono), desc->phi);
    red.resize(desc->phi_m, Rat(0));
    return FieldElement(desc, std::vector<Rat>(red.begin(), red.end()));
}

// -------------------------------------------------------------------- parse

namespace {

Rat parse_rat_token(const std::string& t) {
    if (t.empty()) throw BadFieldElement("empty rational");
    size_t slash = t.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) throw BadFieldElement("empty integer");
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw BadFieldElement("bare sign");
        for (; i < s.size(); ++i)
            if (!isdigit((unsigned char)s[i]))
                throw BadFieldElement("bad integer: " + s);
    };
    if (slash == std::string::npos) {
        check_int(t);
        return Rat(Int(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (!den.empty() && den[0] == '-')
        throw BadFieldElement("denominator must be positive");
    Int d(den);
    if (d == 0) throw BadFieldElement("zero denominator");
    return make_rat(Int(num), d);
}

std::vector<std::string> split_bracket_list(const std::string& t) {
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw BadFieldElement("expected [..] vector: " + t);
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 1; i + 1 < t.size(); ++i) {
        char ch = t[i];
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace((unsigned char)ch)) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

FieldElement parse_element(const FieldDesc& desc, const std::string& text) {
    switch (desc->kind) {
        case FieldKind::Rational:
            return FieldElement(desc, parse_rat_token(text));
        case FieldKind::FiniteField: {
            auto parts = split_bracket_list(text);
            if ((int)parts.size() != desc->k)
                throw BadFieldElement("expected " + std::to_string(desc->k) +
                                      " coefficients");
            std::vector<long> c(desc->k);
            for (int i = 0; i < desc->k; ++i) {
                Rat v = parse_rat_token(parts[i]);
                if (v.get_den() != 1)
                    throw BadFieldElement("non-integer coefficient");
                Int n = v.get_num();
                if (n < 0 || n >= desc->p)
                    throw BadFieldElement("coefficient out of 0..p-1");
                c[i] = mpz_get_si(n.get_mpz_t());
            }
            return FieldElement(desc, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            auto parts = split_bracket_list(text);
            if ((int)parts.size() != desc->phi_m)
                throw BadFieldElement("expected " +
                                      std::to_string(desc->phi_m) +
                                      " coefficients");
            std::vector<Rat> c(desc->phi_m);
            for (int i = 0; i < desc->phi_m; ++i)
                c[i] = parse_rat_token(parts[i]);
            return FieldElement(desc, std::move(c));
        }
    }
    throw CheckFailure("unreachable");
}

}  // namespace arr

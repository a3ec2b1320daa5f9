#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "arr/errors.hpp"
#include "arr/intpoly.hpp"
#include "arr/rational.hpp"

namespace arr {

enum class FieldKind { Rational, FiniteField, Cyclotomic };

// Immutable description of one of the three supported ground fields. Shared
// by every element living in that field.
//
// For GF(p^k) the modulus is the lexicographically smallest monic irreducible
// polynomial of degree k over F_p (coefficients constant-first), so element
// encodings are reproducible across runs and machines. For Q(zeta_m) the
// modulus is exactly the m-th cyclotomic polynomial.
class FieldDescriptor {
   public:
    FieldKind kind;
    long p = 0;                 // FiniteField characteristic
    int k = 0;                  // FiniteField extension degree
    std::vector<long> modulus;  // FiniteField: length k+1, monic
    long m = 0;                 // Cyclotomic index
    IntPoly phi;                // Cyclotomic modulus Phi_m
    int phi_m = 0;              // degree of Phi_m

    int degree() const;
    Int order() const;  // p^k; only meaningful for FiniteField
    std::string name() const;
};

using FieldDesc = std::shared_ptr<const FieldDescriptor>;

FieldDesc make_rational();
FieldDesc make_finite_field(long p, int k);
FieldDesc make_cyclotomic(long m);

bool same_field(const FieldDesc& a, const FieldDesc& b);

// Lexicographically smallest monic irreducible polynomial of degree k over
// F_p, constant-first, length k+1. Irreducibility is decided by exhaustive
// factor search for k <= 4 and by gcd tests with x^(p^i) - x above that.
std::vector<long> canonical_irreducible(long p, int k);

// An exact element of Q, GF(p^k), or Q(zeta_m). Payloads are always fully
// reduced, so two elements are equal iff their canonical encodings match
// byte for byte.
class FieldElement {
   public:
    FieldElement(FieldDesc desc, Rat value);                // Rational
    FieldElement(FieldDesc desc, std::vector<long> coeff);  // FiniteField
    FieldElement(FieldDesc desc, std::vector<Rat> coeff);   // Cyclotomic

    static FieldElement zero(const FieldDesc& desc);
    static FieldElement one(const FieldDesc& desc);
    // n * 1 in the field (reduced mod p for finite fields).
    static FieldElement from_integer(const FieldDesc& desc, long n);
    // Scalar embedding; finite fields reject non-integral denominators
    // unless the denominator is invertible mod p.
    static FieldElement from_rational(const FieldDesc& desc, const Rat& v);

    const FieldDesc& field() const { return desc_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;  // DivisionByZero on 0
    FieldElement operator/(const FieldElement& rhs) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    // Canonical text encoding, also the CLI wire format:
    //   Q:           n  or  n/d           (d > 0, lowest terms)
    //   GF(p,k):     [c0,c1,...,c_{k-1}]  constant-first, 0 <= ci < p
    //   Q(zeta_m):   [r0,r1,...]          length phi(m), power basis
    std::string encode() const;

    // True for rationals, false in positive characteristic, and for
    // cyclotomic elements exactly when conjugation zeta -> zeta^-1 fixes
    // the element. Purely symbolic; nothing is evaluated numerically.
    bool is_real() const;

    // Payload accessors (throw DescriptorMismatch on the wrong kind).
    const Rat& rational_value() const;
    const std::vector<long>& finite_coeffs() const;
    const std::vector<Rat>& cyclo_coeffs() const;

   private:
    FieldDesc desc_;
    std::variant<Rat, std::vector<long>, std::vector<Rat>> payload_;

    void check_same_field(const FieldElement& rhs) const;
};

// A fixed primitive n-th root of unity: zeta_m^(m/n) for Q(zeta_m) with
// n | m, g^((p^k-1)/n) for GF(p^k) with n | p^k - 1 (g the least generator
// of the multiplicative group in canonical encoding order), and +-1 for Q.
// Throws NoSuchRoot when the divisibility precondition fails.
FieldElement root_of_unity(const FieldDesc& desc, long n);

// zeta_m^e as an element of Q(zeta_m), e reduced mod m.
FieldElement cyclotomic_monomial(const FieldDesc& desc, long e);

// Parses the canonical text encoding. Throws BadFieldElement.
FieldElement parse_element(const FieldDesc& desc, const std::string& text);

// All q elements of a finite field in canonical encoding order.
std::vector<FieldElement> finite_field_elements(const FieldDesc& desc);

}  // namespace arr

#include <doctest.h>

#include "support.hpp"

using namespace arr;

namespace {

// Independent oracle for cyclotomic polynomials: Moebius inversion gives
// Phi_m * prod_{mu(d) = -1} (x^{m/d} - 1) = prod_{mu(d) = 1} (x^{m/d} - 1).
int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

bool moebius_identity_holds(long m, const IntPoly& phi) {
    IntPoly pos({std::vector<Int>{Int(1)}});
    IntPoly neg = pos;
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        const int mu = moebius(d);
        if (mu == 1) pos = poly_mul(pos, poly_x_pow_minus_one(m / d));
        if (mu == -1) neg = poly_mul(neg, poly_x_pow_minus_one(m / d));
    }
    return poly_mul(phi, neg) == pos;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly(std::vector<Int>{Int(-1), Int(1)}));        // x - 1
    CHECK(cyclotomic_poly(4) == IntPoly(std::vector<Int>{Int(1), Int(0), Int(1)}));  // x^2 + 1
    CHECK(cyclotomic_poly(12) ==
          IntPoly(std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)}));  // x^4 - x^2 + 1
    for (long m = 1; m <= 64; ++m) {
        const IntPoly phi = cyclotomic_poly(m);
        CHECK(phi.degree() == euler_phi(m));
        CHECK(phi.lead() == 1);
        CHECK(moebius_identity_holds(m, phi));
        IntPoly q, r;
        poly_divmod_monic(poly_x_pow_minus_one(m), phi, q, r);
        CHECK(r.is_zero());  // Phi_m divides x^m - 1 exactly
    }
}

TEST_CASE("canonical irreducible polynomials") {
    using V = std::vector<long>;
    CHECK(canonical_irreducible(2, 1) == V{0, 1});     // x
    CHECK(canonical_irreducible(2, 2) == V{1, 1, 1});  // x^2 + x + 1
    CHECK(canonical_irreducible(3, 2) == V{1, 0, 1});  // x^2 + 1

    // no roots in F_p for k >= 2
    for (auto [p, k] : std::vector<std::pair<long, int>>{
             {2, 2}, {2, 3}, {2, 8}, {3, 3}, {5, 2}, {7, 2}}) {
        const auto f = canonical_irreducible(p, k);
        for (long x = 0; x < p; ++x) {
            long v = 0, xp = 1;
            for (long c : f) {
                v = (v + c * xp) % p;
                xp = (xp * x) % p;
            }
            CHECK(v != 0);
        }
    }

    // independent irreducibility witness: with a reducible modulus some
    // nonzero residue would have no inverse; check exhaustively
    for (auto [p, k] : std::vector<std::pair<long, int>>{{2, 5}, {3, 3}, {2, 8}}) {
        const FieldDesc desc = make_finite_field(p, k);
        for (const FieldElement& e : finite_field_elements(desc)) {
            if (e.is_zero()) continue;
            CHECK((e * e.inverse()).is_one());
        }
    }
}

TEST_CASE("element arithmetic examples") {
    const FieldDesc gf4 = make_finite_field(2, 2);
    const FieldElement one4 = FieldElement::one(gf4);
    CHECK((one4 + one4).is_zero());  // characteristic 2

    const FieldDesc q3 = make_cyclotomic(3);
    const FieldElement z = root_of_unity(q3, 3);
    CHECK((z * (z * z)).is_one());  // zeta_3 * zeta_3^2 = 1

    const FieldDesc q = make_rational();
    const FieldElement two_thirds = FieldElement::from_rational(q, make_rat(2, 3));
    CHECK(two_thirds.inverse() == FieldElement::from_rational(q, make_rat(3, 2)));

    CHECK_THROWS_AS(FieldElement::zero(q).inverse(), DivisionByZero);
    CHECK_THROWS_AS((void)(FieldElement::one(q) + one4), DescriptorMismatch);
}

TEST_CASE("roots of unity") {
    const FieldDesc q3 = make_cyclotomic(3);
    const FieldElement z3 = root_of_unity(q3, 3);
    CHECK(z3.cyclo_coeffs() == std::vector<Rat>{Rat(0), Rat(1)});  // zeta itself

    // GF(7): the least generator is 3 (order 6); fixed cube root 3^2 = 2
    const FieldDesc gf7 = make_finite_field(7, 1);
    {
        long g = 0;
        for (long cand = 2; cand < 7; ++cand) {
            long pow = 1;
            int order = 0;
            do {
                pow = (pow * cand) % 7;
                ++order;
            } while (pow != 1);
            if (order == 6) {
                g = cand;
                break;
            }
        }
        CHECK(g == 3);
        CHECK((g * g) % 7 == 2);
    }
    CHECK(root_of_unity(gf7, 3) == FieldElement::from_integer(gf7, 2));

    CHECK_THROWS_AS(root_of_unity(make_finite_field(5, 1), 3), NoSuchRoot);
    CHECK_THROWS_AS(root_of_unity(make_cyclotomic(8), 3), NoSuchRoot);
    CHECK(root_of_unity(make_rational(), 2) ==
          FieldElement::from_integer(make_rational(), -1));
}

TEST_CASE("realness is a symbolic conjugation test") {
    const FieldDesc q = make_rational();
    CHECK(FieldElement::from_rational(q, make_rat(5, 7)).is_real());

    const FieldDesc q3 = make_cyclotomic(3);
    CHECK(!root_of_unity(q3, 3).is_real());

    const FieldDesc q8 = make_cyclotomic(8);
    const FieldElement z8 = root_of_unity(q8, 8);
    CHECK((z8 + z8.inverse()).is_real());  // zeta + zeta^-1 = 2 cos(pi/4)
    CHECK(!z8.is_real());
    CHECK(!(z8 - z8.inverse()).is_real());  // purely imaginary

    CHECK(!FieldElement::one(make_finite_field(3, 1)).is_real());
}

TEST_CASE("field axioms on random samples") {
    testing::Rng rng(20240817);
    for (const FieldDesc& desc :
         {make_rational(), make_finite_field(3, 2), make_finite_field(2, 3),
          make_cyclotomic(12)}) {
        for (int iter = 0; iter < 40; ++iter) {
            const FieldElement a = testing::random_element(desc, rng);
            const FieldElement b = testing::random_element(desc, rng);
            const FieldElement c = testing::random_element(desc, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == FieldElement::zero(desc));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("degenerate cyclotomic indices") {
    // Q(zeta_1) and Q(zeta_2) are copies of Q with 1-dimensional payloads
    for (long m : {1L, 2L}) {
        const FieldDesc desc = make_cyclotomic(m);
        CHECK(desc->phi_m == 1);
        const FieldElement z = root_of_unity(desc, m);
        CHECK(z == FieldElement::from_integer(desc, m == 1 ? 1 : -1));
        CHECK(z.is_real());
        CHECK((z * z).is_one());
        const FieldElement half = FieldElement::from_rational(desc, make_rat(1, 2));
        CHECK((half + half).is_one());
        CHECK(half.encode() == "[1/2]");
    }
}

TEST_CASE("canonical encoding is injective and round-trips") {
    testing::Rng rng(7);
    for (const FieldDesc& desc :
         {make_rational(), make_finite_field(5, 2), make_cyclotomic(8)}) {
        for (int iter = 0; iter < 30; ++iter) {
            const FieldElement a = testing::random_element(desc, rng);
            const FieldElement b = testing::random_element(desc, rng);
            if (a.encode() == b.encode()) CHECK((a - b).is_zero());
            CHECK(parse_element(desc, a.encode()) == a);
        }
    }
    const FieldDesc q = make_rational();
    CHECK_THROWS_AS(parse_element(q, "1/-2"), BadFieldElement);
    CHECK_THROWS_AS(parse_element(q, "x"), BadFieldElement);
    CHECK_THROWS_AS(parse_element(make_finite_field(3, 1), "[4]"),
                    BadFieldElement);
    CHECK_THROWS_AS(parse_element(make_finite_field(3, 2), "[1]"),
                    BadFieldElement);
}

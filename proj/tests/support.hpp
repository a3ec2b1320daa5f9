#pragma once

#include <random>

#include "arr/families.hpp"
#include "arr/projgeom.hpp"

namespace arr::testing {

using Rng = std::mt19937_64;

inline FieldElement random_element(const FieldDesc& desc, Rng& rng) {
    switch (desc->kind) {
        case FieldKind::Rational: {
            std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
            return FieldElement::from_rational(desc,
                                               make_rat(num(rng), den(rng)));
        }
        case FieldKind::FiniteField: {
            std::uniform_int_distribution<long> coef(0, desc->p - 1);
            std::vector<long> c(desc->k);
            for (auto& x : c) x = coef(rng);
            return FieldElement(desc, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            std::uniform_int_distribution<long> coef(-3, 3);
            std::vector<Rat> c(desc->phi_m);
            for (auto& x : c) x = Rat(coef(rng));
            return FieldElement(desc, std::move(c));
        }
    }
    throw Error("unreachable");
}

inline FieldElement random_nonzero(const FieldDesc& desc, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        FieldElement e = random_element(desc, rng);
        if (!e.is_zero()) return e;
    }
    throw Error("random_nonzero ran dry");
}

inline ProjPoint random_point(const FieldDesc& desc, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        FieldElement x = random_element(desc, rng);
        FieldElement y = random_element(desc, rng);
        FieldElement z = random_element(desc, rng);
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        return ProjPoint::make(std::move(x), std::move(y), std::move(z));
    }
    throw Error("random_point ran dry");
}

inline ProjLine random_line(const FieldDesc& desc, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        FieldElement a = random_element(desc, rng);
        FieldElement b = random_element(desc, rng);
        FieldElement c = random_element(desc, rng);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        return ProjLine::make(std::move(a), std::move(b), std::move(c));
    }
    throw Error("random_line ran dry");
}

inline Projectivity random_projectivity(const FieldDesc& desc, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::array<FieldElement, 9> m = {
            random_element(desc, rng), random_element(desc, rng),
            random_element(desc, rng), random_element(desc, rng),
            random_element(desc, rng), random_element(desc, rng),
            random_element(desc, rng), random_element(desc, rng),
            random_element(desc, rng)};
        try {
            return Projectivity::make(std::move(m));
        } catch (const DegenerateQuad&) {
        } catch (const ZeroVector&) {
        }
    }
    throw Error("random_projectivity ran dry");
}

inline Arrangement transformed(const Arrangement& arr, const Projectivity& t) {
    return Arrangement::make(arr.desc, apply_lines(t, arr.lines),
                             arr.provenance + "'");
}

}  // namespace arr::testing

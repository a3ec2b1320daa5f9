#pragma once

#include "arr/incidence.hpp"

namespace arr {

enum class Family {
    Pencil,
    NearPencil,
    GeneralPosition,
    CompleteQuadrilateral,
    Polygon,
    Ceva,
    DualHesse,
    Hesse,
    FiniteProjectivePlane,
    RightTriangleArray,
};

const char* to_string(Family f);
// Accepts the kebab-case CLI spellings ("near-pencil", "pg", "rta", ...).
Family family_from_string(const std::string& name);

struct FamilySpec {
    Family family;
    long n = 0;  // d for pencil/near-pencil/general-position, n otherwise
    long p = 0;  // finite projective plane; Ceva field override
    long k = 0;  // 0 for Ceva means: smallest k with n | p^k - 1

    std::string to_string() const;
};

// Closed-form t-vector for a family instance (counts at coinciding
// multiplicities merge, e.g. Ceva(3) lands all 12 triple points in t3).
TVector expected_tvector(const FamilySpec& spec);

// Builds the arrangement by coordinates and cross-validates its computed
// t-vector against expected_tvector, throwing GeneratorMismatch on any
// deviation. Fields: Q for the rational families, Q(zeta_4n) for polygons,
// Q(zeta_n) or GF(p^k) for Ceva, Q(zeta_3) for the Hesse pair, GF(p^k) for
// finite projective planes.
Arrangement generate(const FamilySpec& spec);

// Adds j general lines on the t-vector level: d' = d + j,
// t2' = t2 + j*d + C(j,2). Re-verifies the pair identity.
TVector augment_general(const TVector& tv, long j);

// Adds j explicit lines from the moment curve {x + t y + t^2 z = 0} to a
// rational arrangement, each accepted only after an exact check that it
// avoids every existing intersection point (so it contributes nodes only).
// The result's computed t-vector must equal augment_general of the input's.
Arrangement augment_coords(const Arrangement& arr, long j);

// n concurrent lines plus k moment-curve lines avoiding concurrences; the
// finite proxy for asymptotically trivial families.
Arrangement pencil_plus_fixed(long n, long k);
TVector pencil_plus_fixed_tvector(long n, long k);

}  // namespace arr

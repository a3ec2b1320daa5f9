#pragma once

#include <optional>

#include "arr/incidence.hpp"

namespace arr {

// Chern numbers of an arrangement, defined purely in terms of its t-vector:
//   c1sq = 9 - 5d + sum (3m-4) t_m
//   c2   = 3 - 2d + sum (m-1) t_m
// slope is c1sq/c2 (absent when c2 = 0), h_linear the linear H-constant.
struct ChernInvariants {
    long d = 0;
    Int c1sq;
    Int c2;
    std::optional<Rat> slope;
    std::optional<Rat> h_linear;
};

ChernInvariants chern(const TVector& tv);

struct SlopeBoundsReport {
    bool applicable = false;  // requires t_d = t_{d-1} = 0
    bool lower_ok = false;    // (2d-6)/(d-2) <= slope
    bool upper_ok = false;    // slope <= 3
    bool lower_equality = false;
    bool upper_equality = false;
    bool lower_class_ok = false;  // lower equality <=> only double points
    bool upper_class_ok = false;  // upper equality <=> sum t_m = d
    bool ok() const {
        return !applicable ||
               (lower_ok && upper_ok && lower_class_ok && upper_class_ok);
    }
};

SlopeBoundsReport slope_bounds_check(const TVector& tv);

// True iff c1sq > 0 and c2 > 0. Throws NotApplicable unless
// t_d = t_{d-1} = 0.
bool positivity_check(const TVector& tv);

// (d^2 - sum m^2 t_m) / sum t_m. Also evaluates the equivalent form
// (3 - (c1sq - 2 c2)) / (d - (c1sq - 3 c2)) - 2 and asserts agreement;
// the two coincide exactly when the pair identity holds, which is the case
// for every incidence-derived t-vector. Throws EmptyPointSet.
Rat h_linear(const TVector& tv);
bool h_linear_forms_agree(const TVector& tv);

// c2 >= (m_max - 2)(d - m_max - 1). Throws NotApplicable for trivial or
// quasi-trivial input.
bool c2_lower_bound_check(const TVector& tv, long m_max);

// Cell structure counts of a real arrangement on the real projective plane:
// f0 vertices, f1 edges, f2 faces, Euler characteristic 1. simplicial means
// every face is a triangle, decided combinatorially by 3 f2 = 2 f1.
struct FaceData {
    Int f0, f1, f2;
    bool simplicial = false;
};

// Throws NotReal when the caller cannot vouch for real realizability.
// Asserts the identity 5 c2 - 2 c1sq = 2 f1 - 3 f2.
FaceData face_counts(const TVector& tv, bool realizable_over_reals);

enum class FieldClass { RealEmbeddable, ComplexOnly, PositiveChar };
const char* to_string(FieldClass fc);

struct CeilingReport {
    bool applicable = false;
    FieldClass field_class = FieldClass::PositiveChar;
    bool slope_ok = false;      // against the class ceiling
    bool equality = false;      // slope equals the ceiling
    bool equality_class_ok = true;  // equality matches its characterization
    bool h_ok = true;           // H_L >= -4, ComplexOnly classes only
    std::string finding;        // human-readable counterexample note
    bool ok() const {
        return !applicable || (slope_ok && equality_class_ok && h_ok);
    }
};

// Field-specific slope ceilings: 5/2 over the reals (equality iff
// simplicial), 8/3 in characteristic zero (equality iff dual Hesse,
// plus the H_L >= -4 bound), 3 in positive characteristic.
CeilingReport field_ceiling_check(const TVector& tv, FieldClass fc);

// Caller-side derivation of the field class from an arrangement's
// descriptor and an is_real scan of its coefficients.
FieldClass classify_field(const Arrangement& arr);

}  // namespace arr

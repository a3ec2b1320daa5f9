#pragma once

#include "arr/families.hpp"
#include "arr/invariants.hpp"

namespace arr {

// Limit of the augmented slope when a base family with slope limit c and
// c1sq ~ a * l^h receives floor(x * l^(h-1)) extra general lines:
//   h < 2:  f(x) = (a + 2x) / (a/c + x)
//   h = 2:  g(x) = (a + 2x + x^2) / (a/c + x + x^2/2)
Rat limit_function(const Rat& a, const Rat& c, bool h_is_two, const Rat& x);

// floor(x * l^(h-1)) in exact integer arithmetic; the h = 3/2 case reduces
// to an integer square root of x^2 * l.
long general_lines_to_add(const Rat& x, long l, bool h_is_two);

enum class SweepFamily { FiniteProjectivePlane, Polygon };

struct SweepRow {
    long param = 0;  // exponent e (q = 2^e) for the plane family, n for polygons
    long l = 0;      // base line count
    long d_add = 0;  // general lines added
    Rat slope;
    Rat target;
    Rat gap;
    Rat h_l;
};

// One row per parameter: base t-vector (coordinate-verified for small
// parameters, closed-form beyond), augmented by the floor formula, compared
// against the family's limit function. h must be 3/2 or 2.
std::vector<SweepRow> density_sweep(SweepFamily family, const Rat& h,
                                    const Rat& x, long lo, long hi);

// Limit constants a and c per sweep family, confirmed by the symbolic-limit
// checks in the test suite before being baked in here.
void sweep_constants(SweepFamily family, Rat& a, Rat& c);

std::string sweep_csv(const std::vector<SweepRow>& rows);
extern const char* const kSweepCsvHeader;

enum class SeriesFamily {
    RightTriangleArray,
    FiniteProjectivePlane,  // parameter runs over prime powers q
    Polygon,
    GeneralPosition,
    PencilPlusFixed3,  // pencil of n lines plus three fixed general lines
};

struct SeriesRow {
    long param = 0;
    long d = 0;
    Rat slope;
    Rat h_l;
};

// Exact slope and H_L per parameter. use_coords builds arrangements and
// computes incidence; otherwise the closed-form t-vectors are used. For the
// right-triangle family the computed slope is asserted equal to
// (38n^2 - 18n - 7) / (16n^2 - 8n - 2).
std::vector<SeriesRow> slope_series(SeriesFamily family, long lo, long hi,
                                    bool use_coords);

Rat right_triangle_slope_closed_form(long n);

struct GrowthRow {
    long param = 0;
    long d = 0;
    Int c2;
    Rat c2_over_d;
    bool bound_ok = false;  // c2 >= (m_max - 2)(d - m_max - 1)
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool c2_strictly_increasing = false;
    bool ratio_strictly_increasing = false;
    bool bounds_ok = false;
};

// c2 and c2/d along a family range; both must grow for families that are
// not asymptotically trivial proxies (PencilPlusFixed3 rows are computed
// as the bounded counter-witness).
GrowthReport c2_growth_report(SeriesFamily family, long lo, long hi);

}  // namespace arr

#pragma once

#include <map>
#include <string>
#include <vector>

#include "arr/projgeom.hpp"

namespace arr {

// A line arrangement: two or more pairwise distinct normalized lines over a
// single field. Duplicate input lines are rejected, never deduplicated.
struct Arrangement {
    FieldDesc desc;
    std::vector<ProjLine> lines;
    std::string provenance;  // family name + parameters, or "file"

    static Arrangement make(FieldDesc desc, std::vector<ProjLine> lines,
                            std::string provenance);
    long d() const { return (long)lines.size(); }
};

// One intersection point together with the sorted indices of the lines
// through it (always >= 2 of them).
struct IncidencePoint {
    ProjPoint pt;
    std::vector<int> lines;
    int multiplicity() const { return (int)lines.size(); }
};

// The data (P, L, I): points ordered by canonical encoding, plus the
// transposed view listing each line's points.
struct IncidenceStructure {
    long d = 0;
    std::vector<IncidencePoint> points;
    std::vector<std::vector<int>> points_on_line;  // per line, sorted
};

// All pairwise meets, grouped by canonical point encoding.
IncidenceStructure compute_incidence(const Arrangement& arr);

// d plus the multiset {t_m}. Construction from an IncidenceStructure
// enforces the pair identity C(d,2) = sum C(m,2) t_m; hand-entered vectors
// skip that gate and report it through pair_identity_check instead.
struct TVector {
    long d = 0;
    std::map<long, Int> counts;  // m -> t_m, only m with t_m > 0

    static TVector from_incidence(const IncidenceStructure& inc);
    static TVector hand(long d, std::map<long, Int> counts);

    Int t(long m) const;
    Int sum_t() const;       // number of points
    Int sum_mt() const;      // sum m * t_m
    Int sum_m2t() const;     // sum m^2 * t_m
    long max_multiplicity() const;  // 0 when no points

    bool operator==(const TVector&) const = default;
    std::string to_string() const;  // "d=9;t3=12"
};

TVector tvector(const IncidenceStructure& inc);

bool pair_identity_check(const TVector& tv);

enum class ArrClass { Trivial, QuasiTrivial, GeneralPosition, Other };

// Precondition: pair identity holds (from_incidence output always does).
ArrClass classify(const TVector& tv);
const char* to_string(ArrClass c);

struct PencilInfo {
    long m_max;     // maximum point multiplicity
    long residual;  // lines missing the maximizing point, d - m_max
    int point_index;     // first maximizing point in canonical order
};

PencilInfo largest_pencil(const IncidenceStructure& inc);

}  // namespace arr

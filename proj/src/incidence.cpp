#include "arr/incidence.hpp"

#include <algorithm>
#include <set>

namespace arr {

Arrangement Arrangement::make(FieldDesc desc, std::vector<ProjLine> lines,
                              std::string provenance) {
    if (lines.size() < 2)
        throw ParameterOutOfRange("an arrangement needs at least two lines");
    std::set<std::string> seen;
    for (const ProjLine& l : lines) {
        if (!same_field(l.field(), desc))
            throw DescriptorMismatch("line not over the declared field");
        if (!seen.insert(l.encode()).second)
            throw DuplicateLine(l.encode());
    }
    return Arrangement{std::move(desc), std::move(lines),
                       std::move(provenance)};
}

IncidenceStructure compute_incidence(const Arrangement& arr) {
    const int d = (int)arr.lines.size();
    struct MeetRec {
        std::string key;
        int i, j;
        int pt_slot;
    };
    std::vector<MeetRec> meets;
    meets.reserve((size_t)d * (d - 1) / 2);
    std::vector<ProjPoint> pts;
    pts.reserve(meets.capacity());
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            ProjPoint p = meet(arr.lines[i], arr.lines[j]);
            meets.push_back({p.encode(), i, j, (int)pts.size()});
            pts.push_back(std::move(p));
        }
    }
    std::sort(meets.begin(), meets.end(),
              [](const MeetRec& a, const MeetRec& b) { return a.key < b.key; });

    IncidenceStructure inc;
    inc.d = d;
    inc.points_on_line.assign(d, {});
    size_t lo = 0;
    while (lo < meets.size()) {
        size_t hi = lo;
        while (hi < meets.size() && meets[hi].key == meets[lo].key) ++hi;
        std::set<int> lineset;
        for (size_t t = lo; t < hi; ++t) {
            lineset.insert(meets[t].i);
            lineset.insert(meets[t].j);
        }
        const long m = (long)lineset.size();
        // a group of pairwise meets covering m lines must contain all
        // C(m,2) pairs
        if ((long)(hi - lo) != m * (m - 1) / 2)
            throw CheckFailure("incidence grouping is inconsistent");
        const int pt_index = (int)inc.points.size();
        inc.points.push_back(
            {pts[meets[lo].pt_slot],
             std::vector<int>(lineset.begin(), lineset.end())});
        for (int line : inc.points.back().lines)
            inc.points_on_line[line].push_back(pt_index);
        lo = hi;
    }
    return inc;
}

TVector TVector::from_incidence(const IncidenceStructure& inc) {
    TVector tv;
    tv.d = inc.d;
    for (const IncidencePoint& p : inc.points) tv.counts[p.multiplicity()] += 1;
    if (!pair_identity_check(tv))
        throw CheckFailure("pair identity violated by computed incidence");
    return tv;
}

TVector tvector(const IncidenceStructure& inc) {
    return TVector::from_incidence(inc);
}

TVector TVector::hand(long d, std::map<long, Int> counts) {
    if (d < 2) throw ParameterOutOfRange("t-vector needs d >= 2");
    TVector tv;
    tv.d = d;
    for (auto& [m, t] : counts) {
        if (t == 0) continue;
        if (m < 2 || m > d || t < 0)
            throw ParameterOutOfRange("bad t-vector entry t" +
                                      std::to_string(m));
        tv.counts[m] = t;
    }
    return tv;
}

Int TVector::t(long m) const {
    auto it = counts.find(m);
    return it == counts.end() ? Int(0) : it->second;
}

Int TVector::sum_t() const {
    Int s = 0;
    for (auto& [m, t] : counts) s += t;
    return s;
}

Int TVector::sum_mt() const {
    Int s = 0;
    for (auto& [m, t] : counts) s += Int(m) * t;
    return s;
}

Int TVector::sum_m2t() const {
    Int s = 0;
    for (auto& [m, t] : counts) s += Int(m) * Int(m) * t;
    return s;
}

long TVector::max_multiplicity() const {
    return counts.empty() ? 0 : counts.rbegin()->first;
}

std::string TVector::to_string() const {
    std::string s = "d=" + std::to_string(d);
    for (auto& [m, t] : counts)
        s += ";t" + std::to_string(m) + "=" + t.get_str();
    return s;
}

bool pair_identity_check(const TVector& tv) {
    Int rhs = 0;
    for (auto& [m, t] : tv.counts) rhs += binom2(Int(m)) * t;
    return binom2(Int(tv.d)) == rhs;
}

ArrClass classify(const TVector& tv) {
    if (tv.t(tv.d) == 1) return ArrClass::Trivial;
    if (tv.t(tv.d - 1) == 1) return ArrClass::QuasiTrivial;
    if (tv.t(2) == binom2(Int(tv.d)) && tv.counts.size() == 1)
        return ArrClass::GeneralPosition;
    return ArrClass::Other;
}

const char* to_string(ArrClass c) {
    switch (c) {
        case ArrClass::Trivial: return "Trivial";
        case ArrClass::QuasiTrivial: return "QuasiTrivial";
        case ArrClass::GeneralPosition: return "GeneralPosition";
        case ArrClass::Other: return "Other";
    }
    return "?";
}

PencilInfo largest_pencil(const IncidenceStructure& inc) {
    if (inc.points.empty())
        throw EmptyPointSet("arrangement has no intersection points");
    int best = 0;
    for (int i = 1; i < (int)inc.points.size(); ++i)
        if (inc.points[i].multiplicity() > inc.points[best].multiplicity())
            best = i;  // points are in canonical order; first maximum wins
    const long m = inc.points[best].multiplicity();
    return {m, inc.d - m, best};
}

}  // namespace arr

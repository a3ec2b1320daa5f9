#include "arr/invariants.hpp"

namespace arr {

namespace {

bool nontrivial_nonquasitrivial(const TVector& tv) {
    return tv.t(tv.d) == 0 && tv.t(tv.d - 1) == 0;
}

}  // namespace

ChernInvariants chern(const TVector& tv) {
    ChernInvariants ci;
    ci.d = tv.d;
    Int s1 = 0, s2 = 0;
    for (auto& [m, t] : tv.counts) {
        s1 += Int(3 * m - 4) * t;
        s2 += Int(m - 1) * t;
    }
    ci.c1sq = 9 - 5 * Int(tv.d) + s1;
    ci.c2 = 3 - 2 * Int(tv.d) + s2;
    if (ci.c2 != 0) ci.slope = make_rat(ci.c1sq, ci.c2);
    if (tv.sum_t() != 0) ci.h_linear = h_linear(tv);
    return ci;
}

SlopeBoundsReport slope_bounds_check(const TVector& tv) {
    SlopeBoundsReport r;
    if (!nontrivial_nonquasitrivial(tv)) return r;  // NotApplicable
    r.applicable = true;
    const ChernInvariants ci = chern(tv);
    if (!ci.slope) return r;  // c2 = 0 cannot happen here, but stay defensive
    const Rat slope = *ci.slope;
    const Rat lower = make_rat(2 * Int(tv.d) - 6, Int(tv.d) - 2);
    r.lower_ok = lower <= slope;
    r.upper_ok = slope <= 3;
    r.lower_equality = slope == lower;
    r.upper_equality = slope == Rat(3);
    const bool only_nodes =
        tv.t(2) == binom2(Int(tv.d)) && tv.counts.size() == 1;
    const bool point_count_equals_d = tv.sum_t() == tv.d;
    r.lower_class_ok = r.lower_equality == only_nodes;
    r.upper_class_ok = r.upper_equality == point_count_equals_d;
    return r;
}

bool positivity_check(const TVector& tv) {
    if (!nontrivial_nonquasitrivial(tv))
        throw NotApplicable("positivity needs t_d = t_{d-1} = 0");
    const ChernInvariants ci = chern(tv);
    return ci.c1sq > 0 && ci.c2 > 0;
}

Rat h_linear(const TVector& tv) {
    const Int points = tv.sum_t();
    if (points == 0) throw EmptyPointSet("no m-points");
    const Rat primary =
        make_rat(Int(tv.d) * Int(tv.d) - tv.sum_m2t(), points);
    if (pair_identity_check(tv) && !h_linear_forms_agree(tv))
        throw CheckFailure("h_linear forms disagree on a pair-exact vector");
    return primary;
}

bool h_linear_forms_agree(const TVector& tv) {
    const Int points = tv.sum_t();
    if (points == 0) return false;
    Int s1 = 0, s2 = 0;
    for (auto& [m, t] : tv.counts) {
        s1 += Int(3 * m - 4) * t;
        s2 += Int(m - 1) * t;
    }
    const Int c1sq = 9 - 5 * Int(tv.d) + s1;
    const Int c2 = 3 - 2 * Int(tv.d) + s2;
    const Int denom = Int(tv.d) - (c1sq - 3 * c2);
    if (denom == 0) return false;
    const Rat alt = make_rat(3 - (c1sq - 2 * c2), denom) - 2;
    const Rat primary =
        make_rat(Int(tv.d) * Int(tv.d) - tv.sum_m2t(), points);
    return alt == primary;
}

bool c2_lower_bound_check(const TVector& tv, long m_max) {
    // precondition is "neither trivial nor quasi-trivial", which still
    // admits d = 3 triangles (t_{d-1} = t_2 = 3 there, not 1)
    if (tv.t(tv.d) == 1 || tv.t(tv.d - 1) == 1)
        throw NotApplicable("bound needs a non-(quasi-)trivial arrangement");
    const ChernInvariants ci = chern(tv);
    return ci.c2 >= Int(m_max - 2) * Int(tv.d - m_max - 1);
}

FaceData face_counts(const TVector& tv, bool realizable_over_reals) {
    if (!realizable_over_reals)
        throw NotReal("face counts need a real-realizable arrangement");
    FaceData f;
    f.f0 = tv.sum_t();
    f.f1 = tv.sum_mt();
    f.f2 = 1 - f.f0 + f.f1;
    f.simplicial = (3 * f.f2 == 2 * f.f1);
    const ChernInvariants ci = chern(tv);
    if (5 * ci.c2 - 2 * ci.c1sq != 2 * f.f1 - 3 * f.f2)
        throw CheckFailure("5c2 - 2c1sq != 2f1 - 3f2");
    return f;
}

const char* to_string(FieldClass fc) {
    switch (fc) {
        case FieldClass::RealEmbeddable: return "RealEmbeddable";
        case FieldClass::ComplexOnly: return "ComplexOnly";
        case FieldClass::PositiveChar: return "PositiveChar";
    }
    return "?";
}

CeilingReport field_ceiling_check(const TVector& tv, FieldClass fc) {
    CeilingReport r;
    r.field_class = fc;
    if (!nontrivial_nonquasitrivial(tv)) return r;
    r.applicable = true;
    const ChernInvariants ci = chern(tv);
    const Rat slope = *ci.slope;
    switch (fc) {
        case FieldClass::RealEmbeddable: {
            const Rat ceil = make_rat(5, 2);
            r.slope_ok = slope <= ceil;
            r.equality = slope == ceil;
            const FaceData f = face_counts(tv, true);
            r.equality_class_ok = (r.equality == f.simplicial);
            if (!r.slope_ok)
                r.finding = "real arrangement with slope above 5/2: " +
                            tv.to_string();
            else if (!r.equality_class_ok)
                r.finding = "slope-5/2 equality does not match simpliciality: " +
                            tv.to_string();
            break;
        }
        case FieldClass::ComplexOnly: {
            const Rat ceil = make_rat(8, 3);
            r.slope_ok = slope <= ceil;
            r.equality = slope == ceil;
            if (r.equality) {
                const bool is_dual_hesse =
                    tv.d == 9 && tv.counts.size() == 1 && tv.t(3) == 12;
                r.equality_class_ok = is_dual_hesse;
            }
            r.h_ok = *ci.h_linear >= Rat(-4);
            if (!r.slope_ok)
                r.finding = "complex arrangement with slope above 8/3: " +
                            tv.to_string();
            else if (!r.h_ok)
                r.finding = "H_L below -4 in characteristic zero: " +
                            tv.to_string();
            else if (!r.equality_class_ok)
                r.finding = "slope-8/3 equality on a non-dual-Hesse vector: " +
                            tv.to_string();
            break;
        }
        case FieldClass::PositiveChar: {
            r.slope_ok = slope <= 3;
            r.equality = slope == Rat(3);
            if (!r.slope_ok)
                r.finding = "slope above 3: " + tv.to_string();
            break;
        }
    }
    return r;
}

FieldClass classify_field(const Arrangement& arr) {
    switch (arr.desc->kind) {
        case FieldKind::Rational: return FieldClass::RealEmbeddable;
        case FieldKind::FiniteField: return FieldClass::PositiveChar;
        case FieldKind::Cyclotomic: {
            for (const ProjLine& l : arr.lines)
                for (int i = 0; i < 3; ++i)
                    if (!l[i].is_real()) return FieldClass::ComplexOnly;
            return FieldClass::RealEmbeddable;
        }
    }
    return FieldClass::PositiveChar;
}

}  // namespace arr

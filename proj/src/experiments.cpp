#include "arr/experiments.hpp"

namespace arr {

Rat limit_function(const Rat& a, const Rat& c, bool h_is_two, const Rat& x) {
    if (a <= 0 || c <= 2 || x <= 0)
        throw ParameterOutOfRange("limit_function needs a > 0, c > 2, x > 0");
    if (h_is_two) return (a + 2 * x + x * x) / (a / c + x + x * x / 2);
    return (a + 2 * x) / (a / c + x);
}

long general_lines_to_add(const Rat& x, long l, bool h_is_two) {
    if (x <= 0 || l <= 0) throw ParameterOutOfRange("need x > 0, l > 0");
    const Int num = x.get_num(), den = x.get_den();
    Int d_add;
    if (h_is_two) {
        d_add = floor_div(num * l, den);  // floor(x * l)
    } else {
        // floor(x * sqrt(l)) = floor(isqrt(num^2 * l) / den)
        d_add = floor_div(isqrt(num * num * l), den);
    }
    if (!d_add.fits_slong_p()) throw ParameterOutOfRange("d_add overflow");
    return d_add.get_si();
}

void sweep_constants(SweepFamily family, Rat& a, Rat& c) {
    switch (family) {
        case SweepFamily::FiniteProjectivePlane:
            a = 3;
            c = 3;
            return;
        case SweepFamily::Polygon:
            a = make_rat(5, 8);
            c = make_rat(5, 2);
            return;
    }
    throw ParameterOutOfRange("unknown sweep family");
}

namespace {

bool is_two(const Rat& h) { return h == 2; }

bool is_three_halves(const Rat& h) { return h == make_rat(3, 2); }

TVector sweep_base_tvector(SweepFamily family, long param) {
    switch (family) {
        case SweepFamily::FiniteProjectivePlane: {
            // parameter is the exponent e of q = 2^e
            if (param < 1 || param > 30)
                throw ParameterOutOfRange("pg sweep exponent out of range");
            FamilySpec spec{Family::FiniteProjectivePlane, 0, 2, param};
            // coordinate verification is cheap for the smallest planes
            if (param <= 3) return tvector(compute_incidence(generate(spec)));
            return expected_tvector(spec);
        }
        case SweepFamily::Polygon: {
            FamilySpec spec{Family::Polygon, param, 0, 0};
            if (param <= 8) return tvector(compute_incidence(generate(spec)));
            return expected_tvector(spec);
        }
    }
    throw ParameterOutOfRange("unknown sweep family");
}

}  // namespace

std::vector<SweepRow> density_sweep(SweepFamily family, const Rat& h,
                                    const Rat& x, long lo, long hi) {
    if (!is_two(h) && !is_three_halves(h))
        throw ParameterOutOfRange("h must be 3/2 or 2");
    if (lo > hi || lo < 1) throw ParameterOutOfRange("bad parameter range");
    Rat a, c;
    sweep_constants(family, a, c);
    const bool h2 = is_two(h);
    const Rat target = limit_function(a, c, h2, x);
    std::vector<SweepRow> rows;
    for (long param = lo; param <= hi; ++param) {
        SweepRow row;
        row.param = param;
        const TVector base = sweep_base_tvector(family, param);
        row.l = base.d;
        row.d_add = general_lines_to_add(x, row.l, h2);
        const TVector augmented = augment_general(base, row.d_add);
        const ChernInvariants ci = chern(augmented);
        if (!ci.slope) throw CheckFailure("augmented c2 vanished");
        row.slope = *ci.slope;
        row.target = target;
        row.gap = rat_abs(row.slope - target);
        row.h_l = *ci.h_linear;
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* const kSweepCsvHeader =
    "param,l,d_add,slope_num,slope_den,slope_dec,target_dec,gap_dec,h_l_dec";

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = std::string(kSweepCsvHeader) + "\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.param) + "," + std::to_string(r.l) + "," +
               std::to_string(r.d_add) + "," + r.slope.get_num().get_str() +
               "," + r.slope.get_den().get_str() + "," +
               decimal_string(r.slope) + "," + decimal_string(r.target) + "," +
               decimal_string(r.gap) + "," + decimal_string(r.h_l) + "\n";
    }
    return out;
}

Rat right_triangle_slope_closed_form(long n) {
    return make_rat(38 * Int(n) * n - 18 * n - 7,
                    16 * Int(n) * n - 8 * n - 2);
}

namespace {

bool is_prime_power(long q, long& p, long& k) {
    if (q < 2) return false;
    for (long f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            long rest = q, kk = 0;
            while (rest % f == 0) {
                rest /= f;
                ++kk;
            }
            if (rest != 1) return false;
            p = f;
            k = kk;
            return true;
        }
    }
    p = q;
    k = 1;
    return true;
}

// t-vector of one series member; coordinate and closed-form paths.
TVector series_tvector(SeriesFamily family, long param, bool use_coords) {
    switch (family) {
        case SeriesFamily::RightTriangleArray: {
            FamilySpec spec{Family::RightTriangleArray, param, 0, 0};
            return use_coords ? tvector(compute_incidence(generate(spec)))
                              : expected_tvector(spec);
        }
        case SeriesFamily::FiniteProjectivePlane: {
            long p = 0, k = 0;
            if (!is_prime_power(param, p, k))
                throw ParameterOutOfRange("q must be a prime power");
            FamilySpec spec{Family::FiniteProjectivePlane, 0, p, k};
            return use_coords ? tvector(compute_incidence(generate(spec)))
                              : expected_tvector(spec);
        }
        case SeriesFamily::Polygon: {
            FamilySpec spec{Family::Polygon, param, 0, 0};
            return use_coords ? tvector(compute_incidence(generate(spec)))
                              : expected_tvector(spec);
        }
        case SeriesFamily::GeneralPosition: {
            FamilySpec spec{Family::GeneralPosition, param, 0, 0};
            return use_coords ? tvector(compute_incidence(generate(spec)))
                              : expected_tvector(spec);
        }
        case SeriesFamily::PencilPlusFixed3: {
            return use_coords
                       ? tvector(compute_incidence(pencil_plus_fixed(param, 3)))
                       : pencil_plus_fixed_tvector(param, 3);
        }
    }
    throw ParameterOutOfRange("unknown series family");
}

bool series_param_ok(SeriesFamily family, long param) {
    if (family == SeriesFamily::FiniteProjectivePlane) {
        long p, k;
        return is_prime_power(param, p, k);
    }
    return true;
}

}  // namespace

std::vector<SeriesRow> slope_series(SeriesFamily family, long lo, long hi,
                                    bool use_coords) {
    if (lo > hi) throw ParameterOutOfRange("bad series range");
    std::vector<SeriesRow> rows;
    for (long param = lo; param <= hi; ++param) {
        if (!series_param_ok(family, param)) continue;  // non-prime-power q
        const TVector tv = series_tvector(family, param, use_coords);
        const ChernInvariants ci = chern(tv);
        if (!ci.slope || !ci.h_linear)
            throw CheckFailure("series member with degenerate invariants");
        if (family == SeriesFamily::RightTriangleArray &&
            *ci.slope != right_triangle_slope_closed_form(param))
            throw CheckFailure("right-triangle slope != closed form at n=" +
                               std::to_string(param));
        rows.push_back({param, tv.d, *ci.slope, *ci.h_linear});
    }
    return rows;
}

GrowthReport c2_growth_report(SeriesFamily family, long lo, long hi) {
    if (lo > hi) throw ParameterOutOfRange("bad growth range");
    GrowthReport rep;
    rep.c2_strictly_increasing = true;
    rep.ratio_strictly_increasing = true;
    rep.bounds_ok = true;
    for (long param = lo; param <= hi; ++param) {
        if (!series_param_ok(family, param)) continue;
        const TVector tv = series_tvector(family, param, false);
        const ChernInvariants ci = chern(tv);
        GrowthRow row;
        row.param = param;
        row.d = tv.d;
        row.c2 = ci.c2;
        row.c2_over_d = make_rat(ci.c2, Int(tv.d));
        const long m_max = tv.max_multiplicity();
        row.bound_ok = ci.c2 >= Int(m_max - 2) * Int(tv.d - m_max - 1);
        if (!rep.rows.empty()) {
            if (row.c2 <= rep.rows.back().c2) rep.c2_strictly_increasing = false;
            if (row.c2_over_d <= rep.rows.back().c2_over_d)
                rep.ratio_strictly_increasing = false;
        }
        if (!row.bound_ok) rep.bounds_ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace arr

#include "arr/families.hpp"

#include <algorithm>
#include <set>

namespace arr {

const char* to_string(Family f) {
    switch (f) {
        case Family::Pencil: return "pencil";
        case Family::NearPencil: return "near-pencil";
        case Family::GeneralPosition: return "general-position";
        case Family::CompleteQuadrilateral: return "complete-quadrilateral";
        case Family::Polygon: return "polygon";
        case Family::Ceva: return "ceva";
        case Family::DualHesse: return "dual-hesse";
        case Family::Hesse: return "hesse";
        case Family::FiniteProjectivePlane: return "pg";
        case Family::RightTriangleArray: return "right-triangle-array";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    if (name == "pencil") return Family::Pencil;
    if (name == "near-pencil" || name == "nearpencil") return Family::NearPencil;
    if (name == "general-position" || name == "general")
        return Family::GeneralPosition;
    if (name == "complete-quadrilateral" || name == "quadrilateral")
        return Family::CompleteQuadrilateral;
    if (name == "polygon") return Family::Polygon;
    if (name == "ceva") return Family::Ceva;
    if (name == "dual-hesse" || name == "dualhesse") return Family::DualHesse;
    if (name == "hesse") return Family::Hesse;
    if (name == "pg" || name == "finite-projective-plane")
        return Family::FiniteProjectivePlane;
    if (name == "right-triangle-array" || name == "rta")
        return Family::RightTriangleArray;
    throw ParameterOutOfRange("unknown family: " + name);
}

std::string FamilySpec::to_string() const {
    std::string s = arr::to_string(family);
    switch (family) {
        case Family::CompleteQuadrilateral:
        case Family::DualHesse:
        case Family::Hesse: break;
        case Family::FiniteProjectivePlane:
            s += "(" + std::to_string(p) + "," + std::to_string(k) + ")";
            break;
        case Family::Ceva:
            s += "(" + std::to_string(n) + ")";
            if (p) s += " over GF(" + std::to_string(p) + ")";
            break;
        default:
            s += "(" + std::to_string(n) + ")";
            break;
    }
    return s;
}

namespace {

void add_count(std::map<long, Int>& counts, long m, Int t) {
    if (t != 0) counts[m] += t;
}

long checked_prime_power(long p, long k) {
    if (p < 2 || k < 1) throw ParameterOutOfRange("bad prime power");
    long q = 1;
    for (long i = 0; i < k; ++i) {
        if (q > (1L << 20)) throw ParameterOutOfRange("q too large");
        q *= p;
    }
    return q;
}

// Smallest k with n | p^k - 1, i.e. the order of p modulo n.
long multiplicative_order_mod(long p, long n) {
    long r = p % n;
    if (std::__gcd(r, n) != 1)
        throw UnsupportedField("no power of " + std::to_string(p) +
                               " is 1 mod " + std::to_string(n));
    long acc = r % n, k = 1;
    while (acc != 1 % n) {
        acc = (acc * r) % n;
        if (++k > n) throw UnsupportedField("order search failed");
    }
    return k;
}

}  // namespace

TVector expected_tvector(const FamilySpec& spec) {
    std::map<long, Int> c;
    long d = 0;
    switch (spec.family) {
        case Family::Pencil: {
            if (spec.n < 3) throw ParameterOutOfRange("pencil needs d >= 3");
            d = spec.n;
            add_count(c, d, 1);
            break;
        }
        case Family::NearPencil: {
            if (spec.n < 3) throw ParameterOutOfRange("near-pencil needs d >= 3");
            d = spec.n;
            add_count(c, 2, d - 1);
            add_count(c, d - 1, 1);
            break;
        }
        case Family::GeneralPosition: {
            if (spec.n < 2)
                throw ParameterOutOfRange("general position needs d >= 2");
            d = spec.n;
            add_count(c, 2, binom2(Int(d)));
            break;
        }
        case Family::CompleteQuadrilateral: {
            d = 6;
            add_count(c, 2, 3);
            add_count(c, 3, 4);
            break;
        }
        case Family::Polygon: {
            const long n = spec.n;
            if (n < 3) throw ParameterOutOfRange("polygon needs n >= 3");
            d = 2 * n;
            add_count(c, 2, n);
            add_count(c, 3, Int(n) * (n - 1) / 2);
            add_count(c, n, 1);
            break;
        }
        case Family::Ceva: {
            const long n = spec.n;
            if (n < 3) throw ParameterOutOfRange("ceva needs n >= 3");
            d = 3 * n;
            add_count(c, 3, Int(n) * n);
            add_count(c, n, 3);
            break;
        }
        case Family::DualHesse: {
            d = 9;
            add_count(c, 3, 12);
            break;
        }
        case Family::Hesse: {
            d = 12;
            add_count(c, 2, 12);
            add_count(c, 4, 9);
            break;
        }
        case Family::FiniteProjectivePlane: {
            const long q = checked_prime_power(spec.p, spec.k);
            d = q * q + q + 1;
            add_count(c, q + 1, d);
            break;
        }
        case Family::RightTriangleArray: {
            const long n = spec.n;
            if (n < 3) throw ParameterOutOfRange("right triangles need n >= 3");
            d = 8 * n;
            add_count(c, 2, 6 * Int(n) * n + 6 * n - 8);
            add_count(c, 3, 2 * Int(n) * n - 6 * n + 8);
            add_count(c, 4, 2 * Int(n) * n + 2 * n - 3);
            add_count(c, 2 * n - 1, 2);
            add_count(c, 2 * n + 1, 2);
            break;
        }
    }
    return TVector::hand(d, std::move(c));
}

namespace {

std::vector<ProjLine> gen_pencil_lines(const FieldDesc& q, long d) {
    std::vector<ProjLine> lines;
    for (long i = 0; i + 1 < d; ++i)
        lines.push_back(ProjLine::make_int(q, 1, i, 0));
    lines.push_back(ProjLine::make_int(q, 0, 1, 0));
    return lines;
}

std::vector<ProjLine> gen_moment_lines(const FieldDesc& q, long count,
                                       long first_t) {
    std::vector<ProjLine> lines;
    for (long t = first_t; t < first_t + count; ++t)
        lines.push_back(ProjLine::make_int(q, 1, t, t * t));
    return lines;
}

std::vector<ProjLine> gen_polygon_lines(long n, FieldDesc& desc_out) {
    const long m = 4 * n;
    FieldDesc desc = make_cyclotomic(m);
    desc_out = desc;
    const FieldElement half =
        FieldElement::from_rational(desc, make_rat(1, 2));
    const FieldElement imag = cyclotomic_monomial(desc, n);  // zeta_4n^n = i
    const FieldElement half_over_i = half * imag.inverse();
    // angle arguments are multiples of pi/(2n): zeta_4n^t = e^(i t pi / 2n)
    auto cos_t = [&](long t) {
        return (cyclotomic_monomial(desc, t) + cyclotomic_monomial(desc, -t)) *
               half;
    };
    auto sin_t = [&](long t) {
        return (cyclotomic_monomial(desc, t) - cyclotomic_monomial(desc, -t)) *
               half_over_i;
    };
    std::vector<ProjLine> lines;
    const FieldElement c0 = cos_t(2);  // cos(pi/n)
    for (long k = 0; k < n; ++k) {     // polygon sides
        const long t = 4 * k + 2;      // angle (2k+1) pi / n
        lines.push_back(ProjLine::make(cos_t(t), sin_t(t), -c0));
    }
    for (long k = 0; k < n; ++k) {  // symmetry axes through the center
        const long t = 2 * k;       // angle k pi / n
        lines.push_back(ProjLine::make(sin_t(t), -cos_t(t),
                                       FieldElement::zero(desc)));
    }
    return lines;
}

std::vector<ProjLine> gen_ceva_lines(const FieldDesc& desc, long n) {
    FieldElement z = [&] {
        try {
            return root_of_unity(desc, n);
        } catch (const NoSuchRoot& e) {
            throw UnsupportedField(std::string("ceva: ") + e.what());
        }
    }();
    std::vector<ProjLine> lines;
    FieldElement zi = FieldElement::one(desc);
    for (long i = 0; i < n; ++i) {
        lines.push_back(ProjLine::make(FieldElement::one(desc), -zi,
                                       FieldElement::zero(desc)));
        lines.push_back(ProjLine::make(FieldElement::zero(desc),
                                       FieldElement::one(desc), -zi));
        lines.push_back(ProjLine::make(FieldElement::one(desc),
                                       FieldElement::zero(desc), -zi));
        zi = zi * z;
    }
    return lines;
}

// The 12 lines of the Hesse arrangement arise as the join-closure of the
// nine inflection points of a smooth cubic.
std::vector<ProjLine> gen_hesse_lines(const FieldDesc& desc) {
    const FieldElement omega = root_of_unity(desc, 3);
    std::vector<ProjPoint> pts;
    FieldElement w = FieldElement::one(desc);
    const FieldElement zero = FieldElement::zero(desc);
    const FieldElement one = FieldElement::one(desc);
    for (int j = 0; j < 3; ++j) {
        pts.push_back(ProjPoint::make(zero, one, -w));
        pts.push_back(ProjPoint::make(one, zero, -w));
        pts.push_back(ProjPoint::make(one, -w, zero));
        w = w * omega;
    }
    std::set<std::string> seen;
    std::vector<ProjLine> lines;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            ProjLine l = join(pts[i], pts[j]);
            if (seen.insert(l.encode()).second) lines.push_back(std::move(l));
        }
    }
    if (lines.size() != 12)
        throw GeneratorMismatch("hesse join-closure gave " +
                                std::to_string(lines.size()) + " lines");
    return lines;
}

std::vector<ProjLine> gen_pg_lines(const FieldDesc& desc) {
    const std::vector<FieldElement> elems = finite_field_elements(desc);
    const FieldElement zero = FieldElement::zero(desc);
    const FieldElement one = FieldElement::one(desc);
    std::vector<ProjLine> lines;
    for (const auto& b : elems)
        for (const auto& c : elems)
            lines.push_back(ProjLine::make(one, b, c));
    for (const auto& c : elems)
        lines.push_back(ProjLine::make(zero, one, c));
    lines.push_back(ProjLine::make(zero, zero, one));
    return lines;
}

std::vector<ProjLine> gen_rta_lines(const FieldDesc& q, long n) {
    std::vector<ProjLine> lines;
    for (long a = 0; a <= 2 * n; ++a) {
        lines.push_back(ProjLine::make_int(q, 0, 2, -a));  // y = a z / 2
        lines.push_back(ProjLine::make_int(q, 2, 0, -a));  // x = a z / 2
    }
    for (long b = 0; b <= 2 * n - 2; ++b) {
        lines.push_back(ProjLine::make_int(q, 1, -1, b - n + 1));
        lines.push_back(ProjLine::make_int(q, 1, 1, -(b + 1)));
    }
    return lines;
}

}  // namespace

Arrangement generate(const FamilySpec& spec) {
    FieldDesc desc = make_rational();
    std::vector<ProjLine> lines;
    FamilySpec normalized = spec;
    switch (spec.family) {
        case Family::Pencil:
            if (spec.n < 3) throw ParameterOutOfRange("pencil needs d >= 3");
            lines = gen_pencil_lines(desc, spec.n);
            break;
        case Family::NearPencil: {
            if (spec.n < 3) throw ParameterOutOfRange("near-pencil needs d >= 3");
            lines = gen_pencil_lines(desc, spec.n - 1);
            lines.push_back(ProjLine::make_int(desc, 0, 0, 1));
            break;
        }
        case Family::GeneralPosition:
            if (spec.n < 2)
                throw ParameterOutOfRange("general position needs d >= 2");
            lines = gen_moment_lines(desc, spec.n, 0);
            break;
        case Family::CompleteQuadrilateral: {
            lines = {ProjLine::make_int(desc, 1, 0, 0),
                     ProjLine::make_int(desc, 0, 1, 0),
                     ProjLine::make_int(desc, 0, 0, 1),
                     ProjLine::make_int(desc, 1, -1, 0),
                     ProjLine::make_int(desc, 1, 0, -1),
                     ProjLine::make_int(desc, 0, 1, -1)};
            break;
        }
        case Family::Polygon:
            if (spec.n < 3) throw ParameterOutOfRange("polygon needs n >= 3");
            lines = gen_polygon_lines(spec.n, desc);
            break;
        case Family::Ceva: {
            if (spec.n < 3) throw ParameterOutOfRange("ceva needs n >= 3");
            if (spec.p) {
                long k = spec.k ? spec.k
                                : multiplicative_order_mod(spec.p, spec.n);
                normalized.k = k;
                desc = make_finite_field(spec.p, (int)k);
            } else {
                desc = make_cyclotomic(spec.n);
            }
            lines = gen_ceva_lines(desc, spec.n);
            break;
        }
        case Family::DualHesse: {
            desc = make_cyclotomic(3);
            lines = gen_ceva_lines(desc, 3);
            break;
        }
        case Family::Hesse: {
            desc = make_cyclotomic(3);
            lines = gen_hesse_lines(desc);
            break;
        }
        case Family::FiniteProjectivePlane: {
            checked_prime_power(spec.p, spec.k);
            desc = make_finite_field(spec.p, (int)spec.k);
            lines = gen_pg_lines(desc);
            break;
        }
        case Family::RightTriangleArray:
            if (spec.n < 3) throw ParameterOutOfRange("right triangles need n >= 3");
            lines = gen_rta_lines(desc, spec.n);
            break;
    }
    Arrangement arr =
        Arrangement::make(desc, std::move(lines), normalized.to_string());
    const TVector computed = tvector(compute_incidence(arr));
    const TVector expected = expected_tvector(spec);
    if (!(computed == expected))
        throw GeneratorMismatch(normalized.to_string() + ": computed " +
                                computed.to_string() + ", expected " +
                                expected.to_string());
    return arr;
}

TVector augment_general(const TVector& tv, long j) {
    if (j < 0) throw ParameterOutOfRange("augment needs j >= 0");
    if (!pair_identity_check(tv))
        throw CheckFailure("augment_general input fails the pair identity");
    if (j == 0) return tv;
    std::map<long, Int> c = tv.counts;
    c[2] += Int(j) * tv.d + binom2(Int(j));
    TVector out = TVector::hand(tv.d + j, std::move(c));
    if (!pair_identity_check(out))
        throw CheckFailure("augment_general output fails the pair identity");
    return out;
}

namespace {

// Accepts moment-curve lines one at a time, each required to miss every
// intersection point of the arrangement built so far.
Arrangement extend_with_general_lines(Arrangement cur, long j,
                                      std::string provenance) {
    const FieldDesc& desc = cur.desc;
    std::set<std::string> have;
    for (const ProjLine& l : cur.lines) have.insert(l.encode());
    long accepted = 0;
    long t = 0;
    while (accepted < j) {
        ProjLine cand = ProjLine::make_int(desc, 1, t, t * t);
        ++t;
        if (have.count(cand.encode())) continue;
        const IncidenceStructure inc = compute_incidence(cur);
        bool hits_existing_point = false;
        for (const IncidencePoint& p : inc.points) {
            if (incident(p.pt, cand)) {
                hits_existing_point = true;
                break;
            }
        }
        if (hits_existing_point) continue;
        have.insert(cand.encode());
        std::vector<ProjLine> lines = cur.lines;
        lines.push_back(std::move(cand));
        cur = Arrangement{desc, std::move(lines), provenance};
        ++accepted;
    }
    cur.provenance = std::move(provenance);
    return cur;
}

}  // namespace

Arrangement augment_coords(const Arrangement& arr, long j) {
    if (arr.desc->kind != FieldKind::Rational)
        throw WrongField("augment_coords needs an arrangement over Q");
    if (j < 0) throw ParameterOutOfRange("augment needs j >= 0");
    if (j == 0) return arr;
    const TVector before = tvector(compute_incidence(arr));
    Arrangement out = extend_with_general_lines(
        arr, j, arr.provenance + "+general(" + std::to_string(j) + ")");
    const TVector after = tvector(compute_incidence(out));
    if (!(after == augment_general(before, j)))
        throw GeneratorMismatch("augment_coords disagrees with augment_general");
    return out;
}

Arrangement pencil_plus_fixed(long n, long k) {
    if (n < 2 || k < 1 || n + k < 4)
        throw ParameterOutOfRange("pencil_plus_fixed needs n >= 2, k >= 1, n+k >= 4");
    const FieldDesc desc = make_rational();
    Arrangement base = Arrangement::make(
        desc, gen_pencil_lines(desc, n),
        "pencil-plus-fixed(" + std::to_string(n) + "," + std::to_string(k) +
            ")");
    // moment-curve lines with t >= 1 never pass the pencil center [0,0,1]
    Arrangement out = extend_with_general_lines(base, k, base.provenance);
    const TVector computed = tvector(compute_incidence(out));
    if (!(computed == pencil_plus_fixed_tvector(n, k)))
        throw GeneratorMismatch("pencil_plus_fixed: " + computed.to_string());
    return out;
}

TVector pencil_plus_fixed_tvector(long n, long k) {
    if (n < 2 || k < 1 || n + k < 4)
        throw ParameterOutOfRange("pencil_plus_fixed needs n >= 2, k >= 1, n+k >= 4");
    std::map<long, Int> c;
    c[n] += 1;
    c[2] += Int(n) * k + binom2(Int(k));
    return TVector::hand(n + k, std::move(c));
}

}  // namespace arr

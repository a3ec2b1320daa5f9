#include "arr/projgeom.hpp"

namespace arr {

namespace {

std::array<FieldElement, 3> normalize_triple(std::array<FieldElement, 3> c) {
    if (!same_field(c[0].field(), c[1].field()) ||
        !same_field(c[0].field(), c[2].field()))
        throw DescriptorMismatch("mixed fields in homogeneous triple");
    int first = -1;
    for (int i = 0; i < 3; ++i) {
        if (!c[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first < 0) throw ZeroVector("homogeneous triple is zero");
    if (!c[first].is_one()) {
        FieldElement s = c[first].inverse();
        for (int i = 0; i < 3; ++i) c[i] = c[i] * s;
    }
    return c;
}

std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& a,
                                  const std::array<FieldElement, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

std::string encode_triple(const std::array<FieldElement, 3>& c) {
    return "[" + c[0].encode() + "," + c[1].encode() + "," + c[2].encode() +
           "]";
}

FieldElement det3(const std::array<FieldElement, 9>& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

FieldElement det3_points(const ProjPoint& a, const ProjPoint& b,
                         const ProjPoint& c) {
    return det3({a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]});
}

std::array<FieldElement, 9> adjugate(const std::array<FieldElement, 9>& m) {
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return m[r0 * 3 + c0] * m[r1 * 3 + c1] - m[r0 * 3 + c1] * m[r1 * 3 + c0];
    };
    // adj[i][j] = cofactor of m[j][i]
    return {minor(1, 2, 1, 2), -minor(0, 2, 1, 2), minor(0, 1, 1, 2),
            -minor(1, 2, 0, 2), minor(0, 2, 0, 2), -minor(0, 1, 0, 2),
            minor(1, 2, 0, 1), -minor(0, 2, 0, 1), minor(0, 1, 0, 1)};
}

std::array<FieldElement, 9> normalize_matrix(std::array<FieldElement, 9> m) {
    int first = -1;
    for (int i = 0; i < 9; ++i) {
        if (!m[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first < 0) throw ZeroVector("zero matrix");
    if (!m[first].is_one()) {
        FieldElement s = m[first].inverse();
        for (auto& e : m) e = e * s;
    }
    return m;
}

}  // namespace

ProjPoint ProjPoint::make(FieldElement x, FieldElement y, FieldElement z) {
    return ProjPoint(normalize_triple({std::move(x), std::move(y), std::move(z)}));
}

ProjPoint ProjPoint::make_int(const FieldDesc& desc, long x, long y, long z) {
    return make(FieldElement::from_integer(desc, x),
                FieldElement::from_integer(desc, y),
                FieldElement::from_integer(desc, z));
}

std::string ProjPoint::encode() const { return encode_triple(c_); }

bool ProjPoint::operator==(const ProjPoint& rhs) const {
    return c_[0] == rhs.c_[0] && c_[1] == rhs.c_[1] && c_[2] == rhs.c_[2];
}

ProjLine ProjLine::make(FieldElement a, FieldElement b, FieldElement c) {
    return ProjLine(normalize_triple({std::move(a), std::move(b), std::move(c)}));
}

ProjLine ProjLine::make_int(const FieldDesc& desc, long a, long b, long c) {
    return make(FieldElement::from_integer(desc, a),
                FieldElement::from_integer(desc, b),
                FieldElement::from_integer(desc, c));
}

std::string ProjLine::encode() const { return encode_triple(c_); }

bool ProjLine::operator==(const ProjLine& rhs) const {
    return c_[0] == rhs.c_[0] && c_[1] == rhs.c_[1] && c_[2] == rhs.c_[2];
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
    auto x = cross({l1[0], l1[1], l1[2]}, {l2[0], l2[1], l2[2]});
    if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
        throw CoincidentLines(l1.encode());
    return ProjPoint::make(std::move(x[0]), std::move(x[1]), std::move(x[2]));
}

ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
    auto x = cross({p1[0], p1[1], p1[2]}, {p2[0], p2[1], p2[2]});
    if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
        throw CoincidentPoints(p1.encode());
    return ProjLine::make(std::move(x[0]), std::move(x[1]), std::move(x[2]));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    return (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]).is_zero();
}

bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
    return det3({l1[0], l1[1], l1[2], l2[0], l2[1], l2[2], l3[0], l3[1],
                 l3[2]})
        .is_zero();
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    return det3_points(a, b, c).is_zero();
}

bool general_position(const std::array<ProjPoint, 4>& q) {
    for (int skip = 0; skip < 4; ++skip) {
        const ProjPoint* t[3];
        int n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) t[n++] = &q[i];
        if (collinear(*t[0], *t[1], *t[2])) return false;
    }
    return true;
}

Projectivity Projectivity::make(std::array<FieldElement, 9> row_major) {
    auto m = normalize_matrix(std::move(row_major));
    if (det3(m).is_zero()) throw DegenerateQuad("singular matrix");
    return Projectivity(std::move(m));
}

Projectivity Projectivity::inverse() const {
    return Projectivity::make(adjugate(m_));
}

namespace {

// Matrix whose columns are the quadruple's first three points, scaled so the
// column sum hits the fourth point.
std::array<FieldElement, 9> frame_matrix(const std::array<ProjPoint, 4>& q) {
    const FieldElement det = det3_points(q[0], q[1], q[2]);
    if (det.is_zero()) throw DegenerateQuad("first three points collinear");
    FieldElement lam[3] = {det3_points(q[3], q[1], q[2]) / det,
                           det3_points(q[0], q[3], q[2]) / det,
                           det3_points(q[0], q[1], q[3]) / det};
    for (const auto& l : lam)
        if (l.is_zero())
            throw DegenerateQuad("fourth point collinear with two others");
    std::array<FieldElement, 9> a = {
        lam[0] * q[0][0], lam[1] * q[1][0], lam[2] * q[2][0],
        lam[0] * q[0][1], lam[1] * q[1][1], lam[2] * q[2][1],
        lam[0] * q[0][2], lam[1] * q[1][2], lam[2] * q[2][2]};
    return a;
}

std::array<FieldElement, 9> mat_mul(const std::array<FieldElement, 9>& a,
                                    const std::array<FieldElement, 9>& b) {
    std::array<FieldElement, 9> r = a;  // overwritten below
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i * 3 + j] = a[i * 3] * b[j] + a[i * 3 + 1] * b[3 + j] +
                           a[i * 3 + 2] * b[6 + j];
    return r;
}

}  // namespace

Projectivity projectivity_from_quads(const std::array<ProjPoint, 4>& src,
                                     const std::array<ProjPoint, 4>& dst) {
    if (!general_position(src) || !general_position(dst))
        throw DegenerateQuad("quadruple not in general position");
    auto a_src = frame_matrix(src);
    auto a_dst = frame_matrix(dst);
    return Projectivity::make(mat_mul(a_dst, adjugate(a_src)));
}

ProjPoint apply(const Projectivity& t, const ProjPoint& p) {
    std::array<FieldElement, 3> r = {
        t.at(0, 0) * p[0] + t.at(0, 1) * p[1] + t.at(0, 2) * p[2],
        t.at(1, 0) * p[0] + t.at(1, 1) * p[1] + t.at(1, 2) * p[2],
        t.at(2, 0) * p[0] + t.at(2, 1) * p[1] + t.at(2, 2) * p[2]};
    return ProjPoint::make(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

ProjLine apply_line(const Projectivity& t, const ProjLine& l) {
    const Projectivity inv = t.inverse();
    // l' = (T^-1)^t l
    std::array<FieldElement, 3> r = {
        inv.at(0, 0) * l[0] + inv.at(1, 0) * l[1] + inv.at(2, 0) * l[2],
        inv.at(0, 1) * l[0] + inv.at(1, 1) * l[1] + inv.at(2, 1) * l[2],
        inv.at(0, 2) * l[0] + inv.at(1, 2) * l[1] + inv.at(2, 2) * l[2]};
    return ProjLine::make(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

std::vector<ProjLine> apply_lines(const Projectivity& t,
                                  const std::vector<ProjLine>& lines) {
    const Projectivity inv = t.inverse();
    std::vector<ProjLine> out;
    out.reserve(lines.size());
    for (const ProjLine& l : lines) {
        out.push_back(ProjLine::make(
            inv.at(0, 0) * l[0] + inv.at(1, 0) * l[1] + inv.at(2, 0) * l[2],
            inv.at(0, 1) * l[0] + inv.at(1, 1) * l[1] + inv.at(2, 1) * l[2],
            inv.at(0, 2) * l[0] + inv.at(1, 2) * l[1] + inv.at(2, 2) * l[2]));
    }
    return out;
}

}  // namespace arr

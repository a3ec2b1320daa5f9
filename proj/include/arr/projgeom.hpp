#pragma once

#include <array>
#include <vector>

#include "arr/field.hpp"

namespace arr {

// Points and lines are normalized homogeneous triples: not all coordinates
// zero, and the first nonzero coordinate equals 1. That fixes a unique
// representative per projective class, so grouping and equality reduce to
// exact encoding comparison.

class ProjPoint {
   public:
    static ProjPoint make(FieldElement x, FieldElement y, FieldElement z);
    static ProjPoint make_int(const FieldDesc& desc, long x, long y, long z);

    const FieldElement& operator[](int i) const { return c_[i]; }
    const FieldDesc& field() const { return c_[0].field(); }

    std::string encode() const;
    bool operator==(const ProjPoint& rhs) const;
    bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

   private:
    explicit ProjPoint(std::array<FieldElement, 3> c) : c_(std::move(c)) {}
    std::array<FieldElement, 3> c_;
};

class ProjLine {
   public:
    static ProjLine make(FieldElement a, FieldElement b, FieldElement c);
    static ProjLine make_int(const FieldDesc& desc, long a, long b, long c);

    const FieldElement& operator[](int i) const { return c_[i]; }
    const FieldDesc& field() const { return c_[0].field(); }

    std::string encode() const;
    bool operator==(const ProjLine& rhs) const;
    bool operator!=(const ProjLine& rhs) const { return !(*this == rhs); }

   private:
    explicit ProjLine(std::array<FieldElement, 3> c) : c_(std::move(c)) {}
    std::array<FieldElement, 3> c_;
};

// Intersection point of two distinct lines (cross product of coefficient
// triples). Throws CoincidentLines.
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

// The unique line through two distinct points. Throws CoincidentPoints.
ProjLine join(const ProjPoint& p1, const ProjPoint& p2);

// Exact incidence test a*x + b*y + c*z = 0.
bool incident(const ProjPoint& p, const ProjLine& l);

// True iff the 3x3 coefficient determinant vanishes.
bool concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3);

// Invertible change of homogeneous coordinates. Matrix scale is fixed so the
// first nonzero entry (row-major) is 1.
class Projectivity {
   public:
    static Projectivity make(std::array<FieldElement, 9> row_major);
    Projectivity inverse() const;

    const FieldElement& at(int row, int col) const {
        return m_[row * 3 + col];
    }
    const FieldDesc& field() const { return m_[0].field(); }

   private:
    explicit Projectivity(std::array<FieldElement, 9> m) : m_(std::move(m)) {}
    std::array<FieldElement, 9> m_;
};

// Unique projectivity mapping one general-position quadruple onto another.
// Throws DegenerateQuad when three points of either quadruple are collinear.
Projectivity projectivity_from_quads(const std::array<ProjPoint, 4>& src,
                                     const std::array<ProjPoint, 4>& dst);

ProjPoint apply(const Projectivity& t, const ProjPoint& p);

// Lines transform contravariantly (inverse transpose), so incidence is
// preserved: incident(p, l) <=> incident(apply(T,p), apply_line(T,l)).
ProjLine apply_line(const Projectivity& t, const ProjLine& l);
std::vector<ProjLine> apply_lines(const Projectivity& t,
                                  const std::vector<ProjLine>& lines);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool general_position(const std::array<ProjPoint, 4>& quad);

}  // namespace arr

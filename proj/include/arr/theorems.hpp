#pragma once

#include "arr/incidence.hpp"

namespace arr {

// 0/1 point-line incidence matrix: entry (i,j) = 1 iff point i lies on
// line j. Also accepted as abstract CLI input, in which case no geometric
// guarantees hold.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    uint8_t at(int i, int j) const { return a[(size_t)i * cols + j]; }
    static IncidenceMatrix from_incidence(const IncidenceStructure& inc);
};

struct DbeReport {
    long r = 0;  // number of m-points
    long d = 0;  // number of lines
    bool inequality_ok = false;  // r >= d
    enum class Equality { None, QuasiTrivial, FiniteProjectivePlane };
    Equality equality = Equality::None;
    long plane_order = 0;  // q, when equality = FiniteProjectivePlane
};

const char* to_string(DbeReport::Equality e);

// sum t_m >= d for every nontrivial arrangement, with equality exactly on
// near-pencils and finite projective planes. Classification is purely
// combinatorial: uniform point degree q+1, uniform line degree q+1, and
// d = q^2+q+1. (A triangle satisfies those axioms with q = 1 and classifies
// as the degenerate order-1 plane.) Throws TrivialInput when t_d = 1.
DbeReport dbe_verify(const IncidenceStructure& inc);

// A row permutation sigma with M[sigma(i)][i] = 0 for all i, found by
// augmenting-path bipartite matching on the zero entries. Exists for every
// square matrix satisfying the theorem's hypotheses; throws NoZeroDiagonal
// for abstract inputs where no perfect matching on zeros exists.
std::vector<int> zero_diagonal_permutation(const IncidenceMatrix& m);

struct ReconstructedField {
    long q = 0;
    std::vector<FieldElement> elements;        // labels x with [1,x,0] a point
    std::vector<std::vector<int>> add_table;   // indices into elements
    std::vector<std::vector<int>> mul_table;
    bool is_field = false;      // all field axioms verified on the tables
    bool matched_order = false; // |elements| == q
};

// Recovers the coordinate field of a finite projective plane arrangement
// from pure incidence data: normalizes four points to a standard frame,
// reads k' = {x : [1,x,0] is a point}, and fills the addition and
// multiplication tables through join/meet chains only. Throws
// NotProjectivePlane when the input is not classified as one, and
// ChainFailure when a required join or meet leaves the point set.
ReconstructedField reconstruct_field(const Arrangement& arr);

}  // namespace arr

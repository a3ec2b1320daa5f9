#include <doctest.h>

#include <set>

#include "arr/theorems.hpp"
#include "support.hpp"

using namespace arr;

TEST_CASE("de Bruijn-Erdos verification") {
    const DbeReport fano = dbe_verify(
        compute_incidence(generate({Family::FiniteProjectivePlane, 0, 2, 1})));
    CHECK(fano.r == 7);
    CHECK(fano.d == 7);
    CHECK(fano.inequality_ok);
    CHECK(fano.equality == DbeReport::Equality::FiniteProjectivePlane);
    CHECK(fano.plane_order == 2);

    const DbeReport np = dbe_verify(
        compute_incidence(generate({Family::NearPencil, 6, 0, 0})));
    CHECK(np.r == 6);
    CHECK(np.d == 6);
    CHECK(np.equality == DbeReport::Equality::QuasiTrivial);

    const DbeReport dh =
        dbe_verify(compute_incidence(generate({Family::DualHesse, 0, 0, 0})));
    CHECK(dh.r == 12);
    CHECK(dh.d == 9);
    CHECK(dh.inequality_ok);
    CHECK(dh.equality == DbeReport::Equality::None);

    CHECK_THROWS_AS(
        dbe_verify(compute_incidence(generate({Family::Pencil, 5, 0, 0}))),
        TrivialInput);
}

TEST_CASE("zero-diagonal permutations") {
    IncidenceMatrix m;
    m.rows = m.cols = 2;
    m.a = {0, 1, 1, 0};
    CHECK(zero_diagonal_permutation(m) == std::vector<int>{0, 1});

    m.a = {1, 1, 1, 1};
    CHECK_THROWS_AS(zero_diagonal_permutation(m), NoZeroDiagonal);

    for (auto [p, k] : std::vector<std::pair<long, long>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        const IncidenceMatrix im = IncidenceMatrix::from_incidence(
            compute_incidence(generate({Family::FiniteProjectivePlane, 0, p, k})));
        const std::vector<int> sigma = zero_diagonal_permutation(im);
        std::vector<char> used(im.rows, 0);
        for (int col = 0; col < im.cols; ++col) {
            CHECK(im.at(sigma[col], col) == 0);
            CHECK(!used[sigma[col]]);
            used[sigma[col]] = 1;
        }
    }

    m.rows = 2;
    m.cols = 3;
    m.a = {0, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(zero_diagonal_permutation(m), ParameterOutOfRange);
}

TEST_CASE("field reconstruction from incidence chains") {
    for (auto [p, k] : std::vector<std::pair<long, long>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        long q = 1;
        for (long i = 0; i < k; ++i) q *= p;
        const Arrangement plane =
            generate({Family::FiniteProjectivePlane, 0, p, k});
        const ReconstructedField rf = reconstruct_field(plane);
        CHECK(rf.q == q);
        CHECK(rf.matched_order);
        CHECK((long)rf.elements.size() == q);
        CHECK(rf.is_field);
        // the tables agree with the ambient field under x -> [1,x,0]
        for (int i = 0; i < (int)rf.elements.size(); ++i) {
            for (int j = 0; j < (int)rf.elements.size(); ++j) {
                const FieldElement sum = rf.elements[i] + rf.elements[j];
                const FieldElement prod = rf.elements[i] * rf.elements[j];
                CHECK(rf.elements[rf.add_table[i][j]] == sum);
                CHECK(rf.elements[rf.mul_table[i][j]] == prod);
            }
        }
    }

    CHECK_THROWS_AS(reconstruct_field(generate({Family::DualHesse, 0, 0, 0})),
                    NotProjectivePlane);
    CHECK_THROWS_AS(reconstruct_field(generate({Family::Hesse, 0, 0, 0})),
                    NotProjectivePlane);
}

TEST_CASE("the successor chain is a geometric fact in every plane") {
    // [1,c,0] joined to [0,1,1] meets {x=z} at [1,c+1,1]
    for (auto [p, k] : std::vector<std::pair<long, long>>{{3, 1}, {5, 1}, {2, 2}}) {
        const FieldDesc gf = make_finite_field(p, k);
        const std::set<std::string> pts = [&] {
            std::set<std::string> s;
            const auto inc = compute_incidence(
                generate({Family::FiniteProjectivePlane, 0, p, k}));
            for (const IncidencePoint& q : inc.points) s.insert(q.pt.encode());
            return s;
        }();
        const FieldElement one = FieldElement::one(gf);
        for (const FieldElement& c : finite_field_elements(gf)) {
            const ProjPoint start =
                ProjPoint::make(one, c, FieldElement::zero(gf));
            const ProjLine l = join(start, ProjPoint::make_int(gf, 0, 1, 1));
            const ProjPoint hit = meet(l, ProjLine::make_int(gf, 1, 0, -1));
            CHECK(hit == ProjPoint::make(one, c + one, one));
            CHECK(pts.count(hit.encode()) == 1);
        }
    }
}

TEST_CASE("incidence matrices from structures") {
    const IncidenceStructure inc =
        compute_incidence(generate({Family::CompleteQuadrilateral, 0, 0, 0}));
    const IncidenceMatrix m = IncidenceMatrix::from_incidence(inc);
    CHECK(m.rows == 7);
    CHECK(m.cols == 6);
    // row sums are the point multiplicities, column sums the per-line counts
    for (int i = 0; i < m.rows; ++i) {
        int rsum = 0;
        for (int j = 0; j < m.cols; ++j) rsum += m.at(i, j);
        CHECK(rsum == inc.points[i].multiplicity());
    }
    for (int j = 0; j < m.cols; ++j) {
        int col = 0;
        for (int i = 0; i < m.rows; ++i) col += m.at(i, j);
        CHECK(col == (int)inc.points_on_line[j].size());
    }
}

#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace arr;

namespace {

TVector tv_of(const Arrangement& a) { return tvector(compute_incidence(a)); }

// Brute-force oracle: group the pairwise meets by all-pairs point equality,
// no encodings, no sorting.
std::map<long, long> brute_force_histogram(const Arrangement& arr) {
    std::vector<ProjPoint> pts;
    std::vector<std::set<int>> groups;
    const int d = (int)arr.lines.size();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const ProjPoint p = meet(arr.lines[i], arr.lines[j]);
            bool placed = false;
            for (size_t g = 0; g < pts.size(); ++g) {
                if (pts[g] == p) {
                    groups[g].insert(i);
                    groups[g].insert(j);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                pts.push_back(p);
                groups.push_back({i, j});
            }
        }
    }
    std::map<long, long> hist;
    for (const auto& g : groups) hist[(long)g.size()] += 1;
    return hist;
}

}  // namespace

TEST_CASE("computed incidence matches the classical counts") {
    const TVector cq = tv_of(generate({Family::CompleteQuadrilateral, 0, 0, 0}));
    CHECK(cq.d == 6);
    CHECK(cq.t(2) == 3);
    CHECK(cq.t(3) == 4);
    CHECK(cq.counts.size() == 2);

    const TVector fano = tv_of(generate({Family::FiniteProjectivePlane, 0, 2, 1}));
    CHECK(fano.d == 7);
    CHECK(fano.t(3) == 7);
    CHECK(fano.counts.size() == 1);

    const TVector m5 = tv_of(generate({Family::GeneralPosition, 5, 0, 0}));
    CHECK(m5.d == 5);
    CHECK(m5.t(2) == 10);
    CHECK(m5.counts.size() == 1);
}

TEST_CASE("t-vectors of the named examples") {
    const TVector dh = tv_of(generate({Family::DualHesse, 0, 0, 0}));
    CHECK(dh.d == 9);
    CHECK(dh.t(3) == 12);

    const TVector pencil = tv_of(generate({Family::Pencil, 5, 0, 0}));
    CHECK(pencil.d == 5);
    CHECK(pencil.t(5) == 1);
    CHECK(pencil.counts.size() == 1);

    const TVector pg3 = tv_of(generate({Family::FiniteProjectivePlane, 0, 3, 1}));
    CHECK(pg3.d == 13);
    CHECK(pg3.t(4) == 13);
}

TEST_CASE("pair identity") {
    CHECK(pair_identity_check(
        TVector::hand(6, {{2, Int(3)}, {3, Int(4)}})));
    // the right-triangle t-vector satisfies it symbolically: both sides are
    // 32n^2 - 4n
    for (long n = 3; n <= 12; ++n) {
        const TVector tv = expected_tvector({Family::RightTriangleArray, n, 0, 0});
        CHECK(pair_identity_check(tv));
        CHECK(binom2(Int(tv.d)) == 32 * Int(n) * n - 4 * n);
    }
    CHECK(!pair_identity_check(TVector::hand(9, {{3, Int(11)}})));
}

TEST_CASE("classification") {
    CHECK(classify(TVector::hand(5, {{5, Int(1)}})) == ArrClass::Trivial);
    CHECK(classify(TVector::hand(5, {{2, Int(4)}, {4, Int(1)}})) ==
          ArrClass::QuasiTrivial);
    CHECK(classify(TVector::hand(5, {{2, Int(10)}})) ==
          ArrClass::GeneralPosition);
    CHECK(classify(TVector::hand(9, {{3, Int(12)}})) == ArrClass::Other);
}

TEST_CASE("largest pencil") {
    const auto pencil7 = largest_pencil(
        compute_incidence(generate({Family::Pencil, 7, 0, 0})));
    CHECK(pencil7.m_max == 7);
    CHECK(pencil7.residual == 0);

    const auto fano = largest_pencil(
        compute_incidence(generate({Family::FiniteProjectivePlane, 0, 2, 1})));
    CHECK(fano.m_max == 3);
    CHECK(fano.residual == 4);

    const auto np6 = largest_pencil(
        compute_incidence(generate({Family::NearPencil, 6, 0, 0})));
    CHECK(np6.m_max == 5);
    CHECK(np6.residual == 1);
}

TEST_CASE("per-line point counts") {
    for (const Arrangement& a :
         {generate({Family::CompleteQuadrilateral, 0, 0, 0}),
          generate({Family::DualHesse, 0, 0, 0}),
          generate({Family::FiniteProjectivePlane, 0, 3, 1}),
          generate({Family::RightTriangleArray, 3, 0, 0})}) {
        const IncidenceStructure inc = compute_incidence(a);
        const TVector tv = tvector(inc);
        Int total = 0;
        for (const auto& pts : inc.points_on_line) {
            CHECK((long)pts.size() >= 1);
            CHECK((long)pts.size() <= inc.d - 1);
            total += (long)pts.size();
        }
        CHECK(total == tv.sum_mt());
    }
}

TEST_CASE("t-vector is a projective invariant") {
    testing::Rng rng(5150);
    for (const Arrangement& a :
         {generate({Family::CompleteQuadrilateral, 0, 0, 0}),
          generate({Family::GeneralPosition, 6, 0, 0}),
          generate({Family::FiniteProjectivePlane, 0, 2, 1}),
          generate({Family::DualHesse, 0, 0, 0})}) {
        const TVector reference = tv_of(a);
        for (int iter = 0; iter < 5; ++iter) {
            const Projectivity t = testing::random_projectivity(a.desc, rng);
            CHECK(tv_of(testing::transformed(a, t)) == reference);
        }
    }
}

TEST_CASE("brute-force grouping oracle agrees for small arrangements") {
    for (const Arrangement& a :
         {generate({Family::CompleteQuadrilateral, 0, 0, 0}),
          generate({Family::FiniteProjectivePlane, 0, 2, 1}),
          generate({Family::GeneralPosition, 8, 0, 0}),
          generate({Family::NearPencil, 6, 0, 0}),
          generate({Family::Pencil, 5, 0, 0})}) {
        const auto oracle = brute_force_histogram(a);
        const TVector tv = tv_of(a);
        std::map<long, long> computed;
        for (auto& [m, t] : tv.counts) computed[m] = (long)t.get_si();
        CHECK(computed == oracle);
    }
}

TEST_CASE("duplicate lines are rejected") {
    const FieldDesc Q = make_rational();
    CHECK_THROWS_AS(Arrangement::make(Q,
                                      {ProjLine::make_int(Q, 1, 0, 0),
                                       ProjLine::make_int(Q, 2, 0, 0)},
                                      "dup"),
                    DuplicateLine);
    CHECK_THROWS_AS(Arrangement::make(Q, {ProjLine::make_int(Q, 1, 0, 0)}, "one"),
                    ParameterOutOfRange);
}

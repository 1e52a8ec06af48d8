#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eiscurve/btree.hpp"
#include "eiscurve/error.hpp"

#include <map>
#include <random>
#include <set>

using namespace eiscurve;

namespace {

Mat2 make(long a, long b, long c, long d) {
    Mat2 m;
    m.e[0][0] = Rational(a);
    m.e[0][1] = Rational(b);
    m.e[1][0] = Rational(c);
    m.e[1][1] = Rational(d);
    return m;
}

Mat2 make_q(Rational a, Rational b, Rational c, Rational d) {
    Mat2 m;
    m.e[0][0] = a;
    m.e[0][1] = b;
    m.e[1][0] = c;
    m.e[1][1] = d;
    return m;
}

MatrixRep worked_example() {
    MatrixRep rep;
    rep.p = 3;
    rep.generators = {make(1, 1, 0, 1), make(1, 0, 3, 1)};
    rep.labels = {"M1", "M2"};
    return rep;
}

// exhaustive ball enumeration straight from the normal-form parametrization:
// (a, b, c) with a + c <= radius, 0 <= b < p^a, min(a, c, v_p(b)) = 0
std::vector<LatticeVertex> ball_by_enumeration(long p, long radius) {
    std::vector<LatticeVertex> out;
    for (long a = 0; a <= radius; ++a) {
        for (long c = 0; a + c <= radius; ++c) {
            Integer pa = pow_integer(Integer(p), a);
            for (Integer b = 0; b < pa; ++b) {
                long min_val = std::min(a, c);
                if (b != 0) min_val = std::min(min_val, valuation(b, p));
                if (min_val != 0) continue;
                out.emplace_back(p, a, b, c);
            }
        }
    }
    return out;
}

// random unimodular column operations over Z localized at p, plus a scaling
Mat2 randomized_rebase(const Mat2& basis, long p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<long> small(-6, 6);
    Mat2 u = Mat2::identity();
    for (int step = 0; step < 5; ++step) {
        Mat2 op = Mat2::identity();
        switch (coin(rng)) {
            case 0:  // shear, p-integral entry with non-p denominator allowed
                op.e[0][1] = Rational(small(rng), p == 7 ? 3 : 7);
                break;
            case 1:
                op.e[1][0] = Rational(small(rng));
                break;
            case 2:  // column swap
                op = make(0, 1, 1, 0);
                break;
            default: {  // unit scaling of one column
                long num = small(rng) | 1;  // odd, nonzero
                if (num % p == 0) num += 2;
                op.e[0][0] = Rational(num, p == 7 ? 2 : 7);
                break;
            }
        }
        u = u * op;
    }
    std::uniform_int_distribution<long> power(-2, 2);
    Rational scale = pow_rational(Rational(p), power(rng)) * Rational(small(rng) | 1, 1);
    if (scale == 0) scale = 1;
    Mat2 out = basis * u;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.e[i][j] *= scale;
    return out;
}

}  // namespace

TEST_CASE("vertex normalization basics") {
    CHECK(vertex_normalize(Mat2::identity(), 5) == LatticeVertex::standard(5));
    // homothety by p collapses
    CHECK(vertex_normalize(make(25, 0, 0, 5), 5) == vertex_normalize(make(5, 0, 0, 1), 5));
    // columns swapped and scaled by 3 still normalizes to [[5, 1], [0, 1]]
    Mat2 swapped = make(3 * 1, 3 * 5, 3 * 1, 0);  // columns (1,1) and (5,0) scaled by 3
    CHECK(vertex_normalize(swapped, 5) == LatticeVertex(5, 1, 1, 0));
    // non-invertible input
    CHECK_THROWS_AS(vertex_normalize(make(1, 2, 2, 4), 5), Error);
    // diag(1, p) has the c = 1 normal form
    CHECK(vertex_normalize(make(1, 0, 0, 3), 3) == LatticeVertex(3, 0, 0, 1));
}

TEST_CASE("lattice vertex invariants") {
    CHECK_THROWS_AS(LatticeVertex(4, 0, 0, 0), Error);   // p not prime
    CHECK_THROWS_AS(LatticeVertex(3, 1, 3, 0), Error);   // b out of range
    CHECK_THROWS_AS(LatticeVertex(3, 1, 0, 1), Error);   // not primitive
    CHECK(LatticeVertex(3, 1, 1, 1).radius() == 2);      // v_3(1) = 0, fine
}

TEST_CASE("neighbors of the standard vertex at p = 2") {
    auto ns = neighbors(LatticeVertex::standard(2));
    REQUIRE(ns.size() == 3);
    std::set<LatticeVertex> got(ns.begin(), ns.end());
    std::set<LatticeVertex> expected = {
        LatticeVertex(2, 1, 0, 0),  // [[2,0],[0,1]]
        LatticeVertex(2, 1, 1, 0),  // [[2,1],[0,1]]
        LatticeVertex(2, 0, 0, 1),  // [[1,0],[0,2]]
    };
    CHECK(got == expected);
}

TEST_CASE("neighbor relation is p+1-regular and symmetric") {
    for (long p : {2L, 3L, 5L}) {
        auto ball = ball_by_enumeration(p, 3);
        std::set<LatticeVertex> inside(ball.begin(), ball.end());
        for (const auto& v : ball) {
            auto ns = neighbors(v);
            CHECK(ns.size() == static_cast<std::size_t>(p + 1));
            std::set<LatticeVertex> distinct(ns.begin(), ns.end());
            CHECK(distinct.size() == ns.size());
            for (const auto& w : ns) {
                auto back = neighbors(w);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
    }
}

TEST_CASE("BFS layer sizes match the tree growth formula") {
    for (long p : {2L, 3L, 5L}) {
        // count vertices at each radius via the enumeration
        std::map<long, long> per_radius;
        for (const auto& v : ball_by_enumeration(p, 3)) ++per_radius[v.radius()];
        CHECK(per_radius[0] == 1);
        long power = 1;
        for (long r = 1; r <= 3; ++r) {
            CHECK(per_radius[r] == (p + 1) * power);
            power *= p;
        }
        // and BFS over neighbors reaches exactly the same ball
        std::set<LatticeVertex> bfs;
        std::set<LatticeVertex> frontier = {LatticeVertex::standard(p)};
        bfs.insert(LatticeVertex::standard(p));
        for (int r = 0; r < 3; ++r) {
            std::set<LatticeVertex> next;
            for (const auto& v : frontier)
                for (const auto& w : neighbors(v))
                    if (bfs.insert(w).second) next.insert(w);
            frontier = std::move(next);
        }
        auto ball = ball_by_enumeration(p, 3);
        CHECK(bfs == std::set<LatticeVertex>(ball.begin(), ball.end()));
    }
}

TEST_CASE("stability of the worked example") {
    MatrixRep rep = worked_example();
    CHECK(is_stable(LatticeVertex::standard(3), rep));
    CHECK(is_stable(LatticeVertex(3, 0, 0, 1), rep));   // class of diag(1, 3)
    CHECK_FALSE(is_stable(LatticeVertex(3, 0, 0, 2), rep));  // class of diag(1, 9)
    CHECK_FALSE(is_stable(LatticeVertex(3, 1, 0, 0), rep));
    CHECK_FALSE(is_stable(LatticeVertex(3, 1, 1, 0), rep));
}

TEST_CASE("stability is invariant under homothety and rebasing") {
    std::mt19937_64 rng(90210);
    MatrixRep rep = worked_example();
    for (const auto& v : ball_by_enumeration(3, 3)) {
        bool stable = is_stable(v, rep);
        for (int trial = 0; trial < 50; ++trial) {
            Mat2 rebased = randomized_rebase(v.basis(), 3, rng);
            CHECK(vertex_normalize(rebased, 3) == v);
            CHECK(is_stable_basis(rebased, rep, 3) == stable);
        }
    }
}

TEST_CASE("reduction classification worked cases") {
    MatrixRep rep = worked_example();
    auto at_standard = reduction_at(LatticeVertex::standard(3), rep);
    CHECK(at_standard.cls == ReductionClass::reducible_indecomposable);
    REQUIRE(at_standard.stable_lines.size() == 1);
    CHECK(at_standard.stable_lines[0] == std::array<long, 2>{1, 0});
    // M1 reduces to the unipotent shear, M2 to the identity
    CHECK(at_standard.generators[0].e[0][1] == 1);
    CHECK(at_standard.generators[1].e[1][0] == 0);

    auto at_diag = reduction_at(LatticeVertex(3, 0, 0, 1), rep);
    CHECK(at_diag.cls == ReductionClass::reducible_indecomposable);

    // rotation by [[0,-1],[1,0]] is irreducible mod 3
    MatrixRep rot{3, {make(0, -1, 1, 0)}, {"r"}};
    auto red = reduction_at(LatticeVertex::standard(3), rot);
    CHECK(red.cls == ReductionClass::irreducible);
    CHECK(red.stable_lines.empty());

    // distinct diagonal generators split
    MatrixRep diag{3, {make(1, 0, 0, 2), make(2, 0, 0, 1)}, {"d1", "d2"}};
    CHECK(reduction_at(LatticeVertex::standard(3), diag).cls == ReductionClass::split);

    // unstable vertex refuses to reduce
    CHECK_THROWS_AS(reduction_at(LatticeVertex(3, 1, 0, 0), rep), Error);
    try {
        reduction_at(LatticeVertex(3, 1, 0, 0), rep);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_stable);
    }
}

TEST_CASE("stable set of the worked example is the length-1 segment") {
    MatrixRep rep = worked_example();
    StableSet set = stable_set(rep, 6);
    CHECK_FALSE(set.unbounded);
    CHECK(set.geometry == StableGeometry::segment);
    CHECK(set.length == 1);
    REQUIRE(set.vertices.size() == 2);
    CHECK(set.vertices[0] == LatticeVertex::standard(3));
    CHECK(set.vertices[1] == LatticeVertex(3, 0, 0, 1));
    REQUIRE(set.endpoints.has_value());
    CHECK(segment_classification_consistent(rep, set));
    for (const auto& v : set.vertices)
        CHECK(reduction_at(v, rep).cls == ReductionClass::reducible_indecomposable);
}

TEST_CASE("stable set agrees with the exhaustive conjugation oracle") {
    MatrixRep rep = worked_example();
    StableSet set = stable_set(rep, 6);
    std::set<LatticeVertex> from_bfs(set.vertices.begin(), set.vertices.end());
    std::set<LatticeVertex> from_oracle;
    for (const auto& v : ball_by_enumeration(3, 6))
        if (is_stable(v, rep)) from_oracle.insert(v);
    CHECK(from_bfs == from_oracle);
}

TEST_CASE("irreducible residual representation pins the stable set to a point") {
    MatrixRep rot{3, {make(0, -1, 1, 0)}, {"r"}};
    StableSet set = stable_set(rot, 6);
    CHECK_FALSE(set.unbounded);
    CHECK(set.geometry == StableGeometry::segment);
    CHECK(set.length == 0);
    REQUIRE(set.vertices.size() == 1);
    CHECK(set.vertices[0] == LatticeVertex::standard(3));
    REQUIRE(set.endpoints.has_value());
    CHECK(set.endpoints->first == set.endpoints->second);
    CHECK(segment_classification_consistent(rot, set));
}

TEST_CASE("globally reducible representation overflows the cap") {
    MatrixRep shear{3, {make(1, 1, 0, 1)}, {"u"}};
    StableSet set = stable_set(shear, 4);
    CHECK(set.unbounded);
    CHECK(set.vertices.size() > 4);
}

TEST_CASE("no-anchor error when the standard vertex is unstable") {
    MatrixRep rep{3, {make_q(Rational(1), Rational(1, 3), Rational(0), Rational(1))}, {"g"}};
    try {
        stable_set(rep, 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::no_anchor);
    }
}

TEST_CASE("reducibility index check on the worked example") {
    MatrixRep rep = worked_example();
    std::vector<Integer> trivial = {1, 1};
    CHECK(reducibility_index_check(rep, trivial, trivial, 1, 6));
    CHECK_FALSE(reducibility_index_check(rep, trivial, trivial, 2, 6));
    // trace(M1 M2) = 5 is the witness mod 9
    Mat2 witness = rep.generators[0] * rep.generators[1];
    CHECK(witness.trace() == Rational(5));

    // identity representation passes at any depth
    MatrixRep id{3, {Mat2::identity()}, {"e"}};
    for (long n = 1; n <= 4; ++n)
        CHECK(reducibility_index_check(id, {Integer(1)}, {Integer(1)}, n, 4));

    // character values must be units
    CHECK_THROWS_AS(reducibility_index_check(rep, {Integer(3), Integer(1)}, trivial, 1, 3), Error);
    // one value per generator
    CHECK_THROWS_AS(reducibility_index_check(rep, {Integer(1)}, trivial, 1, 3), Error);
}

TEST_CASE("segment length matches the largest passing congruence depth") {
    MatrixRep rep = worked_example();
    StableSet set = stable_set(rep, 6);
    REQUIRE(set.geometry == StableGeometry::segment);
    std::vector<Integer> trivial = {1, 1};
    long largest = 0;
    for (long n = 1; n <= 4; ++n)
        if (reducibility_index_check(rep, trivial, trivial, n, 6)) largest = n;
    CHECK(largest == set.length);
}

TEST_CASE("segment length equals the reducibility index on a depth family") {
    // generators [[2,1],[0,1]] and [[1,0],[3^n,1]]: irreducible with distinct
    // residual characters 2 and 1, so the stable set is a segment whose
    // length equals the reducibility index. The diagonal character guess
    // (2,1)/(1,1) only certifies depth n; the index itself is 2n, certified
    // by psi1 = (2, 1+3^n), psi2 = (1, 1-3^n), and the segment has length 2n.
    for (long n = 1; n <= 3; ++n) {
        Integer t = pow_integer(Integer(3), n);
        Mat2 g1 = make(2, 1, 0, 1);
        Mat2 g2 = Mat2::identity();
        g2.e[1][0] = Rational(t);
        MatrixRep rep{3, {g1, g2}, {"g1", "g2"}};

        StableSet set = stable_set(rep, 8);
        CHECK_FALSE(set.unbounded);
        REQUIRE(set.geometry == StableGeometry::segment);
        CHECK(set.length == 2 * n);
        CHECK(segment_classification_consistent(rep, set));
        REQUIRE(set.endpoints.has_value());
        CHECK(reduction_at(set.endpoints->first, rep).cls ==
              ReductionClass::reducible_indecomposable);
        CHECK(reduction_at(set.endpoints->second, rep).cls ==
              ReductionClass::reducible_indecomposable);

        // naive diagonal characters reach depth n only
        std::vector<Integer> naive1 = {2, 1}, naive2 = {1, 1};
        CHECK(reducibility_index_check(rep, naive1, naive2, n, 5));
        CHECK_FALSE(reducibility_index_check(rep, naive1, naive2, n + 1, 5));

        // the optimal pair certifies exactly the segment length
        std::vector<Integer> best1 = {2, 1 + t}, best2 = {1, 1 - t};
        CHECK(reducibility_index_check(rep, best1, best2, 2 * n, 5));
        CHECK_FALSE(reducibility_index_check(rep, best1, best2, 2 * n + 1, 5));
    }
}

TEST_CASE("matrix rep validation") {
    MatrixRep bad{3, {make(1, 2, 2, 4)}, {"s"}};
    CHECK_THROWS_AS(bad.validate(), Error);
    MatrixRep bad_p{6, {Mat2::identity()}, {"e"}};
    CHECK_THROWS_AS(bad_p.validate(), Error);
    MatrixRep labels{3, {Mat2::identity()}, {"a", "b"}};
    CHECK_THROWS_AS(labels.validate(), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trax/canonical.hpp"
#include "trax/spine.hpp"
#include "trax/triangulation2.hpp"

using namespace trax;

namespace {

// Edges flippable here: distinct triangles on both sides.
std::vector<int> flippable_edges(const CombSurface& s) {
    auto fl = s.face_labels();
    std::vector<int> out;
    for (int d = 0; d < s.darts(); ++d) {
        if (d > s.opp(d)) continue;
        if (fl[d] != fl[s.opp(d)]) out.push_back(d);
    }
    return out;
}

} // namespace

TEST_CASE("check triangulation counts") {
    auto t2 = standard_one_vertex_triangulation(2);
    auto r = check_triangulation(t2);
    REQUIRE(r.vertices == 1);
    REQUIRE(r.edges == 9);
    REQUIRE(r.faces == 6);
    REQUIRE(r.genus == 2);

    // genus-2 with V=4 must have E=18, F=12; build by three 1-3 moves
    CombSurface s = t2;
    for (int i = 0; i < 3; ++i) {
        pachner13(s, 0);
        s.compact();
    }
    auto r4 = check_triangulation(s, 4);
    REQUIRE(r4.edges == 18);
    REQUIRE(r4.faces == 12);
    REQUIRE(r4.genus == 2);
}

TEST_CASE("non-triangular face rejected") {
    CombSurface sq = CombSurface::from_faces({{1, 2, -1, -2}}); // torus as a square
    REQUIRE_THROWS_AS(check_triangulation(sq), Error);
}

TEST_CASE("pachner 2-2 preserves counts") {
    CombSurface s = standard_one_vertex_triangulation(2);
    auto flips = flippable_edges(s);
    REQUIRE(!flips.empty());
    pachner22(s, flips[0]);
    auto r = check_triangulation(s);
    REQUIRE(r.vertices == 1);
    REQUIRE(r.edges == 9);
    REQUIRE(r.faces == 6);
    REQUIRE(r.genus == 2);
}

TEST_CASE("pachner 2-2 rejects folded edge") {
    CombSurface s = standard_one_vertex_triangulation(2);
    auto fl = s.face_labels();
    int bad = -1;
    for (int d = 0; d < s.darts() && bad < 0; ++d)
        if (fl[d] == fl[s.opp(d)]) bad = d;
    if (bad >= 0) {
        REQUIRE_THROWS_AS(pachner22(s, bad), Error);
    }
}

TEST_CASE("pachner 1-3 and 3-1 are inverse") {
    CombSurface s = standard_one_vertex_triangulation(2);
    CombSurface orig = s;
    int n_before = s.darts();
    pachner13(s, 0);
    auto r = check_triangulation(s, 2);
    REQUIRE(r.faces == 8);
    REQUIRE(s.darts() == n_before + 6);
    // the new vertex is at the centre rotation created by the move
    // (first new dart's opp); undo it
    int centre = s.opp(n_before); // dnP
    pachner31(s, centre);
    REQUIRE(isomorphic(s, orig));
}

TEST_CASE("random flips stay valid and connected to duals") {
    std::mt19937_64 rng(42);
    for (int g : {2, 3}) {
        CombSurface s = standard_one_vertex_triangulation(g);
        for (int step = 0; step < 60; ++step) {
            auto flips = flippable_edges(s);
            REQUIRE(!flips.empty());
            std::uniform_int_distribution<size_t> pick(0, flips.size() - 1);
            pachner22(s, flips[pick(rng)]);
            auto r = check_triangulation(s, 1);
            REQUIRE(r.genus == g);
            Spine sp = dualize_triangulation(s);
            REQUIRE(check_standalone_spine(sp.g).ok);
            REQUIRE(sp.g.vertex_count() == 4 * g - 2);
            REQUIRE(sp.g.edge_count() == 6 * g - 3);
        }
    }
}

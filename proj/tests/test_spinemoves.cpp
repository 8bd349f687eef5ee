#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trax/canonical.hpp"
#include "trax/spinemoves.hpp"

using namespace trax;

namespace {

Spine theta() {
    return dualize_triangulation(CombSurface::from_faces({{1, 2, -3}, {3, -1, -2}}));
}

Spine wedge() { return Spine{CombSurface::from_faces({{1, 2, -1, -2}})}; }

Spine genus2_spine() { return dualize_triangulation(standard_one_vertex_triangulation(2)); }

std::vector<int> flippable_edges(const CombSurface& s) {
    auto fl = s.face_labels();
    std::vector<int> out;
    for (int d = 0; d < s.darts(); ++d)
        if (d < s.opp(d) && fl[d] != fl[s.opp(d)]) out.push_back(d);
    return out;
}

} // namespace

TEST_CASE("contract theta to wedge") {
    Spine th = theta();
    auto res = edge_contract(th, 0);
    REQUIRE(res.spine.g.vertex_count() == 1);
    REQUIRE(res.spine.g.edge_count() == 2);
    REQUIRE(spines_isomorphic(res.spine, wedge()));
}

TEST_CASE("contract loop is rejected") {
    Spine w = wedge();
    REQUIRE_THROWS_AS(edge_contract(w, 0), Error);
    try {
        edge_contract(w, 0);
    } catch (const Error& e) {
        REQUIRE(e.code() == Err::LoopEdge);
    }
}

TEST_CASE("contract genus-2 trivalent spine") {
    Spine sp = genus2_spine();
    auto res = edge_contract(sp, 0);
    REQUIRE(res.spine.g.vertex_count() == 5);
    REQUIRE(res.spine.g.edge_count() == 8);
    int val4 = 0;
    auto vl = res.spine.g.vertex_labels();
    std::vector<int> seen(5, 0);
    for (int d = 0; d < res.spine.g.darts(); ++d) {
        if (!seen[vl[d]]++) {
            if (res.spine.g.valence(d) == 4) ++val4;
        }
    }
    REQUIRE(val4 == 1);
}

TEST_CASE("expand wedge to theta and back") {
    Spine w = wedge();
    auto cyc = w.g.vertex_darts(0);
    REQUIRE(cyc.size() == 4);
    std::vector<int> b1{cyc[0], cyc[1]}, b2{cyc[2], cyc[3]};
    auto res = edge_expand(w, b1, b2);
    REQUIRE(res.spine.g.vertex_count() == 2);
    REQUIRE(res.spine.g.edge_count() == 3);
    REQUIRE(spines_isomorphic(res.spine, theta()));

    // contract the new edge: back to the wedge exactly, up to relabeling
    int new_dart = res.spine.g.darts() - 2;
    auto back = edge_contract(res.spine, new_dart);
    REQUIRE(canonical_code(back.spine.g) == canonical_code(w.g));

    // block of size 1 would create a valence < 3 vertex
    REQUIRE_THROWS_AS(edge_expand(w, {cyc[0]}, {cyc[1], cyc[2], cyc[3]}), Error);
    // non-contiguous blocks
    REQUIRE_THROWS_AS(edge_expand(w, {cyc[0], cyc[2]}, {cyc[1], cyc[3]}), Error);
}

TEST_CASE("expand then contract on genus 2 is the identity") {
    Spine sp = genus2_spine();
    auto res = edge_contract(sp, 0);
    // re-expand with the original pairing: rotation (a1 a2 b1 b2) where
    // a1 = next(0), a2 = prev(0) at one end, b's at the other
    int db = sp.g.opp(0);
    std::vector<int> blk1{res.dart_map[sp.g.next(0)], res.dart_map[sp.g.prev(0)]};
    std::vector<int> blk2{res.dart_map[sp.g.next(db)], res.dart_map[sp.g.prev(db)]};
    auto res2 = edge_expand(res.spine, blk1, blk2);
    REQUIRE(canonical_code(res2.spine.g) == canonical_code(sp.g));
}

TEST_CASE("edge swap realizes a Dehn twist on the wedge") {
    Spine w = wedge();
    // corner feet on the two sides of edge(0), removing edge(0)
    SwapSpec spec;
    spec.a = Foot{0, true};
    spec.b = Foot{w.g.opp(0), true};
    spec.out = 0;
    Spine tw = edge_swap(w, spec);
    REQUIRE(check_standalone_spine(tw.g).ok);
    REQUIRE(tw.genus() == 1);
    // a Dehn twist is a homeomorphism, so the twisted spine is isomorphic
    REQUIRE(spines_isomorphic(tw, w));
}

TEST_CASE("edge swap validity scan on theta") {
    Spine th = theta();
    int ok = 0, bad = 0;
    for (int da = 0; da < th.g.darts(); ++da) {
        for (int dbb = 0; dbb < th.g.darts(); ++dbb) {
            if (da == dbb) continue;
            for (int out = 0; out < th.g.darts(); ++out) {
                SwapSpec spec{Foot{da, true}, Foot{dbb, true}, out, false};
                try {
                    Spine res = edge_swap(th, spec);
                    REQUIRE(check_standalone_spine(res.g).ok);
                    REQUIRE(res.genus() == 1);
                    ++ok;
                } catch (const Error& e) {
                    bool expected = e.code() == Err::SameFaceBothSides ||
                                    e.code() == Err::ComplementNotDisc;
                    REQUIRE(expected);
                    ++bad;
                }
            }
        }
    }
    REQUIRE(ok > 0);
    REQUIRE(bad > 0);
}

TEST_CASE("swap then inverse swap recovers the spine") {
    Spine th = theta();
    SwapSpec spec{Foot{0, true}, Foot{th.g.opp(0), true}, 0, false};
    Spine once = edge_swap(th, spec);
    // some single swap on the result returns to the original class
    bool found = false;
    for (int da = 0; da < once.g.darts() && !found; ++da)
        for (int dbb = 0; dbb < once.g.darts() && !found; ++dbb)
            for (int out = 0; out < once.g.darts() && !found; ++out) {
                if (da == dbb) continue;
                try {
                    Spine back =
                        edge_swap(once, SwapSpec{Foot{da, true}, Foot{dbb, true}, out, false});
                    if (canonical_code(back.g) == canonical_code(th.g)) found = true;
                } catch (const Error&) {
                }
            }
    REQUIRE(found);
}

TEST_CASE("side feet subdivide and swap") {
    Spine sp = genus2_spine();
    std::mt19937_64 rng(5);
    int ok = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> pick(0, sp.g.darts() - 1);
        int da = pick(rng), dbb = pick(rng), out = pick(rng);
        if (da == dbb) continue;
        std::bernoulli_distribution corner(0.5);
        SwapSpec spec{Foot{da, corner(rng)}, Foot{dbb, corner(rng)}, out, corner(rng)};
        try {
            Spine res = edge_swap(sp, spec);
            REQUIRE(check_standalone_spine(res.g).ok);
            REQUIRE(res.genus() == 2);
            ++ok;
        } catch (const Error& e) {
            bool expected = e.code() == Err::SameFaceBothSides ||
                            e.code() == Err::ComplementNotDisc ||
                            e.code() == Err::BadPartition;
            REQUIRE(expected);
        }
    }
    REQUIRE(ok > 50);
}

TEST_CASE("pachner path as spine moves") {
    CombSurface t = standard_one_vertex_triangulation(2);
    // empty path
    REQUIRE(pachner_as_spine_moves(t, {}).empty());

    // single flip: exactly contract + expand, endpoint matches the dual
    auto flips = flippable_edges(t);
    MoveSeq seq = pachner_as_spine_moves(t, {flips[0]});
    REQUIRE(seq.size() == 2);
    REQUIRE(seq[0].kind == Move::Kind::Contract);
    REQUIRE(seq[1].kind == Move::Kind::Expand);
    Spine end = replay(dualize_triangulation(t), seq);
    CombSurface t2 = t;
    pachner22(t2, flips[0]);
    REQUIRE(spines_isomorphic(end, dualize_triangulation(t2)));
}

TEST_CASE("longer pachner paths replay correctly") {
    std::mt19937_64 rng(17);
    for (int g : {2, 3}) {
        CombSurface t = standard_one_vertex_triangulation(g);
        std::vector<int> path;
        CombSurface cur = t;
        for (int i = 0; i < 8; ++i) {
            auto fl = flippable_edges(cur);
            std::uniform_int_distribution<size_t> pick(0, fl.size() - 1);
            int e = fl[pick(rng)];
            path.push_back(e);
            pachner22(cur, e);
        }
        MoveSeq seq = pachner_as_spine_moves(t, path);
        REQUIRE(seq.size() == 2 * path.size());
        Spine end = replay(dualize_triangulation(t), seq);
        REQUIRE(spines_isomorphic(end, dualize_triangulation(cur)));
    }
}

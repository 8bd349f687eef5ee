#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trax/spine.hpp"
#include "trax/triangulation2.hpp"

namespace trax {

// A chord endpoint on the boundary of the complement disc. A Side foot lands
// in the interior of the given dart's edge-side and subdivides the edge; a
// Corner foot lands at the vertex corner between the dart and its face-walk
// successor.
struct Foot {
    int dart = -1;
    bool corner = false;
};

// Swap data: insert the chord from foot a to foot b, then remove the edge of
// Gamma + chord named by `out`. When the out edge was subdivided by a Side
// foot, the removed segment is the one incident to the original origin of
// dart `out` (or to its original head when out_head_end is set). The segment
// between two feet on the same edge is not nameable; the procedures here
// never need it.
struct SwapSpec {
    Foot a, b;
    int out = -1;
    bool out_head_end = false;
};

struct Move {
    enum class Kind { Contract, Expand, Swap, P22, P13, P31 };
    Kind kind;
    int arg = -1;                    // contract/p22: edge dart; p13: face dart; p31: vertex dart
    std::vector<int> block1, block2; // expand
    SwapSpec swap;                   // swap (standalone)
    std::vector<int> path;           // cellular swap: chord as a 1-cell dart path
};

using MoveSeq = std::vector<Move>;

struct SpineResult {
    Spine spine;
    std::vector<int> dart_map; // old dart -> new dart, -1 if removed
};

// Collapses edge(d), which must join distinct vertices.
inline SpineResult edge_contract(const Spine& sp, int d) {
    CombSurface g = sp.g;
    int db = g.opp(d);
    for (int e : g.vertex_darts(d))
        if (e == db) throw Error(Err::LoopEdge, "cannot contract a loop edge");
    int a1 = g.next(d), ak = g.prev(d);
    int b1 = g.next(db), bm = g.prev(db);
    g.detach(d);
    g.detach(db);
    // merged rotation: (a1 .. ak b1 .. bm)
    g.link(ak, b1);
    g.link(bm, a1);
    g.mark_dead(d);
    g.mark_dead(db);
    auto map = g.compact();
    Spine out{std::move(g)};
    auto diag = check_standalone_spine(out.g);
    if (!diag.ok)
        throw Error(Err::ComplementNotDisc, "contraction broke the spine: " + diag.detail);
    return {std::move(out), std::move(map)};
}

// Splits the vertex whose rotation is block1 ++ block2 into two vertices
// joined by a new edge; inverse of edge_contract.
inline SpineResult edge_expand(const Spine& sp, const std::vector<int>& block1,
                               const std::vector<int>& block2) {
    if (block1.size() < 2 || block2.size() < 2)
        throw Error(Err::BadPartition, "each block needs at least 2 darts");
    CombSurface g = sp.g;
    std::vector<int> want = block1;
    want.insert(want.end(), block2.begin(), block2.end());
    std::vector<int> have = g.vertex_darts(block1[0]);
    if (want.size() != have.size())
        throw Error(Err::BadPartition, "blocks do not cover the vertex");
    for (size_t i = 0; i < want.size(); ++i)
        if (want[i] != have[i])
            throw Error(Err::BadPartition, "blocks must follow the rotation order");
    int n1 = g.add_edge();
    int n2 = g.opp(n1);
    g.make_cycle(n1, block1);
    g.make_cycle(n2, block2);
    auto map = g.compact();
    Spine out{std::move(g)};
    auto diag = check_standalone_spine(out.g);
    if (!diag.ok) throw Error(Err::BadPartition, "expansion broke the spine: " + diag.detail);
    return {std::move(out), std::move(map)};
}

// Direct edge swap by surgery. Returns the new spine after the automatic
// valence cleanup.
inline Spine edge_swap(const Spine& sp, const SwapSpec& spec) {
    if (spec.a.dart == spec.b.dart && spec.a.corner == spec.b.corner)
        throw Error(Err::BadPartition, "chord endpoints coincide");
    CombSurface g = sp.g;

    // Segment representatives for the out edge: rep_o is the dart of the
    // current segment incident to the original origin of `out`, pointing
    // away from it; rep_h likewise for the original head.
    int rep_o = spec.out;
    int rep_h = g.opp(spec.out);

    auto subdivide_tracking = [&](int f) {
        // subdivide_edge keeps {f, opp(f)} as the half at origin(f) and
        // returns the new half's dart at the new vertex.
        int n = g.subdivide_edge(f);
        int nb = g.opp(n);
        // If the segment holding rep_o was split and rep_o sat at the far
        // side (rep_o == opp(f)), the original-origin end migrates to the
        // new half, whose end dart is nb.
        if (f != rep_o && g.opp(f) == rep_o) rep_o = nb;
        if (f != rep_h && g.opp(f) == rep_h) rep_h = nb;
        // If rep == f the origin half keeps the dart; nothing to update.
    };

    if (!spec.a.corner) subdivide_tracking(spec.a.dart);
    if (!spec.b.corner) subdivide_tracking(spec.b.dart);

    int c1 = g.add_edge();
    int c2 = g.opp(c1);
    g.attach_after(g.opp(spec.a.dart), c1);
    g.attach_after(g.opp(spec.b.dart), c2);

    // The chord cuts the disc in two; the removed segment must separate them.
    std::vector<int> fl = g.face_labels();
    int seg = spec.out_head_end ? rep_h : rep_o;
    if (fl[seg] == fl[g.opp(seg)])
        throw Error(Err::SameFaceBothSides,
                    "removed edge has the same complementary face on both sides");
    g.kill_edge_of(seg);
    g.compact();
    return normalize_spine(std::move(g));
}

// Replays contract/expand/swap moves against the evolving spine.
inline Spine replay(Spine sp, const MoveSeq& seq) {
    for (const Move& m : seq) {
        switch (m.kind) {
        case Move::Kind::Contract: sp = edge_contract(sp, m.arg).spine; break;
        case Move::Kind::Expand: sp = edge_expand(sp, m.block1, m.block2).spine; break;
        case Move::Kind::Swap: sp = edge_swap(sp, m.swap); break;
        default: throw Error(Err::ParseError, "move not applicable to a spine");
        }
    }
    return sp;
}

inline CombSurface replay_triangulation(CombSurface t, const MoveSeq& seq) {
    for (const Move& m : seq) {
        switch (m.kind) {
        case Move::Kind::P22: pachner22(t, m.arg); break;
        case Move::Kind::P13:
            pachner13(t, m.arg);
            t.compact();
            break;
        case Move::Kind::P31: pachner31(t, m.arg); break;
        default: throw Error(Err::ParseError, "move not applicable to a triangulation");
        }
    }
    return t;
}

// A 2-2 Pachner move is dual to an edge contraction followed by an edge
// expansion on the dual spine: contract the dual edge of the flipped edge,
// then re-split the 4-valent vertex the other way. Returns exactly two
// spine moves per flip; the moves reference the evolving spine's darts.
inline MoveSeq pachner_as_spine_moves(const CombSurface& start,
                                      const std::vector<int>& flip_edges) {
    CombSurface t = start;
    if (t.vertex_count() != 1)
        throw Error(Err::NotOneVertex, "path must start at a 1-vertex triangulation");
    Spine sp = dualize_triangulation(t);
    // dual_surface keeps dart ids, so t-dart -> spine-dart starts as identity
    std::vector<int> to_sp(t.darts());
    for (int i = 0; i < t.darts(); ++i) to_sp[i] = i;

    MoveSeq out;
    for (int e : flip_edges) {
        int d = to_sp[e];
        int db = sp.g.opp(d);
        int a1 = sp.g.next(d), a2 = sp.g.prev(d);
        int b1 = sp.g.next(db), b2 = sp.g.prev(db);
        auto res = edge_contract(sp, d);
        out.push_back(Move{Move::Kind::Contract, d, {}, {}, {}, {}});
        // merged rotation (a1 a2 b1 b2); the flip corresponds to the other
        // pairing (a2 b1 | b2 a1)
        std::vector<int> blk1{res.dart_map[a2], res.dart_map[b1]};
        std::vector<int> blk2{res.dart_map[b2], res.dart_map[a1]};
        auto res2 = edge_expand(res.spine, blk1, blk2);
        out.push_back(Move{Move::Kind::Expand, -1, blk1, blk2, {}, {}});
        sp = res2.spine;

        // track the t -> spine dart correspondence
        pachner22(t, e);
        int n1 = sp.g.darts() - 2, n2 = sp.g.darts() - 1;
        for (int i = 0; i < t.darts(); ++i) {
            if (i == e) { to_sp[i] = n1; continue; }
            if (i == t.opp(e)) { to_sp[i] = n2; continue; }
            int m1 = res.dart_map[to_sp[i]];
            to_sp[i] = m1 >= 0 ? res2.dart_map[m1] : -1;
        }
    }
    return out;
}

} // namespace trax

#pragma once

#include <optional>
#include <vector>

#include "trax/canonical.hpp"
#include "trax/combsurface.hpp"

namespace trax {

// A spine is an embedded graph whose complement in the closed surface is one
// disc, with all vertices of valence at least 3. Because the complement is a
// single disc, a spine is completely described by its own rotation system:
// the carrier surface is recovered by gluing one disc along the single face
// walk. Standalone spines are therefore CombSurface objects with exactly one
// face, and the spine moves below act on them directly.
struct Spine {
    CombSurface g;

    int genus() const { return g.genus(); }
    bool trivalent() const {
        for (int d = 0; d < g.darts(); ++d)
            if (g.valence(d) != 3) return false;
        return true;
    }
};

struct SpineDiagnostics {
    bool ok = false;
    bool closed_under_opp = true;
    bool one_region = true;
    bool region_is_disc = true;
    int min_valence = 0;
    int regions = 0;
    std::string detail;
};

// Checks whether the dart subset `in_gamma` of `carrier` is a spine:
// cutting along it yields a single disc and the graph has min valence >= 3.
// Valence counts amalgamate through valence-2 carrier vertices when
// `cellular` is set (a cellular spine edge may be a path of 1-cells).
inline SpineDiagnostics is_spine(const CombSurface& carrier, const std::vector<char>& in_gamma,
                                 bool cellular = false) {
    SpineDiagnostics diag;
    int n = carrier.darts();
    for (int d = 0; d < n; ++d) {
        if (in_gamma[d] != in_gamma[carrier.opp(d)]) {
            diag.closed_under_opp = false;
            diag.detail = "subset not closed under opposite";
            return diag;
        }
    }

    // Complement regions: faces of the carrier glued across non-spine edges.
    std::vector<int> fl = carrier.face_labels();
    int nf = 0;
    for (int v : fl) nf = std::max(nf, v + 1);
    std::vector<int> uf(nf);
    for (int i = 0; i < nf; ++i) uf[i] = i;
    auto find = [&uf](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    bool any_gamma = false;
    for (int d = 0; d < n; ++d) {
        if (!in_gamma[d])
            uf[find(fl[d])] = find(fl[carrier.opp(d)]);
        else
            any_gamma = true;
    }
    if (!any_gamma) {
        diag.detail = "empty graph";
        return diag;
    }
    std::vector<int> reps;
    for (int i = 0; i < nf; ++i)
        if (find(i) == i) reps.push_back(i);
    diag.regions = static_cast<int>(reps.size());
    if (diag.regions != 1) {
        diag.one_region = false;
        diag.detail = "complement has " + std::to_string(diag.regions) + " regions";
        return diag;
    }

    // Euler characteristic of the cut region: interior vertices minus
    // interior edges plus faces. chi = 1 iff the region is a disc.
    std::vector<int> vl = carrier.vertex_labels();
    int nv = 0;
    for (int v : vl) nv = std::max(nv, v + 1);
    std::vector<char> vertex_on_gamma(nv, 0);
    for (int d = 0; d < n; ++d)
        if (in_gamma[d]) vertex_on_gamma[vl[d]] = 1;
    int interior_v = 0;
    for (int i = 0; i < nv; ++i)
        if (!vertex_on_gamma[i]) ++interior_v;
    int interior_e = 0;
    for (int d = 0; d < n; ++d)
        if (!in_gamma[d] && d < carrier.opp(d)) ++interior_e;
    int chi = interior_v - interior_e + nf;
    if (chi != 1) {
        diag.region_is_disc = false;
        diag.detail = "complement region has Euler characteristic " + std::to_string(chi);
        return diag;
    }

    // Valences of the spine graph (amalgamated when cellular).
    int minval = 1 << 30;
    for (int d = 0; d < n; ++d) {
        if (!in_gamma[d]) continue;
        int val = 0;
        for (int e : carrier.vertex_darts(d))
            if (in_gamma[e]) ++val;
        if (cellular && val == 2) continue;
        minval = std::min(minval, val);
    }
    diag.min_valence = minval == (1 << 30) ? 0 : minval;
    if (cellular ? diag.min_valence < 2 : diag.min_valence < 3) {
        diag.detail = "vertex of valence " + std::to_string(diag.min_valence);
        return diag;
    }
    diag.ok = true;
    return diag;
}

// Induced standalone spine of a cellular spine: restrict the rotation to the
// subset's darts and amalgamate the valence-2 subdivision vertices.
inline Spine extract_spine(const CombSurface& carrier, const std::vector<char>& in_gamma) {
    int n = carrier.darts();
    std::vector<int> sub;
    std::vector<int> newid(n, -1);
    for (int d = 0; d < n; ++d)
        if (in_gamma[d]) {
            newid[d] = static_cast<int>(sub.size());
            sub.push_back(d);
        }
    std::vector<int> opp(sub.size()), next(sub.size());
    for (size_t i = 0; i < sub.size(); ++i) {
        int d = sub[i];
        opp[i] = newid[carrier.opp(d)];
        int e = carrier.next(d);
        while (!in_gamma[e]) e = carrier.next(e);
        next[i] = newid[e];
    }
    CombSurface g = CombSurface::build(std::move(opp), std::move(next));
    // amalgamate valence-2 vertices
    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = 0; d < g.darts(); ++d) {
            if (g.is_dead(d)) continue;
            if (g.next(d) != d && g.next(g.next(d)) == d) {
                g.smooth_valence2(d);
                changed = true;
                break;
            }
        }
    }
    g.compact();
    return Spine{std::move(g)};
}

inline SpineDiagnostics check_standalone_spine(const CombSurface& g) {
    SpineDiagnostics diag;
    if (g.darts() == 0) {
        diag.detail = "empty graph";
        return diag;
    }
    diag.regions = g.face_count();
    if (diag.regions != 1) {
        diag.one_region = false;
        diag.detail = "complement has " + std::to_string(diag.regions) + " regions";
        return diag;
    }
    int minval = 1 << 30;
    for (int d = 0; d < g.darts(); ++d) minval = std::min(minval, g.valence(d));
    diag.min_valence = minval;
    if (minval < 3) {
        diag.detail = "vertex of valence " + std::to_string(minval);
        return diag;
    }
    if (!g.connected()) {
        diag.detail = "graph not connected";
        return diag;
    }
    diag.ok = true;
    return diag;
}

// Leaves are pruned and valence-2 vertices amalgamated until the graph is a
// spine. The input must have a one-disc complement.
inline Spine normalize_spine(CombSurface g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = 0; d < g.darts(); ++d) {
            if (g.is_dead(d)) continue;
            if (g.next(d) == d) { // leaf: remove it and its incident edge
                g.kill_edge_of(d);
                changed = true;
                break;
            }
            if (g.next(g.next(d)) == d) { // valence 2: amalgamate
                g.smooth_valence2(d);
                changed = true;
                break;
            }
        }
    }
    g.compact();
    auto diag = check_standalone_spine(g);
    if (!diag.ok) throw Error(Err::ComplementNotDisc, diag.detail);
    return Spine{std::move(g)};
}

// Duality exchanges vertices and faces: the dual's rotation is the face walk
// of the primal. It is an exact involution on dart systems.
inline CombSurface dual_surface(const CombSurface& s) {
    std::vector<int> opp(s.darts()), next(s.darts());
    for (int d = 0; d < s.darts(); ++d) {
        opp[d] = s.opp(d);
        next[d] = s.face_next(d);
    }
    return CombSurface::build(std::move(opp), std::move(next));
}

// Trivalent spine -> 1-vertex triangulation on the same carrier.
inline CombSurface dualize_spine(const Spine& sp) {
    if (!sp.trivalent()) throw Error(Err::NotTrivalent, "spine has a vertex of valence != 3");
    return dual_surface(sp.g);
}

// 1-vertex triangulation -> trivalent spine.
inline Spine dualize_triangulation(const CombSurface& t) {
    if (t.vertex_count() != 1)
        throw Error(Err::NotOneVertex, "triangulation has more than one vertex");
    for (int d = 0; d < t.darts(); ++d)
        if (t.face_darts(d).size() != 3)
            throw Error(Err::NonTriangularFace, "face is not a triangle");
    Spine sp{dual_surface(t)};
    return sp;
}

inline bool spines_isomorphic(const Spine& a, const Spine& b) {
    return isomorphic(a.g, b.g);
}

} // namespace trax

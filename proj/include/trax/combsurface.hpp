#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "trax/error.hpp"

namespace trax {

// A closed oriented surface with an embedded graph, encoded as a dart system:
//   opp  - fixed-point-free involution pairing each dart with its reverse,
//   next - counterclockwise rotation of darts around their vertex.
// Vertices are the orbits of next, edges the orbits of opp, and faces the
// orbits of d -> next(opp(d)), which walks a face keeping it on the left.
// The encoding forces orientability; genus is derived from Euler counts and
// never stored separately.
//
// Mutating surgery methods are building blocks for the move operations; a
// public object is always compacted (dart ids are 0..darts()-1).
class CombSurface {
public:
    CombSurface() = default;

    static CombSurface build(std::vector<int> opp, std::vector<int> next) {
        CombSurface s;
        s.opp_ = std::move(opp);
        s.next_ = std::move(next);
        s.dead_.assign(s.opp_.size(), 0);
        s.rebuild_prev();
        s.validate();
        return s;
    }

    // Builds a surface from faces given as cyclic lists of signed edge
    // labels: +k traverses edge k forward, -k backward. Every label must
    // appear exactly twice, once with each sign.
    static CombSurface from_faces(const std::vector<std::vector<int>>& faces) {
        struct Slot { int face, pos; };
        std::vector<int> owner_pos, owner_face;
        int n = 0;
        for (const auto& f : faces) n += static_cast<int>(f.size());
        std::vector<int> opp(n, -1), fnext(n, -1);
        std::vector<std::pair<int, int>> seen; // label -> dart with +, dart with -
        auto slot = [&](int lbl) -> std::pair<int, int>& {
            if (static_cast<int>(seen.size()) <= lbl) seen.resize(lbl + 1, {-1, -1});
            return seen[lbl];
        };
        int d = 0;
        for (const auto& f : faces) {
            if (f.empty()) throw Error(Err::ParseError, "empty face");
            int m = static_cast<int>(f.size());
            for (int i = 0; i < m; ++i) {
                fnext[d + i] = d + (i + 1) % m;
                int lbl = f[i];
                if (lbl == 0) throw Error(Err::ParseError, "face labels must be nonzero");
                auto& pr = slot(std::abs(lbl));
                int& side = lbl > 0 ? pr.first : pr.second;
                if (side != -1)
                    throw Error(Err::NonPermutation,
                                "edge label used twice with the same sign (non-orientable gluing)");
                side = d + i;
            }
            d += m;
        }
        for (const auto& pr : seen) {
            if (pr.first == -1 && pr.second == -1) continue;
            if (pr.first == -1 || pr.second == -1)
                throw Error(Err::NonPermutation, "edge label must appear exactly twice");
            opp[pr.first] = pr.second;
            opp[pr.second] = pr.first;
        }
        // next = face_next \circ opp, so that face_next(d) = next(opp(d)).
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = fnext[opp[i]];
        return build(std::move(opp), std::move(next));
    }

    int darts() const { return static_cast<int>(opp_.size()); }
    int opp(int d) const { return opp_[d]; }
    int next(int d) const { return next_[d]; }
    int prev(int d) const { return prev_[d]; }
    int face_next(int d) const { return next_[opp_[d]]; }
    int face_prev(int d) const { return opp_[prev_[d]]; }
    int edge_id(int d) const { return std::min(d, opp_[d]); }

    bool operator==(const CombSurface& o) const {
        return opp_ == o.opp_ && next_ == o.next_;
    }

    // Orbit id per dart; ids are assigned in order of smallest dart.
    std::vector<int> orbit_labels(const std::vector<int>& perm) const {
        std::vector<int> lbl(perm.size(), -1);
        int k = 0;
        for (size_t i = 0; i < perm.size(); ++i) {
            if (lbl[i] != -1) continue;
            int d = static_cast<int>(i);
            do {
                lbl[d] = k;
                d = perm[d];
            } while (d != static_cast<int>(i));
            ++k;
        }
        return lbl;
    }

    std::vector<int> vertex_labels() const { return orbit_labels(next_); }

    std::vector<int> face_labels() const {
        std::vector<int> fn(darts());
        for (int d = 0; d < darts(); ++d) fn[d] = face_next(d);
        return orbit_labels(fn);
    }

    int vertex_count() const { return count_orbits(vertex_labels()); }
    int edge_count() const { return darts() / 2; }
    int face_count() const { return count_orbits(face_labels()); }
    int euler_char() const { return vertex_count() - edge_count() + face_count(); }

    int genus() const {
        int chi = euler_char();
        if (chi > 2 || chi % 2 != 0)
            throw Error(Err::NonPermutation, "inconsistent Euler characteristic");
        return (2 - chi) / 2;
    }

    bool connected() const {
        if (darts() == 0) return true;
        std::vector<char> vis(darts(), 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int seen = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int e : {opp_[d], next_[d]}) {
                if (!vis[e]) {
                    vis[e] = 1;
                    ++seen;
                    stack.push_back(e);
                }
            }
        }
        return seen == darts();
    }

    int valence(int d) const {
        int v = 1;
        for (int e = next_[d]; e != d; e = next_[e]) ++v;
        return v;
    }

    std::vector<int> vertex_darts(int d) const {
        std::vector<int> out{d};
        for (int e = next_[d]; e != d; e = next_[e]) out.push_back(e);
        return out;
    }

    std::vector<int> face_darts(int d) const {
        std::vector<int> out{d};
        for (int e = face_next(d); e != d; e = face_next(e)) out.push_back(e);
        return out;
    }

    // ---- surgery primitives ----

    // New unattached edge; returns its first dart d, the partner is opp(d).
    int add_edge() {
        int d = darts();
        opp_.push_back(d + 1);
        opp_.push_back(d);
        next_.push_back(d);
        next_.push_back(d + 1);
        prev_.push_back(d);
        prev_.push_back(d + 1);
        dead_.push_back(0);
        dead_.push_back(0);
        return d;
    }

    // Inserts dart d into a rotation immediately after dart a (ccw).
    void attach_after(int a, int d) {
        int b = next_[a];
        next_[a] = d;
        next_[d] = b;
        prev_[d] = a;
        prev_[b] = d;
    }

    // Low-level rotation link: next(a) = b. Callers must keep the rotation a
    // permutation overall.
    void link(int a, int b) {
        next_[a] = b;
        prev_[b] = a;
    }

    // Rebuilds a vertex rotation as the cycle (head, c_1, ..., c_k).
    void make_cycle(int head, const std::vector<int>& rest) {
        int cur = head;
        for (int d : rest) {
            link(cur, d);
            cur = d;
        }
        link(cur, head);
    }

    // Removes dart d from its rotation, leaving it on a lone vertex.
    void detach(int d) {
        int p = prev_[d], n = next_[d];
        if (p == d) return;
        next_[p] = n;
        prev_[n] = p;
        next_[d] = d;
        prev_[d] = d;
    }

    void kill_edge_of(int d) {
        int e = opp_[d];
        detach(d);
        detach(e);
        dead_[d] = 1;
        dead_[e] = 1;
    }

    // Re-pairs two darts; used when amalgamating edges through a removed
    // valence-2 vertex.
    void set_opp(int a, int b) {
        opp_[a] = b;
        opp_[b] = a;
    }

    void mark_dead(int d) { dead_[d] = 1; }
    bool is_dead(int d) const { return dead_[d] != 0; }

    // Splits edge(d) with a new valence-2 vertex w. The darts d, opp(d)
    // become the half incident to origin(d); the returned dart is the new
    // half's dart at w (its opp sits in the old rotation slot at head(d)).
    int subdivide_edge(int d) {
        int hb = opp_[d];
        int n = add_edge();
        int nb = opp_[n];
        attach_after(prev_[hb], nb);
        detach(hb);
        attach_after(hb, n);
        return n;
    }

    // Removes the valence-2 vertex at dart p, amalgamating its two incident
    // edges. Dead darts are marked but not compacted.
    void smooth_valence2(int p) {
        int q = next_[p];
        if (q == p || next_[q] != p)
            throw Error(Err::NonPermutation, "dart is not at a valence-2 vertex");
        int pbar = opp_[p], qbar = opp_[q];
        if (pbar == q)
            throw Error(Err::ComplementNotDisc, "smoothing would create a free circle");
        detach(p);
        detach(q);
        set_opp(pbar, qbar);
        mark_dead(p);
        mark_dead(q);
    }

    // Drops dead darts, renumbering survivors in increasing order.
    // Returns the old->new map (-1 for removed darts).
    std::vector<int> compact() {
        std::vector<int> remap(darts(), -1);
        int k = 0;
        for (int d = 0; d < darts(); ++d)
            if (!dead_[d]) remap[d] = k++;
        std::vector<int> opp(k), next(k);
        for (int d = 0; d < darts(); ++d) {
            if (dead_[d]) continue;
            opp[remap[d]] = remap[opp_[d]];
            next[remap[d]] = remap[next_[d]];
        }
        opp_ = std::move(opp);
        next_ = std::move(next);
        dead_.assign(k, 0);
        rebuild_prev();
        return remap;
    }

    void validate() const {
        int n = darts();
        if (n % 2 != 0) throw Error(Err::NonPermutation, "odd number of darts");
        std::vector<char> seen(n, 0);
        for (int d = 0; d < n; ++d) {
            if (opp_[d] < 0 || opp_[d] >= n || next_[d] < 0 || next_[d] >= n)
                throw Error(Err::NonPermutation, "dart index out of range");
            if (opp_[d] == d)
                throw Error(Err::FixedPointInOpposite, "opposite fixes dart " + std::to_string(d));
            if (opp_[opp_[d]] != d)
                throw Error(Err::NonPermutation, "opposite is not an involution");
            if (seen[next_[d]]++)
                throw Error(Err::NonPermutation, "rotation is not a permutation");
        }
    }

private:
    static int count_orbits(const std::vector<int>& lbl) {
        int m = -1;
        for (int v : lbl) m = std::max(m, v);
        return m + 1;
    }

    void rebuild_prev() {
        prev_.assign(darts(), 0);
        for (int d = 0; d < darts(); ++d) prev_[next_[d]] = d;
    }

    std::vector<int> opp_, next_, prev_;
    std::vector<char> dead_;
};

// Structure report produced by build_surface-style validation.
struct SurfaceReport {
    int vertices = 0, edges = 0, faces = 0, genus = 0;
    bool one_vertex = false;
};

inline SurfaceReport surface_report(const CombSurface& s) {
    SurfaceReport r;
    r.vertices = s.vertex_count();
    r.edges = s.edge_count();
    r.faces = s.face_count();
    r.genus = s.genus();
    r.one_vertex = (r.vertices == 1);
    return r;
}

} // namespace trax

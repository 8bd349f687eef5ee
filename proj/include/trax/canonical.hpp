#pragma once

#include <vector>

#include "trax/combsurface.hpp"

namespace trax {

// Canonical labelings of connected dart systems, with an optional integer
// color per dart (train tracks color the lone darts). A labeling is grown
// from an anchor dart by deterministic propagation through opp and next, so
// two systems are isomorphic iff some anchor reproduces the same code.

namespace detail {

// Relabeling from an anchor: label[d] is the discovery index, inv its inverse.
inline void bfs_labels(const CombSurface& s, int anchor, std::vector<int>& label,
                       std::vector<int>& inv) {
    int n = s.darts();
    label.assign(n, -1);
    inv.clear();
    inv.reserve(n);
    label[anchor] = 0;
    inv.push_back(anchor);
    for (size_t i = 0; i < inv.size(); ++i) {
        int d = inv[i];
        for (int e : {s.opp(d), s.next(d)}) {
            if (label[e] == -1) {
                label[e] = static_cast<int>(inv.size());
                inv.push_back(e);
            }
        }
    }
}

} // namespace detail

inline std::vector<int> code_from_anchor(const CombSurface& s, int anchor,
                                         const std::vector<int>& color = {}) {
    std::vector<int> label, inv;
    detail::bfs_labels(s, anchor, label, inv);
    std::vector<int> code;
    code.reserve(inv.size() * 3);
    for (int d : inv) {
        code.push_back(label[s.opp(d)]);
        code.push_back(label[s.next(d)]);
        code.push_back(color.empty() ? 0 : color[d]);
    }
    return code;
}

// Lexicographically minimal code over all anchors; a complete isomorphism
// invariant for connected systems.
inline std::vector<int> canonical_code(const CombSurface& s,
                                       const std::vector<int>& color = {}) {
    std::vector<int> best;
    for (int a = 0; a < s.darts(); ++a) {
        std::vector<int> c = code_from_anchor(s, a, color);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

// The dart relabeling that realizes the canonical code (old -> new).
inline std::vector<int> canonical_relabeling(const CombSurface& s,
                                             const std::vector<int>& color = {}) {
    std::vector<int> best, best_label;
    for (int a = 0; a < s.darts(); ++a) {
        std::vector<int> c = code_from_anchor(s, a, color);
        if (best.empty() || c < best) {
            best = std::move(c);
            std::vector<int> label, inv;
            detail::bfs_labels(s, a, label, inv);
            best_label = std::move(label);
        }
    }
    return best_label;
}

// All dart bijections a -> b preserving opp, next and color, in canonical
// order (sorted by the image of dart 0). Both systems must be connected.
inline std::vector<std::vector<int>> find_isomorphisms(const CombSurface& a,
                                                       const CombSurface& b,
                                                       const std::vector<int>& color_a = {},
                                                       const std::vector<int>& color_b = {}) {
    std::vector<std::vector<int>> result;
    if (a.darts() != b.darts() || a.darts() == 0) return result;
    std::vector<int> la, inva;
    detail::bfs_labels(a, 0, la, inva);
    std::vector<int> code_a = code_from_anchor(a, 0, color_a);
    for (int anchor = 0; anchor < b.darts(); ++anchor) {
        if (code_from_anchor(b, anchor, color_b) != code_a) continue;
        std::vector<int> lb, invb;
        detail::bfs_labels(b, anchor, lb, invb);
        std::vector<int> map(a.darts());
        for (int d = 0; d < a.darts(); ++d) map[d] = invb[la[d]];
        result.push_back(std::move(map));
    }
    return result;
}

inline bool isomorphic(const CombSurface& a, const CombSurface& b,
                       const std::vector<int>& color_a = {},
                       const std::vector<int>& color_b = {}) {
    if (a.darts() != b.darts()) return false;
    if (a.darts() == 0) return true;
    std::vector<int> code_a = code_from_anchor(a, 0, color_a);
    for (int anchor = 0; anchor < b.darts(); ++anchor)
        if (code_from_anchor(b, anchor, color_b) == code_a) return true;
    return false;
}

} // namespace trax

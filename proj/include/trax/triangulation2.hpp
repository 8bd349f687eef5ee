#pragma once

#include <vector>

#include "trax/combsurface.hpp"

namespace trax {

struct TriReport {
    int vertices = 0, edges = 0, faces = 0, genus = 0;
    bool one_vertex = false;
};

// Valid triangulations satisfy F = 2V + 4g - 4 and E = 3V + 6g - 6.
inline TriReport check_triangulation(const CombSurface& s,
                                     int expected_vertices = -1) {
    for (int d = 0; d < s.darts(); ++d)
        if (s.face_darts(d).size() != 3)
            throw Error(Err::NonTriangularFace,
                        "face at dart " + std::to_string(d) + " is not a triangle");
    TriReport r;
    r.vertices = s.vertex_count();
    r.edges = s.edge_count();
    r.faces = s.face_count();
    r.genus = s.genus();
    r.one_vertex = r.vertices == 1;
    if (r.faces != 2 * r.vertices + 4 * r.genus - 4 ||
        r.edges != 3 * r.vertices + 6 * r.genus - 6)
        throw Error(Err::NonTriangularFace, "counting identities violated");
    if (expected_vertices >= 0 && r.vertices != expected_vertices)
        throw Error(Err::NotOneVertex, "unexpected vertex count");
    return r;
}

// 2-2 Pachner move: removes edge(d), which must have distinct triangles on
// its two sides, and inserts the other diagonal of the resulting quad. The
// diagonal reuses the darts of the removed edge, so edge ids are stable.
inline void pachner22(CombSurface& s, int d) {
    int db = s.opp(d);
    int x = s.face_next(d), y = s.face_next(x);
    int z = s.face_next(db), w = s.face_next(z);
    if (s.face_next(y) != d || s.face_next(w) != db)
        throw Error(Err::NonTriangularFace, "2-2 move needs triangles on both sides");
    if (x == db || y == db)
        throw Error(Err::SameTriangleBothSides,
                    "edge has the same triangle on both sides");
    int ox = s.opp(x), oz = s.opp(z);
    s.detach(d);
    s.detach(db);
    s.attach_after(ox, d);
    s.attach_after(oz, db);
}

// 1-3 Pachner move: cones the triangle left of d to a new interior vertex.
// Three new edges are created in face-walk order.
inline void pachner13(CombSurface& s, int d) {
    int x = s.face_next(d), y = s.face_next(x);
    if (s.face_next(y) != d)
        throw Error(Err::NonTriangularFace, "1-3 move needs a triangle");
    int upP = s.add_edge(), dnP = s.opp(upP);
    int upQ = s.add_edge(), dnQ = s.opp(upQ);
    int upR = s.add_edge(), dnR = s.opp(upR);
    // centre vertex rotation (dnQ, dnP, dnR)
    s.attach_after(dnQ, dnP);
    s.attach_after(dnP, dnR);
    // corner insertions
    s.attach_after(s.opp(y), upP);
    s.attach_after(s.opp(d), upQ);
    s.attach_after(s.opp(x), upR);
}

// 3-1 Pachner move: removes the valence-3 vertex at d, which must have three
// distinct triangles around it and no loop edges.
inline void pachner31(CombSurface& s, int d) {
    int n1 = s.next(d), n2 = s.next(n1);
    if (n1 == d || n2 == d || s.next(n2) != d)
        throw Error(Err::NotValence3, "vertex is not valence 3");
    std::vector<int> fl = s.face_labels();
    if (fl[d] == fl[n1] || fl[d] == fl[n2] || fl[n1] == fl[n2])
        throw Error(Err::NotValence3, "triangles around the vertex are not distinct");
    for (int e : {d, n1, n2})
        if (s.opp(e) == d || s.opp(e) == n1 || s.opp(e) == n2)
            throw Error(Err::NotValence3, "loop edge at the vertex");
    s.kill_edge_of(d);
    s.kill_edge_of(n1);
    s.kill_edge_of(n2);
    s.compact();
}

// Standard genus-g 1-vertex triangulation: the 4g-gon with identification
// word aba'b'... , fanned into 4g-2 triangles from one corner.
inline CombSurface standard_one_vertex_triangulation(int genus) {
    if (genus < 1) throw Error(Err::OutOfRange, "genus must be at least 1");
    int sides = 4 * genus;
    // side labels 1..2g (a_k = 2k+1, b_k = 2k+2), diagonals after them
    std::vector<int> word(sides);
    for (int k = 0; k < genus; ++k) {
        word[4 * k] = 2 * k + 1;
        word[4 * k + 1] = 2 * k + 2;
        word[4 * k + 2] = -(2 * k + 1);
        word[4 * k + 3] = -(2 * k + 2);
    }
    int dia = 2 * genus; // diagonal j (2 <= j <= 4g-2) gets label dia + j - 1
    std::vector<std::vector<int>> faces;
    for (int j = 1; j <= sides - 2; ++j) {
        std::vector<int> f;
        if (j == 1)
            f = {word[0], word[1], -(dia + 1)};
        else if (j == sides - 2)
            f = {dia + j - 1, word[j], word[j + 1]};
        else
            f = {dia + j - 1, word[j], -(dia + j)};
        faces.push_back(std::move(f));
    }
    return CombSurface::from_faces(faces);
}

} // namespace trax

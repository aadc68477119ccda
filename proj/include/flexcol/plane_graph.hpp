#pragma once

// Combinatorial embeddings: a clockwise neighbor order per vertex determines
// the faces as closed walks over directed edges. Face degree is walk length,
// so a cut edge contributes twice to the face it borders on both sides.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexcol/graph.hpp"

namespace flexcol {

using RotationSystem = std::vector<std::vector<int>>;  // clockwise neighbors per vertex

struct Face {
    std::vector<int> walk;  // boundary walk, one entry per directed edge origin
    int degree() const { return static_cast<int>(walk.size()); }
};

struct PlaneGraph {
    Graph g;
    RotationSystem rot;
    std::vector<Face> faces;
    // face ids bordering each directed edge: side_of[u][i] = face containing u->rot[u][i]
    std::vector<std::vector<int>> side_of;
};

namespace detail {

inline void check_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.size()) != g.n)
        throw std::invalid_argument("rotation: expected one neighbor ring per vertex");
    for (int v = 0; v < g.n; ++v) {
        auto ring = rot[v];
        std::sort(ring.begin(), ring.end());
        if (ring != g.adj[v])
            throw std::invalid_argument("rotation: ring at vertex " + std::to_string(v) +
                                        " does not list exactly the neighbors");
    }
}

}  // namespace detail

// Canonical rotation for tests/tools that only care about the abstract graph.
inline RotationSystem ascending_rotation(const Graph& g) { return g.adj; }

// Traces all boundary walks. From directed edge u->v the walk continues with
// v->w where w follows u in the clockwise ring at v.
inline PlaneGraph trace_faces(const Graph& g, const RotationSystem& rot) {
    detail::check_rotation(g, rot);
    PlaneGraph pg;
    pg.g = g;
    pg.rot = rot;
    pg.side_of.resize(g.n);
    std::vector<std::map<int, int>> pos(g.n);  // neighbor -> index in ring
    for (int v = 0; v < g.n; ++v) {
        pg.side_of[v].assign(rot[v].size(), -1);
        for (size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = static_cast<int>(i);
    }
    for (int u = 0; u < g.n; ++u) {
        for (size_t i = 0; i < rot[u].size(); ++i) {
            if (pg.side_of[u][i] >= 0) continue;
            Face f;
            int face_id = static_cast<int>(pg.faces.size());
            int a = u, ai = static_cast<int>(i);
            do {
                pg.side_of[a][ai] = face_id;
                int b = pg.rot[a][ai];
                f.walk.push_back(a);
                int next = (pos[b][a] + 1) % static_cast<int>(pg.rot[b].size());
                a = b;
                ai = next;
            } while (a != u || ai != static_cast<int>(i));
            pg.faces.push_back(std::move(f));
        }
    }
    return pg;
}

// Euler check per connected component: V - E + F = 2, where F counts the
// walks traced inside that component (components with no edges pass
// trivially). Catches rings that do not describe a sphere embedding.
inline bool validate_planarity(const PlaneGraph& pg) {
    auto comps = connected_components(pg.g);
    // face -> component via any walk vertex
    std::vector<int> comp_of(pg.g.n, -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);
    std::vector<int> face_count(comps.size(), 0);
    for (const auto& f : pg.faces)
        if (!f.walk.empty()) ++face_count[comp_of[f.walk.front()]];
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        int vcount = static_cast<int>(comps[ci].size());
        int ecount = 0;
        for (int v : comps[ci]) ecount += pg.g.degree(v);
        ecount /= 2;
        if (ecount == 0) continue;
        if (vcount - ecount + face_count[ci] != 2) return false;
    }
    return true;
}

struct IncidenceCounts {
    // face_deg_incidences[v][d] = number of boundary-walk corners of v on faces of degree d
    std::vector<std::map<int, int>> face_deg_incidences;
    // neighbor_deg[v][d] = number of neighbors of v with degree d
    std::vector<std::map<int, int>> neighbor_deg;
    // per face: vertex-degree multiset of the walk (with multiplicity)
    std::vector<std::vector<int>> face_degree_walk;

    int f_k(int v, int k) const {
        auto it = face_deg_incidences[v].find(k);
        return it == face_deg_incidences[v].end() ? 0 : it->second;
    }
    int n_k(int v, int k) const {
        auto it = neighbor_deg[v].find(k);
        return it == neighbor_deg[v].end() ? 0 : it->second;
    }
};

inline IncidenceCounts incidence_counts(const PlaneGraph& pg) {
    IncidenceCounts ic;
    ic.face_deg_incidences.resize(pg.g.n);
    ic.neighbor_deg.resize(pg.g.n);
    ic.face_degree_walk.resize(pg.faces.size());
    for (size_t fi = 0; fi < pg.faces.size(); ++fi) {
        const auto& f = pg.faces[fi];
        for (int v : f.walk) {
            ++ic.face_deg_incidences[v][f.degree()];
            ic.face_degree_walk[fi].push_back(pg.g.degree(v));
        }
        std::sort(ic.face_degree_walk[fi].begin(), ic.face_degree_walk[fi].end());
    }
    for (int v = 0; v < pg.g.n; ++v)
        for (int w : pg.g.adj[v]) ++ic.neighbor_deg[v][pg.g.degree(w)];
    return ic;
}

// Faces of degree 3 are triangles in a simple graph; convenience accessor
// returning the three (distinct) vertices.
inline std::array<int, 3> triangle_of(const Face& f) {
    if (f.degree() != 3) throw std::invalid_argument("triangle_of: not a 3-face");
    return {f.walk[0], f.walk[1], f.walk[2]};
}

}  // namespace flexcol

#pragma once

// Catalog of embedded configurations known to be reducible in the host class
// (planar, no 4-cycles, no 5-cycles, k = 4). Entries are built from a shared
// vocabulary:
//  * stalks (a)-(m): small rooted fragments hanging off a shared root v,
//  * bad-vertex closures: a vertex declared "bad" of host degree d carries
//    floor((d-2)/2) triangles with two fresh low-degree vertices each,
//  * dangerous-vertex closures: odd host degree d gives (d-3)/2 such
//    triangles with both fresh vertices of host degree 3.
// Ambient (host) degrees are declared per vertex; everything not drawn is an
// edge leaving the configuration and only shows up as missing list budget.
//
// Entries are addressed by id strings like "center/3?t=4", "dangerous/6?dw=9"
// or "stalk/j". catalog_ids() lists the certification grid; stalk fragments
// are resolvable but not part of the grid (a lone stalk is not reducible).

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "flexcol/graph.hpp"
#include "flexcol/reducibility.hpp"

namespace flexcol {

struct CatalogConfig {
    std::string id;
    EmbeddedConfig config;
    std::vector<std::string> labels;  // role tag per vertex
    int stated_bound = -1;            // documented vertex-count cap, -1 if none
    std::string notes;
};

namespace detail {

class ConfigBuilder {
  public:
    int add(const std::string& label, int ambient) {
        labels_.push_back(label);
        ambient_.push_back(ambient);
        return static_cast<int>(labels_.size()) - 1;
    }
    void edge(int a, int b) { edges_.emplace_back(a, b); }
    void set_ambient(int v, int d) { ambient_.at(static_cast<std::size_t>(v)) = d; }
    int triangle_on(int root, const std::string& l1, int d1, const std::string& l2, int d2) {
        int a = add(l1, d1), b = add(l2, d2);
        edge(root, a);
        edge(root, b);
        edge(a, b);
        return a;
    }
    // floor((deg-2)/2) triangles hanging off w; worst = both fresh vertices of
    // host degree 3, worse = degrees 3 and 4.
    void close_bad(int w, int deg, bool worse = false) {
        int t = (deg - 2) / 2;
        for (int i = 0; i < t; ++i) triangle_on(w, "closure3", 3, worse ? "closure4" : "closure3", worse ? 4 : 3);
    }
    // (deg-3)/2 triangles with two degree-3 vertices; deg must be odd.
    void close_dangerous(int w, int deg) {
        if (deg % 2 == 0) throw std::invalid_argument("catalog: dangerous closure needs odd degree");
        for (int i = 0; i < (deg - 3) / 2; ++i) triangle_on(w, "closure3", 3, "closure3", 3);
    }
    int size() const { return static_cast<int>(labels_.size()); }

    CatalogConfig finish(std::string id, int stated_bound, std::string notes) const {
        CatalogConfig out;
        out.id = std::move(id);
        out.labels = labels_;
        out.stated_bound = stated_bound;
        out.notes = std::move(notes);
        out.config.h = make_graph(size(), edges_);
        out.config.ambient_degree = ambient_;
        out.config.k = 4;
        out.config.validate();
        if (stated_bound >= 0 && size() > stated_bound)
            throw std::logic_error("catalog: " + out.id + " exceeds documented bound");
        return out;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<int> ambient_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace detail

// --------------------------------------------------------------------------
// Stalks. Each builder attaches one fragment to root v and returns the number
// of edges it added at v. bad_deg is the declared host degree of any bad
// vertex in the fragment.

namespace detail {

inline int add_stalk(ConfigBuilder& b, int v, char tag, int bad_deg) {
    auto bad = [&](const std::string& l) {
        int w = b.add(l, bad_deg);
        b.close_bad(w, bad_deg);
        return w;
    };
    switch (tag) {
        case 'a': {
            int a1 = b.add("a.leaf3", 3);
            b.edge(v, a1);
            return 1;
        }
        case 'b': {
            int b1 = b.add("b.mid3", 3), b2 = b.add("b.leaf3", 3);
            b.edge(v, b1);
            b.edge(b1, b2);
            return 1;
        }
        case 'c': {
            b.triangle_on(v, "c.tri3", 3, "c.tri3", 3);
            return 2;
        }
        case 'd': {
            b.triangle_on(v, "d.tri3", 3, "d.tri4", 4);
            return 2;
        }
        case 'e': {
            int e1 = b.add("e.tri4", 4), e2 = b.add("e.tri3", 3), e3 = b.add("e.leaf3", 3);
            b.edge(v, e1);
            b.edge(v, e2);
            b.edge(e1, e2);
            b.edge(e2, e3);
            return 2;
        }
        case 'f': {
            int f1 = b.add("f.tri3", 3), fw = bad("f.bad");
            b.edge(v, f1);
            b.edge(v, fw);
            b.edge(f1, fw);
            return 2;
        }
        case 'g': {
            int gw = bad("g.bad");
            int g1 = b.add("g.tri3", 3), g2 = b.add("g.leaf3", 3);
            b.edge(v, gw);
            b.edge(v, g1);
            b.edge(gw, g1);
            b.edge(g1, g2);
            return 2;
        }
        case 'h': {
            int h1 = bad("h.bad"), h2 = bad("h.bad");
            b.edge(v, h1);
            b.edge(v, h2);
            b.edge(h1, h2);
            return 2;
        }
        case 'i': {
            int i1 = b.add("i.tri4", 4), iw = bad("i.bad");
            b.edge(v, i1);
            b.edge(v, iw);
            b.edge(i1, iw);
            return 2;
        }
        case 'j': {
            int j1 = b.add("j.v4", 4), j2 = b.add("j.v4", 4), j3 = b.add("j.v4", 4);
            int jw = bad("j.bad");
            int ju = b.add("j.u3", 3);
            b.edge(v, j1);
            b.edge(j1, j2);
            b.edge(j2, j3);
            b.edge(v, jw);
            b.edge(jw, j1);
            b.edge(j2, ju);
            b.edge(ju, j3);
            return 2;
        }
        case 'k': {
            int k1 = b.add("k.v4", 4), k2 = b.add("k.v4", 4);
            int k3 = b.add("k.v4", 4), k4 = b.add("k.v4", 4);
            int ku = b.add("k.u3", 3);
            b.edge(v, k1);
            b.edge(k1, k3);
            b.edge(k3, k4);
            b.edge(v, k2);
            b.edge(k2, k1);
            b.edge(k3, ku);
            b.edge(ku, k4);
            return 2;
        }
        case 'l': {
            int l1 = b.add("l.v4", 4), l2 = b.add("l.v4", 4);
            int l3 = b.add("l.v4", 4), l4 = b.add("l.v4", 4);
            int l5 = b.add("l.v4", 4), l6 = b.add("l.v4", 4);
            int lu1 = b.add("l.u3", 3), lu2 = b.add("l.u3", 3);
            b.edge(v, l1);
            b.edge(l1, l3);
            b.edge(l3, l4);
            b.edge(l3, lu1);
            b.edge(lu1, l4);
            b.edge(v, l2);
            b.edge(l2, l5);
            b.edge(l5, l6);
            b.edge(l5, lu2);
            b.edge(lu2, l6);
            b.edge(l1, l2);
            return 2;
        }
        case 'm': {
            int m1 = b.add("m.v4", 4), m2 = b.add("m.v4", 4), m3 = b.add("m.v4", 4);
            int mu = b.add("m.u3", 3);
            b.edge(v, m1);
            b.edge(m1, m2);
            b.edge(m2, m3);
            b.edge(m2, mu);
            b.edge(mu, m3);
            return 1;
        }
        default:
            throw std::invalid_argument(std::string("catalog: unknown stalk tag '") + tag + "'");
    }
}

inline bool tag_in(char t, const char* set) { return std::string(set).find(t) != std::string::npos; }

}  // namespace detail

// Root-with-stalks configurations. Tag multiset rules:
//   case 1: all tags in {a..e,l} plus at most one of i/k/m, where an i allows
//           companions from {a,b,c,d,e,l}, a k from {b,c,e,l}, an m from
//           {a,b,c,e,f,g,h,j,l}; without i/k/m any tags from {a..h,j,l}.
//           Up to one root edge may stay uncovered.
//   case 2: tags from {a..h,j,l} plus exactly one of i/k, never d with k,
//           and the root is fully covered.
inline CatalogConfig build_root_stalks(const std::string& tags, int uncovered, int bad_deg,
                                       std::string id) {
    using detail::tag_in;
    if (tags.empty()) throw std::invalid_argument("catalog: empty stalk list");
    if (uncovered < 0 || uncovered > 1) throw std::invalid_argument("catalog: uncovered must be 0 or 1");
    int n_i = 0, n_k = 0, n_m = 0;
    std::string rest;
    for (char t : tags) {
        if (t == 'i') ++n_i;
        else if (t == 'k') ++n_k;
        else if (t == 'm') ++n_m;
        else rest.push_back(t);
    }
    if (n_i + n_k + n_m > 1) throw std::invalid_argument("catalog: at most one of i/k/m");
    bool ok;
    if (n_i == 1)
        ok = std::all_of(rest.begin(), rest.end(),
                         [&](char t) { return tag_in(t, uncovered ? "abcdel" : "abcdefghjl"); });
    else if (n_k == 1)
        ok = std::all_of(rest.begin(), rest.end(), [&](char t) {
            return tag_in(t, uncovered ? "bcel" : "abcefghjl");  // case 2 forbids d with k
        });
    else if (n_m == 1)
        ok = uncovered <= 1 && std::all_of(rest.begin(), rest.end(),
                                           [](char t) { return tag_in(t, "abcefghjl"); });
    else
        ok = std::all_of(rest.begin(), rest.end(), [](char t) { return tag_in(t, "abcdefghjl"); });
    if (!ok) throw std::invalid_argument("catalog: stalk multiset '" + tags + "' not in the catalog");

    detail::ConfigBuilder b;
    int v = b.add("root", 0);  // ambient set once the stalk edges are counted
    int root_edges = 0;
    for (char t : tags) root_edges += detail::add_stalk(b, v, t, bad_deg);
    b.set_ambient(v, root_edges + uncovered);
    return b.finish(std::move(id), 138, "root with stalks " + tags);
}

// --------------------------------------------------------------------------
// Fixed shapes around a single high-degree vertex or a poor triangle.

namespace detail {

inline CatalogConfig build_center_shapes(int variant, int t, int bad_deg, const std::string& id) {
    ConfigBuilder b;
    switch (variant) {
        case 1: {  // degree-4 vertex on a triangle with two bad neighbors
            int v = b.add("center", 4);
            int w1 = b.add("bad", bad_deg), w2 = b.add("bad", bad_deg);
            b.edge(v, w1);
            b.edge(v, w2);
            b.edge(w1, w2);
            b.close_bad(w1, bad_deg);
            b.close_bad(w2, bad_deg);
            return b.finish(id, 29, "triangle with two bad vertices");
        }
        case 2: {  // degree-6 vertex: one (3,3) face and one (3,bad) face
            int v = b.add("center", 6);
            b.triangle_on(v, "u3", 3, "u3", 3);
            int u3 = b.add("u3", 3), w = b.add("bad", bad_deg);
            b.edge(v, u3);
            b.edge(v, w);
            b.edge(u3, w);
            b.close_bad(w, bad_deg);
            return b.finish(id, 29, "degree-6 vertex with mixed faces");
        }
        case 3: {  // degree-2t vertex carrying t-1 (3,3) faces
            if (t < 2 || t > 6) throw std::invalid_argument("catalog: t out of range");
            int v = b.add("center", 2 * t);
            for (int i = 0; i + 1 < t; ++i) b.triangle_on(v, "u3", 3, "u3", 3);
            return b.finish(id, 29, "degree-" + std::to_string(2 * t) + " vertex, all-worst faces");
        }
        case 4: {  // degree-2t vertex: t-2 (3,3) faces plus one (bad,bad) face
            if (t < 2 || t > 6) throw std::invalid_argument("catalog: t out of range");
            int v = b.add("center", 2 * t);
            for (int i = 0; i + 2 < t; ++i) b.triangle_on(v, "u3", 3, "u3", 3);
            int w1 = b.add("bad", bad_deg), w2 = b.add("bad", bad_deg);
            b.edge(v, w1);
            b.edge(v, w2);
            b.edge(w1, w2);
            b.close_bad(w1, bad_deg);
            b.close_bad(w2, bad_deg);
            return b.finish(id, 29, "degree-" + std::to_string(2 * t) + " vertex with a bad-bad face");
        }
        case 5: {  // degree-5 vertex: (3,bad) face plus a hanging path
            int v = b.add("center", 5);
            int u1 = b.add("u3", 3), w = b.add("bad", bad_deg);
            b.edge(v, u1);
            b.edge(v, w);
            b.edge(u1, w);
            b.close_bad(w, bad_deg);
            int u2 = b.add("u3", 3), u3 = b.add("u3", 3);
            b.edge(v, u2);
            b.edge(u2, u3);
            return b.finish(id, 29, "degree-5 vertex with one bad face and a path");
        }
        case 6: {  // degree-6 vertex: (3,bad) face plus two hanging paths
            int v = b.add("center", 6);
            int u1 = b.add("u3", 3), w = b.add("bad", bad_deg);
            b.edge(v, u1);
            b.edge(v, w);
            b.edge(u1, w);
            b.close_bad(w, bad_deg);
            for (int i = 0; i < 2; ++i) {
                int p1 = b.add("u3", 3), p2 = b.add("u3", 3);
                b.edge(v, p1);
                b.edge(p1, p2);
            }
            return b.finish(id, 29, "degree-6 vertex with one bad face and two paths");
        }
        default:
            throw std::invalid_argument("catalog: unknown center-shape variant");
    }
}

inline void maybe_close(ConfigBuilder& b, int x, int deg) {
    if (deg >= 5) {
        if (deg % 2 == 0) throw std::invalid_argument("catalog: high parameter degrees must be odd");
        b.close_dangerous(x, deg);
    }
}

// Two triangles joined through a poor face: u,v,w with fans at v and w.
inline CatalogConfig build_double_fan(const std::map<std::string, int>& deg, const std::string& id) {
    auto d = [&](const std::string& key, int dflt) {
        auto it = deg.find(key);
        return it == deg.end() ? dflt : it->second;
    };
    ConfigBuilder b;
    int u = b.add("u3", 3), v = b.add("v4", 4), w = b.add("w4", 4);
    b.edge(u, v);
    b.edge(u, w);
    b.edge(v, w);
    int v1 = b.add("v1", 4), w1 = b.add("w1", 4);
    b.edge(v, v1);
    b.edge(w, w1);
    int v2 = b.add("v2", d("dv2", 4)), v3 = b.add("v3", d("dv3", 4));
    b.edge(v1, v2);
    b.edge(v2, v3);
    b.edge(v3, v1);
    int w2 = b.add("w2", d("dw2", 4)), w3 = b.add("w3", d("dw3", 4));
    b.edge(w1, w2);
    b.edge(w2, w3);
    b.edge(w3, w1);
    b.edge(w3, v3);
    maybe_close(b, v2, d("dv2", 4));
    maybe_close(b, v3, d("dv3", 4));
    maybe_close(b, w2, d("dw2", 4));
    maybe_close(b, w3, d("dw3", 4));
    return b.finish(id, 49, "poor face with two triangle fans");
}

// Poor triangle with a triangle-and-path tail returning to u.
inline CatalogConfig build_tail_loop(const std::map<std::string, int>& deg, bool extended,
                                     const std::string& id) {
    auto d = [&](const std::string& key, int dflt) {
        auto it = deg.find(key);
        return it == deg.end() ? dflt : it->second;
    };
    ConfigBuilder b;
    int u = b.add("u3", 3), v = b.add("v4", 4), w = b.add("w4", 4);
    b.edge(u, v);
    b.edge(v, w);
    b.edge(u, w);
    int x1 = b.add("x1", 4);
    int x2 = b.add("x2", d("dx2", 4)), x3 = b.add("x3", d("dx3", 4));
    b.edge(w, x1);
    b.edge(x1, x2);
    b.edge(x2, x3);
    b.edge(x1, x3);
    int x4 = b.add("x4", d("dx4", 4));
    int x5 = b.add("x5", extended ? d("dx5", 5) : 3);
    b.edge(x3, x4);
    b.edge(x4, x5);
    b.edge(x5, u);
    maybe_close(b, x2, d("dx2", 4));
    maybe_close(b, x3, d("dx3", 4));
    maybe_close(b, x4, d("dx4", 4));
    if (extended) {
        int x6 = b.add("x6", 4);
        b.edge(x4, x6);
        b.edge(x5, x6);
        maybe_close(b, x5, d("dx5", 5));
    }
    return b.finish(id, extended ? 45 : 37, "poor face with a returning tail");
}

inline CatalogConfig build_pendant_shapes(int variant, const std::string& id) {
    ConfigBuilder b;
    switch (variant) {
        case 1: {  // triangle plus a pendant on one corner
            int v = b.add("v4", 4);
            int u1 = b.add("u3", 3), u2 = b.add("u3", 3), u3 = b.add("u3", 3);
            b.edge(v, u1);
            b.edge(v, u2);
            b.edge(u1, u2);
            b.edge(u2, u3);
            return b.finish(id, 9, "triangle with pendant");
        }
        case 2: {  // triangle plus a hanging path at the root
            int v = b.add("v4", 4);
            int u1 = b.add("u3", 3), u2 = b.add("u3", 3);
            b.edge(v, u1);
            b.edge(v, u2);
            b.edge(u1, u2);
            int u3 = b.add("u3", 3), u4 = b.add("u3", 3);
            b.edge(v, u3);
            b.edge(u3, u4);
            return b.finish(id, 9, "triangle with hanging path");
        }
        case 3: {  // chained triangles with a pendant at the end
            int v = b.add("v4", 4);
            int v1 = b.add("v4", 4), u1 = b.add("u3", 3);
            b.edge(v, v1);
            b.edge(v, u1);
            b.edge(v1, u1);
            int v2 = b.add("v4", 4), u2 = b.add("u3", 3);
            b.edge(v1, v2);
            b.edge(v1, u2);
            b.edge(v2, u2);
            int u3 = b.add("u3", 3);
            b.edge(u2, u3);
            return b.finish(id, 9, "chained triangles with pendant");
        }
        default:
            throw std::invalid_argument("catalog: unknown pendant-shape variant");
    }
}

// Degree-5/6 vertex next to a vertex that is both bad and dangerous (odd host
// degree dw, carrying (dw-3)/2 worst faces).
inline CatalogConfig build_dangerous_neighbor(int variant, int dw, const std::string& id) {
    if (dw < 5 || dw % 2 == 0) throw std::invalid_argument("catalog: dw must be odd and >= 5");
    ConfigBuilder b;
    auto dangerous = [&](const std::string& l) {
        int w = b.add(l, dw);
        b.close_dangerous(w, dw);
        return w;
    };
    // In every shape w shares a 3-face with the center v, but the third corner
    // of that face lies outside the configuration, so only the edge vw is
    // drawn and w keeps exactly one covered edge beyond its closure triangles.
    switch (variant) {
        case 1: {
            int v = b.add("center", 5);
            int u1 = b.add("u3", 3), z1 = b.add("z4", 4);
            b.edge(v, u1);
            b.edge(v, z1);
            b.edge(u1, z1);
            int u2 = b.add("u3", 3);
            b.edge(v, u2);  // pendant
            int w = dangerous("w.bad");
            b.edge(v, w);
            return b.finish(id, 37, "degree-5 vertex: one mixed face, a pendant edge, dangerous neighbor");
        }
        case 2: {
            int v = b.add("center", 6);
            int u1 = b.add("u3", 3), v1 = b.add("v4", 4);
            b.edge(v, u1);
            b.edge(v, v1);
            b.edge(u1, v1);
            int u2 = b.add("u3", 3), z2 = b.add("z4", 4);
            b.edge(v, u2);
            b.edge(v, z2);
            b.edge(u2, z2);
            int w = dangerous("w.bad");
            b.edge(v, w);
            return b.finish(id, 37, "degree-6 vertex: two mixed faces, dangerous neighbor");
        }
        case 3: {
            int v = b.add("center", 6);
            for (int i = 0; i < 2; ++i) {
                int u = b.add("u3", 3), wb = b.add("w.bad5", 5);
                b.edge(v, u);
                b.edge(v, wb);
                b.edge(u, wb);
                b.close_bad(wb, 5, true);  // worse closure keeps wb non-dangerous
            }
            int w = dangerous("w.bad");
            b.edge(v, w);
            return b.finish(id, 37, "degree-6 vertex: two bad faces, dangerous neighbor");
        }
        case 4: {
            int v = b.add("center", 6);
            b.triangle_on(v, "u3", 3, "u3", 3);
            int v1 = b.add("v4", 4), w1 = b.add("w.bad5", 5);
            b.edge(v, v1);
            b.edge(v, w1);
            b.edge(v1, w1);
            b.close_bad(w1, 5, true);
            int w = dangerous("w.bad");
            b.edge(v, w);
            return b.finish(id, 37, "degree-6 vertex: worst face, bad face, dangerous neighbor");
        }
        case 5: {
            int v = b.add("center", 6);
            int u1 = b.add("u3", 3), z1 = b.add("z4", 4);
            b.edge(v, u1);
            b.edge(v, z1);
            b.edge(u1, z1);
            int u2 = b.add("u3", 3);
            b.edge(v, u2);  // face whose other corner lies outside
            int v1 = b.add("v4", 4);
            int w = dangerous("w.bad");
            b.edge(v, v1);
            b.edge(v, w);
            b.edge(v1, w);
            int v2 = b.add("v4", 4), v3 = b.add("v4", 4), u3 = b.add("u3", 3);
            b.edge(v1, v2);
            b.edge(v2, v3);
            b.edge(v2, u3);
            b.edge(u3, v3);
            return b.finish(id, 37, "degree-6 vertex: dangerous face with a chained gadget");
        }
        case 6: {
            int v = b.add("center", 6);
            b.triangle_on(v, "u3", 3, "u3", 3);
            int v1 = b.add("x4", 4), v4 = b.add("x4", 4);
            b.edge(v, v1);
            b.edge(v, v4);
            b.edge(v1, v4);
            int v2 = b.add("x4", 4), v3 = b.add("x4", 4), u3 = b.add("u3", 3);
            b.edge(v1, v2);
            b.edge(v2, v3);
            b.edge(v2, u3);
            b.edge(u3, v3);
            int v5 = b.add("x4", 4), v6 = b.add("x4", 4), u4 = b.add("u3", 3);
            b.edge(v4, v5);
            b.edge(v5, v6);
            b.edge(v5, u4);
            b.edge(u4, v6);
            int w = dangerous("w.bad");
            b.edge(v, w);
            return b.finish(id, 37, "degree-6 vertex, two chained gadgets, pendant dangerous vertex");
        }
        default:
            throw std::invalid_argument("catalog: unknown dangerous-neighbor variant");
    }
}

inline CatalogConfig build_kite_tail(const std::string& id) {
    ConfigBuilder b;
    int u = b.add("u3", 3), v = b.add("v4", 4);
    int v1 = b.add("v4", 4), v2 = b.add("v4", 4), v3 = b.add("v4", 4);
    int u1 = b.add("u3", 3);
    b.edge(u, v);
    b.edge(v, v1);
    b.edge(v1, v2);
    b.edge(v2, v);
    b.edge(v2, v3);
    b.edge(v3, u1);
    b.edge(u1, v2);
    return b.finish(id, 6, "kite with a two-edge tail");
}

}  // namespace detail

// --------------------------------------------------------------------------
// Id grammar: family[/variant][?key=value[&key=value]...]

struct CatalogId {
    std::string family;
    int variant = -1;
    std::map<std::string, int> params;
    std::string tags;  // letters for root-stalk entries
};

inline CatalogId parse_catalog_id(const std::string& id) {
    CatalogId out;
    std::string head = id, query;
    if (auto q = id.find('?'); q != std::string::npos) {
        head = id.substr(0, q);
        query = id.substr(q + 1);
    }
    if (auto s = head.find('/'); s != std::string::npos) {
        out.family = head.substr(0, s);
        std::string var = head.substr(s + 1);
        if (out.family == "stalk") {
            out.tags = var;
        } else {
            try {
                out.variant = std::stoi(var);
            } catch (const std::exception&) {
                throw std::invalid_argument("catalog: bad variant in id '" + id + "'");
            }
        }
    } else {
        out.family = head;
    }
    std::istringstream qs(query);
    std::string item;
    while (std::getline(qs, item, '&')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("catalog: bad parameter '" + item + "' in id '" + id + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "tags") {
            out.tags = val;
            continue;
        }
        try {
            out.params[key] = std::stoi(val);
        } catch (const std::exception&) {
            throw std::invalid_argument("catalog: bad value for '" + key + "' in id '" + id + "'");
        }
    }
    return out;
}

inline CatalogConfig build_catalog_entry(const std::string& id) {
    auto pid = parse_catalog_id(id);
    auto param = [&](const std::string& key, int dflt) {
        auto it = pid.params.find(key);
        return it == pid.params.end() ? dflt : it->second;
    };
    if (pid.family == "stalk") {
        if (pid.tags.size() != 1) throw std::invalid_argument("catalog: stalk id needs one tag");
        detail::ConfigBuilder b;
        int v = b.add("root", 0);
        int root_edges = detail::add_stalk(b, v, pid.tags[0], param("bad", 5));
        b.set_ambient(v, root_edges);
        return b.finish(id, -1, "stalk fragment (not reducible alone)");
    }
    if (pid.family == "rootstalks")
        return build_root_stalks(pid.tags, param("uncovered", 0), param("bad", 5), id);
    if (pid.family == "center")
        return detail::build_center_shapes(pid.variant, param("t", 3), param("bad", 5), id);
    if (pid.family == "doublefan") return detail::build_double_fan(pid.params, id);
    if (pid.family == "tailloop") return detail::build_tail_loop(pid.params, false, id);
    if (pid.family == "tailloopx") return detail::build_tail_loop(pid.params, true, id);
    if (pid.family == "pendant") return detail::build_pendant_shapes(pid.variant, id);
    if (pid.family == "dangerous")
        return detail::build_dangerous_neighbor(pid.variant, param("dw", 5), id);
    if (pid.family == "kitetail") return detail::build_kite_tail(id);
    throw std::invalid_argument("catalog: unknown family '" + pid.family + "'");
}

// The certification grid: every entry here is expected to certify as
// reducible (strategy mode; exhaustive when small enough).
inline std::vector<std::string> catalog_ids() {
    std::vector<std::string> out;
    out.push_back("rootstalks?tags=ai");
    out.push_back("rootstalks?tags=bk");
    out.push_back("rootstalks?tags=lm");
    out.push_back("rootstalks?tags=abc&uncovered=1");
    out.push_back("center/1");
    out.push_back("center/2");
    for (int t = 2; t <= 6; ++t) out.push_back("center/3?t=" + std::to_string(t));
    for (int t = 2; t <= 6; ++t) out.push_back("center/4?t=" + std::to_string(t));
    out.push_back("center/5");
    out.push_back("center/6");
    out.push_back("doublefan");
    out.push_back("tailloop");
    out.push_back("tailloopx");
    out.push_back("pendant/1");
    out.push_back("pendant/2");
    out.push_back("pendant/3");
    for (int variant = 1; variant <= 6; ++variant)
        for (int dw : {5, 7, 9, 11})
            out.push_back("dangerous/" + std::to_string(variant) + "?dw=" + std::to_string(dw));
    out.push_back("kitetail");
    return out;
}

// --------------------------------------------------------------------------
// Occurrence matching: induced embeddings of a configuration into a host
// graph where every image vertex has host degree equal to the declared
// ambient degree. Occurrences are deduplicated by image set (lex-least
// mapping wins) and reported sorted.

struct ConfigOccurrence {
    std::vector<int> image;  // config vertex -> host vertex
};

inline std::vector<ConfigOccurrence> find_occurrences(const Graph& host, const EmbeddedConfig& cfg,
                                                      std::size_t cap = static_cast<std::size_t>(-1)) {
    cfg.validate();
    if (cfg.h.n == 0) return {};
    // match in a connectivity-friendly order so adjacency prunes early
    std::vector<int> order;
    std::vector<char> placed(cfg.h.n, 0);
    for (int s = 0; s < cfg.h.n; ++s) {
        if (placed[s]) continue;
        std::vector<int> queue{s};
        placed[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            order.push_back(v);
            for (int w : cfg.h.adj[v])
                if (!placed[w]) {
                    placed[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    std::map<std::vector<int>, std::vector<int>> by_image;  // sorted image -> lex-least mapping
    std::vector<int> image(cfg.h.n, -1);
    std::vector<char> used(host.n, 0);
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (by_image.size() >= cap) return;
        if (pos == order.size()) {
            std::vector<int> key = image;
            std::sort(key.begin(), key.end());
            auto it = by_image.find(key);
            if (it == by_image.end() || image < it->second) by_image[key] = image;
            return;
        }
        int c = order[pos];
        for (int x = 0; x < host.n; ++x) {
            if (used[x] || host.degree(x) != cfg.ambient_degree[c]) continue;
            bool ok = true;
            for (int d = 0; d < cfg.h.n && ok; ++d) {
                if (image[d] < 0) continue;
                if (cfg.h.has_edge(c, d) != host.has_edge(x, image[d])) ok = false;
            }
            if (!ok) continue;
            image[c] = x;
            used[x] = 1;
            self(self, pos + 1);
            image[c] = -1;
            used[x] = 0;
        }
    };
    rec(rec, 0);
    std::vector<ConfigOccurrence> out;
    for (auto& [key, mapping] : by_image) out.push_back({mapping});
    return out;
}

}  // namespace flexcol

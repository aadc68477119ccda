#pragma once

// Proper list colorings: existence (backtracking with most-constrained-first
// vertex choice), bounded enumeration, uniform sampling by index draw, the
// degree/Gallai colorability criterion, and greedy extension of partial
// colorings. Colorings are dense int vectors with -1 for "uncolored".

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "flexcol/graph.hpp"
#include "flexcol/rng.hpp"

namespace flexcol {

using ListAssignment = std::vector<std::vector<int>>;  // per-vertex sorted color sets
using Coloring = std::vector<int>;                     // -1 = uncolored
using SizeProfile = std::vector<int>;

inline constexpr int kUncolored = -1;

inline void check_lists(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.n)
        throw std::invalid_argument("lists: expected one list per vertex");
    for (const auto& l : lists)
        if (!std::is_sorted(l.begin(), l.end()) || std::adjacent_find(l.begin(), l.end()) != l.end())
            throw std::invalid_argument("lists: colors must be sorted and distinct");
}

inline SizeProfile profile_of(const ListAssignment& lists) {
    SizeProfile f(lists.size());
    for (size_t v = 0; v < lists.size(); ++v) f[v] = static_cast<int>(lists[v].size());
    return f;
}

// |L(v)| = f(v) everywhere except the pinned vertex, which gets a single color.
inline SizeProfile profile_pin(SizeProfile f, int v) {
    f.at(v) = 1;
    return f;
}

inline SizeProfile profile_minus_indicator(SizeProfile f, const VertexSet& s) {
    for (int v : s) --f.at(v);
    return f;
}

inline bool is_valid_coloring(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
    if (static_cast<int>(phi.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        if (phi[v] == kUncolored) return false;
        if (!std::binary_search(lists[v].begin(), lists[v].end(), phi[v])) return false;
    }
    for (auto [u, v] : g.edges)
        if (phi[u] == phi[v]) return false;
    return true;
}

namespace detail {

inline std::vector<int> available_colors(const Graph& g, const ListAssignment& lists,
                                         const Coloring& phi, int v) {
    std::vector<int> out;
    for (int c : lists[v]) {
        bool ok = true;
        for (int w : g.adj[v])
            if (phi[w] == c) { ok = false; break; }
        if (ok) out.push_back(c);
    }
    return out;
}

// Backtracking search; picks the uncolored vertex with fewest available
// colors (ties by id) so hard vertices fail fast.
inline bool solve(const Graph& g, const ListAssignment& lists, Coloring& phi) {
    int best = -1;
    std::vector<int> best_avail;
    for (int v = 0; v < g.n; ++v) {
        if (phi[v] != kUncolored) continue;
        auto avail = available_colors(g, lists, phi, v);
        if (best < 0 || avail.size() < best_avail.size()) {
            best = v;
            best_avail = std::move(avail);
            if (best_avail.empty()) return false;
        }
    }
    if (best < 0) return true;
    for (int c : best_avail) {
        phi[best] = c;
        if (solve(g, lists, phi)) return true;
        phi[best] = kUncolored;
    }
    return false;
}

}  // namespace detail

inline std::optional<Coloring> is_colorable(const Graph& g, const ListAssignment& lists) {
    check_lists(g, lists);
    Coloring phi(g.n, kUncolored);
    if (detail::solve(g, lists, phi)) return phi;
    return std::nullopt;
}

struct EnumerationResult {
    std::vector<Coloring> colorings;  // lexicographic in (vertex 0 color, vertex 1 color, ...)
    bool truncated = false;
};

inline void enumerate_rec(const Graph& g, const ListAssignment& lists, Coloring& phi, int v,
                          std::size_t cap, EnumerationResult& out) {
    if (out.truncated) return;
    if (v == g.n) {
        if (out.colorings.size() >= cap) {
            out.truncated = true;
            return;
        }
        out.colorings.push_back(phi);
        return;
    }
    for (int c : lists[v]) {
        bool ok = true;
        for (int w : g.adj[v])
            if (w < v && phi[w] == c) { ok = false; break; }
        if (!ok) continue;
        phi[v] = c;
        enumerate_rec(g, lists, phi, v + 1, cap, out);
        phi[v] = kUncolored;
        if (out.truncated) return;
    }
}

inline EnumerationResult enumerate_colorings(const Graph& g, const ListAssignment& lists,
                                             std::size_t cap) {
    check_lists(g, lists);
    EnumerationResult out;
    Coloring phi(g.n, kUncolored);
    enumerate_rec(g, lists, phi, 0, cap, out);
    return out;
}

// Uniform over all proper L-colorings, realized by full enumeration plus an
// index draw. Throws if no coloring exists. Intended for small subgraphs.
inline Coloring sample_uniform(const Graph& g, const ListAssignment& lists, std::mt19937_64& rng,
                               std::size_t cap = 1u << 22) {
    auto all = enumerate_colorings(g, lists, cap);
    if (all.truncated)
        throw std::runtime_error("sample_uniform: enumeration cap exceeded");
    if (all.colorings.empty())
        throw std::runtime_error("sample_uniform: uncolorable");
    std::uniform_int_distribution<std::size_t> d(0, all.colorings.size() - 1);
    return all.colorings[d(rng)];
}

enum class DegreeCriterion {
    colorable,     // witness coloring attached
    inapplicable,  // all lists tight and every block is complete or an odd cycle
};

struct DegreeCriterionResult {
    DegreeCriterion status = DegreeCriterion::inapplicable;
    std::optional<Coloring> coloring;
};

inline bool block_is_odd_cycle(const Graph& g, const VertexSet& blk) {
    if (blk.size() < 3 || blk.size() % 2 == 0) return false;
    for (int v : blk) {
        int deg_in = 0;
        for (int w : g.adj[v])
            if (std::binary_search(blk.begin(), blk.end(), w)) ++deg_in;
        if (deg_in != 2) return false;
    }
    return true;
}

// Structural test for the classical degree-choosability criterion: a
// connected graph with |L(u)| >= deg(u) everywhere is colorable whenever some
// list is strictly larger than its degree or some block is neither complete
// nor an odd cycle.
inline bool degree_criterion_applies(const Graph& g, const SizeProfile& f) {
    for (int v = 0; v < g.n; ++v)
        if (f[v] > g.degree(v)) return true;
    for (const auto& blk : blocks(g).blocks)
        if (!is_clique(g, blk) && !block_is_odd_cycle(g, blk)) return true;
    return false;
}

inline DegreeCriterionResult degree_criterion_colorable(const Graph& g,
                                                        const ListAssignment& lists) {
    check_lists(g, lists);
    if (!is_connected(g))
        throw std::invalid_argument("degree_criterion_colorable: graph must be connected");
    for (int v = 0; v < g.n; ++v)
        if (static_cast<int>(lists[v].size()) < g.degree(v))
            throw std::invalid_argument("degree_criterion_colorable: list at vertex " +
                                        std::to_string(v) + " smaller than its degree");
    DegreeCriterionResult out;
    if (!degree_criterion_applies(g, profile_of(lists))) return out;
    auto phi = is_colorable(g, lists);
    if (!phi)
        throw std::logic_error("degree_criterion_colorable: criterion held but no coloring found");
    out.status = DegreeCriterion::colorable;
    out.coloring = std::move(phi);
    return out;
}

struct GreedyResult {
    bool ok = false;
    Coloring coloring;
    int stuck_vertex = -1;  // first vertex with no available color, if !ok
};

// Extends `partial` over `order`, smallest available color first.
inline GreedyResult greedy_extend(const Graph& g, const ListAssignment& lists,
                                  const Coloring& partial, const std::vector<int>& order) {
    check_lists(g, lists);
    GreedyResult out;
    out.coloring = partial;
    out.coloring.resize(g.n, kUncolored);
    for (int v : order) {
        g.check_vertex(v);
        if (out.coloring[v] != kUncolored) continue;
        auto avail = detail::available_colors(g, lists, out.coloring, v);
        if (avail.empty()) {
            out.stuck_vertex = v;
            return out;
        }
        out.coloring[v] = avail.front();
    }
    out.ok = true;
    return out;
}

}  // namespace flexcol

#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, plus the structural
// predicates the rest of the library is built on: fixed-length cycle search
// (C4/C5 exclusion), block decomposition, and the "no connecting path with
// exactly 2 or 3 edges" independence notion used by the reduction machinery.

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flexcol {

using VertexSet = std::vector<int>;  // kept sorted and duplicate-free

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographically sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor lists

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {
        if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (has_edge(u, v))
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        edges.emplace_back(u, v);
        adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj[v].size());
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n)
            throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n) + ")");
    }

    void finish() { std::sort(edges.begin(), edges.end()); }
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finish();
    return g;
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        VertexSet cur;
        std::queue<int> q;
        comp[s] = static_cast<int>(out.size());
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            cur.push_back(u);
            for (int w : g.adj[u])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    q.push(w);
                }
        }
        std::sort(cur.begin(), cur.end());
        out.push_back(std::move(cur));
    }
    return out;
}

namespace detail {

// DFS for a cycle of exactly `len` edges whose minimum vertex is `start`.
// Vertices below `start` are excluded, which dedups cycles by their minimum.
inline bool cycle_dfs(const Graph& g, int start, int cur, int depth, int len,
                      std::vector<char>& on_path) {
    if (depth == len - 1) return g.has_edge(cur, start);
    for (int w : g.adj[cur]) {
        if (w <= start || on_path[w]) continue;
        on_path[w] = 1;
        if (cycle_dfs(g, start, w, depth + 1, len, on_path)) {
            on_path[w] = 0;
            return true;
        }
        on_path[w] = 0;
    }
    return false;
}

// True iff some simple path with exactly `len` edges joins a and b.
inline bool path_dfs(const Graph& g, int cur, int target, int remaining, std::vector<char>& used) {
    if (remaining == 0) return cur == target;
    for (int w : g.adj[cur]) {
        if (used[w]) continue;
        if (w == target && remaining > 1) continue;  // target only at the end
        used[w] = 1;
        if (path_dfs(g, w, target, remaining - 1, used)) {
            used[w] = 0;
            return true;
        }
        used[w] = 0;
    }
    return false;
}

}  // namespace detail

inline bool has_cycle_of_length(const Graph& g, int len) {
    if (len < 3) throw std::invalid_argument("has_cycle_of_length: length must be >= 3");
    std::vector<char> on_path(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        on_path[s] = 1;
        if (detail::cycle_dfs(g, s, s, 0, len, on_path)) return true;
        on_path[s] = 0;
    }
    return false;
}

inline bool is_c4c5_free(const Graph& g) {
    return !has_cycle_of_length(g, 4) && !has_cycle_of_length(g, 5);
}

inline bool has_exact_length_path(const Graph& g, int a, int b, int len) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (len <= 0 || a == b) return false;
    std::vector<char> used(g.n, 0);
    used[a] = 1;
    return detail::path_dfs(g, a, b, len, used);
}

// "Independent" here allows adjacency: only connecting paths with exactly 2
// or exactly 3 edges are forbidden between members.
inline bool is_p3p4_independent(const Graph& g, const VertexSet& s) {
    for (int v : s) g.check_vertex(v);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) throw std::invalid_argument("is_p3p4_independent: repeated vertex");
            if (has_exact_length_path(g, s[i], s[j], 2)) return false;
            if (has_exact_length_path(g, s[i], s[j], 3)) return false;
        }
    return true;
}

struct BlockDecomposition {
    std::vector<VertexSet> blocks;   // maximal 2-connected pieces; bridges are 2-vertex blocks
    VertexSet cut_vertices;
};

// Iterative Hopcroft–Tarjan on an explicit stack; isolated vertices form no block.
inline BlockDecomposition blocks(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1), child_count(g.n, 0);
    std::vector<char> is_cut(g.n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame { int v; size_t next_nbr; };
    for (int root = 0; root < g.n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<Frame> st{{root, 0}};
        num[root] = low[root] = timer++;
        while (!st.empty()) {
            auto& [v, idx] = st.back();
            if (idx < g.adj[v].size()) {
                int w = g.adj[v][idx++];
                if (num[w] < 0) {
                    edge_stack.emplace_back(v, w);
                    parent[w] = v;
                    ++child_count[v];
                    num[w] = low[w] = timer++;
                    st.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                st.pop_back();
                if (st.empty()) break;
                int p = st.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    // p closes off a block containing the edge p-v
                    if (parent[p] != -1 || child_count[p] >= 2) is_cut[p] = 1;
                    VertexSet blk;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e.first);
                        blk.push_back(e.second);
                    } while (e != std::make_pair(p, v));
                    std::sort(blk.begin(), blk.end());
                    blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
                    out.blocks.push_back(std::move(blk));
                }
            }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> host_vertex;    // local id -> host id (sorted)
    std::vector<int> local_of_host;  // host id -> local id or -1
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.host_vertex = s;
    std::sort(out.host_vertex.begin(), out.host_vertex.end());
    if (std::adjacent_find(out.host_vertex.begin(), out.host_vertex.end()) != out.host_vertex.end())
        throw std::invalid_argument("induced_subgraph: repeated vertex");
    out.local_of_host.assign(g.n, -1);
    for (size_t i = 0; i < out.host_vertex.size(); ++i) {
        g.check_vertex(out.host_vertex[i]);
        out.local_of_host[out.host_vertex[i]] = static_cast<int>(i);
    }
    out.graph = Graph(static_cast<int>(out.host_vertex.size()));
    for (size_t i = 0; i < out.host_vertex.size(); ++i)
        for (int w : g.adj[out.host_vertex[i]]) {
            int lw = out.local_of_host[w];
            if (lw > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), lw);
        }
    out.graph.finish();
    return out;
}

// True iff every pair of s-members is adjacent.
inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

}  // namespace flexcol

#pragma once

// Line-oriented text formats shared by the CLI and the test corpus.
//
//   V <n>                     vertex count, required, first meaningful line
//   E <u> <v>                 one edge per line, 0-based, u != v
//   R <v> <w1> ... <wk>       clockwise neighbor ring (optional, per vertex)
//   L <v> <c1> <c2> ...       color list (optional; omitted vertex = empty)
//   DG <v> <deg>              ambient degree for configuration checks
//   K <k>                     list-size parameter (default 4)
//   REQ <v> <c> [weight]      flexibility request (weight defaults to 1)
//   # ...                     comment; blank lines ignored
//
// All reader errors carry the 1-based line number.

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "flexcol/graph.hpp"
#include "flexcol/list_coloring.hpp"
#include "flexcol/plane_graph.hpp"
#include "flexcol/reducibility.hpp"

namespace flexcol {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct WeightedRequest {
    int v;
    int c;
    double weight = 1.0;
};

struct ProblemInput {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> rotation;
    std::map<int, std::vector<int>> lists;
    bool has_lists = false;
    std::map<int, int> ambient;
    int k = -1;
    std::vector<WeightedRequest> requests;
};

inline ProblemInput parse_problem(std::istream& in) {
    ProblemInput out;
    std::string line;
    int lineno = 0;
    auto need_n = [&](int v) {
        if (out.n < 0) throw parse_error(lineno, "vertex reference before V line");
        if (v < 0 || v >= out.n)
            throw parse_error(lineno, "vertex " + std::to_string(v) + " out of range [0, " +
                                          std::to_string(out.n) + ")");
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto read_int = [&](const char* what) {
            long long x;
            if (!(ls >> x)) throw parse_error(lineno, std::string("expected ") + what);
            if (x < -(1ll << 31) || x >= (1ll << 31)) throw parse_error(lineno, std::string(what) + " out of range");
            return static_cast<int>(x);
        };
        if (tag == "V") {
            if (out.n >= 0) throw parse_error(lineno, "duplicate V line");
            out.n = read_int("vertex count");
            if (out.n < 0) throw parse_error(lineno, "negative vertex count");
        } else if (tag == "E") {
            int u = read_int("edge endpoint"), v = read_int("edge endpoint");
            need_n(u);
            need_n(v);
            if (u == v) throw parse_error(lineno, "loop edge at vertex " + std::to_string(u));
            out.edges.emplace_back(u, v);
        } else if (tag == "R") {
            int v = read_int("vertex");
            need_n(v);
            if (out.rotation.count(v)) throw parse_error(lineno, "duplicate R line for vertex " + std::to_string(v));
            std::vector<int> ring;
            int w;
            while (ls >> w) {
                if (w < 0 || w >= out.n) throw parse_error(lineno, "neighbor out of range");
                ring.push_back(w);
            }
            out.rotation[v] = std::move(ring);
        } else if (tag == "L") {
            int v = read_int("vertex");
            need_n(v);
            if (out.lists.count(v)) throw parse_error(lineno, "duplicate L line for vertex " + std::to_string(v));
            std::vector<int> colors;
            int c;
            while (ls >> c) {
                if (c < 0) throw parse_error(lineno, "negative color");
                colors.push_back(c);
            }
            std::sort(colors.begin(), colors.end());
            if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
                throw parse_error(lineno, "repeated color in list");
            out.lists[v] = std::move(colors);
            out.has_lists = true;
        } else if (tag == "DG") {
            int v = read_int("vertex");
            need_n(v);
            int d = read_int("degree");
            if (d < 0) throw parse_error(lineno, "negative degree");
            if (out.ambient.count(v)) throw parse_error(lineno, "duplicate DG line for vertex " + std::to_string(v));
            out.ambient[v] = d;
        } else if (tag == "K") {
            if (out.k >= 0) throw parse_error(lineno, "duplicate K line");
            out.k = read_int("k");
            if (out.k < 3) throw parse_error(lineno, "k must be at least 3");
        } else if (tag == "REQ") {
            WeightedRequest r;
            r.v = read_int("vertex");
            need_n(r.v);
            r.c = read_int("color");
            if (r.c < 0) throw parse_error(lineno, "negative color");
            double w;
            if (ls >> w) {
                if (!(w > 0)) throw parse_error(lineno, "request weight must be positive");
                r.weight = w;
            }
            out.requests.push_back(r);
        } else {
            throw parse_error(lineno, "unknown directive '" + tag + "'");
        }
        std::string extra;
        if (tag != "R" && tag != "L" && (ls >> extra))
            throw parse_error(lineno, "trailing token '" + extra + "'");
    }
    if (out.n < 0) throw parse_error(lineno, "missing V line");
    return out;
}

inline ProblemInput parse_problem_string(const std::string& text) {
    std::istringstream in(text);
    return parse_problem(in);
}

inline Graph to_graph(const ProblemInput& pi) { return make_graph(pi.n, pi.edges); }

inline RotationSystem to_rotation(const ProblemInput& pi, const Graph& g) {
    RotationSystem rot(g.n);
    for (int v = 0; v < g.n; ++v) {
        auto it = pi.rotation.find(v);
        if (it == pi.rotation.end()) {
            if (g.degree(v) > 0)
                throw std::invalid_argument("rotation: missing R line for vertex " + std::to_string(v));
            continue;
        }
        rot[v] = it->second;
    }
    detail::check_rotation(g, rot);
    return rot;
}

inline ListAssignment to_lists(const ProblemInput& pi, const Graph& g) {
    ListAssignment lists(g.n);
    for (const auto& [v, colors] : pi.lists) lists.at(v) = colors;
    return lists;
}

inline EmbeddedConfig to_config(const ProblemInput& pi) {
    EmbeddedConfig cfg;
    cfg.h = to_graph(pi);
    cfg.k = pi.k < 0 ? 4 : pi.k;
    cfg.ambient_degree.resize(cfg.h.n);
    for (int v = 0; v < cfg.h.n; ++v) {
        auto it = pi.ambient.find(v);
        cfg.ambient_degree[v] = it == pi.ambient.end() ? cfg.h.degree(v) : it->second;
    }
    cfg.validate();
    return cfg;
}

inline void write_graph(std::ostream& os, const Graph& g) {
    os << "V " << g.n << "\n";
    auto edges = g.edges;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) os << "E " << u << " " << v << "\n";
}

inline void write_rotation(std::ostream& os, const RotationSystem& rot) {
    for (size_t v = 0; v < rot.size(); ++v) {
        if (rot[v].empty()) continue;
        os << "R " << v;
        for (int w : rot[v]) os << " " << w;
        os << "\n";
    }
}

inline void write_lists(std::ostream& os, const ListAssignment& lists) {
    for (size_t v = 0; v < lists.size(); ++v) {
        os << "L " << v;
        for (int c : lists[v]) os << " " << c;
        os << "\n";
    }
}

inline void write_config(std::ostream& os, const EmbeddedConfig& cfg) {
    write_graph(os, cfg.h);
    for (int v = 0; v < cfg.h.n; ++v) os << "DG " << v << " " << cfg.ambient_degree[v] << "\n";
    os << "K " << cfg.k << "\n";
}

inline void write_requests(std::ostream& os, const std::vector<WeightedRequest>& reqs) {
    for (const auto& r : reqs) {
        os << "REQ " << r.v << " " << r.c;
        if (r.weight != 1.0) os << " " << r.weight;
        os << "\n";
    }
}

}  // namespace flexcol

#pragma once

// Reducibility certification for embedded configurations (H, deg_G, k).
//
// A configuration must survive two families of adversarial list assignments:
//   fix:  for every v in H, all assignments of sizes (deg_H + k - deg_G)
//         with v pinned to a single color.
//   forb: for every S (|S| <= k-2) whose members are pairwise not joined by a
//         2- or 3-edge path, all assignments of sizes (deg_H + k - deg_G - 1_S).
//
// Two engines decide "H is colorable for ALL assignments of sizes f":
//  * exhaustive — enumerates list systems up to color renaming. A refuting
//    system survives splitting every color class into its connected
//    components, so only systems whose classes induce connected subgraphs
//    need checking; classes are generated as a nonincreasing multiset of
//    bitmasks covering each v exactly f(v) times.
//  * strategy — searches for a replayable proof built from three sound moves
//    (precolor a small set, apply the degree/Gallai criterion to a component,
//    leave a vertex with spare budget for last). Incomplete: a stuck search
//    triggers a randomized hunt for a concrete refuting system and otherwise
//    reports its budget, never a verdict.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "flexcol/graph.hpp"
#include "flexcol/list_coloring.hpp"
#include "flexcol/rng.hpp"

namespace flexcol {

struct EmbeddedConfig {
    Graph h;
    std::vector<int> ambient_degree;  // degree in the host graph
    int k = 4;

    void validate() const {
        if (static_cast<int>(ambient_degree.size()) != h.n)
            throw std::invalid_argument("config: need one ambient degree per vertex");
        if (k < 3) throw std::invalid_argument("config: k must be >= 3");
        for (int v = 0; v < h.n; ++v)
            if (ambient_degree[v] < h.degree(v))
                throw std::invalid_argument("config: ambient degree below subgraph degree at vertex " +
                                            std::to_string(v));
    }

    int deficiency(int v) const { return k - ambient_degree.at(v); }

    SizeProfile base_profile() const {
        SizeProfile f(h.n);
        for (int v = 0; v < h.n; ++v) f[v] = h.degree(v) + deficiency(v);
        return f;
    }
};

inline SizeProfile fix_profile(const EmbeddedConfig& cfg, int pinned) {
    return profile_pin(cfg.base_profile(), pinned);
}

inline SizeProfile forb_profile(const EmbeddedConfig& cfg, const VertexSet& s) {
    return profile_minus_indicator(cfg.base_profile(), s);
}

struct ExhaustiveBudget {
    int max_vertices = 6;                    // refuses larger cores
    long long max_systems = 10'000'000;      // canonical systems across one check
    int falsification_trials = 10'000;       // random systems when strategy search sticks
    long long strategy_node_cap = 50'000;    // search nodes per strategy proof
};

enum class CheckStatus { certified, refuted, budget_exceeded };

struct StrategyStep {
    enum class Kind { precolor_set, degree_block, greedy };
    Kind kind;
    VertexSet vertices;
    int slack_vertex = -1;  // degree_block: strict-slack vertex, or -1 when a
                            // block that is neither complete nor an odd cycle suffices
};
using StrategyProof = std::vector<StrategyStep>;

namespace detail {

inline int max_color(const ListAssignment& lists) {
    int m = -1;
    for (const auto& l : lists)
        for (int c : l) m = std::max(m, c);
    return m;
}

inline bool mask_connected(const Graph& h, std::uint32_t mask) {
    if (mask == 0) return false;
    int start = std::countr_zero(mask);
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < h.n; ++v) {
            if (!(frontier & (1u << v))) continue;
            for (int w : h.adj[v]) next |= (1u << w);
        }
        frontier = next & mask & ~seen;
        seen |= frontier;
    }
    return seen == mask;
}

struct SystemEnumerator {
    const Graph& h;
    const SizeProfile& f;
    long long& checked;
    long long cap;
    std::vector<std::uint32_t> classes;  // connected subsets, descending
    std::vector<std::uint32_t> chosen;
    std::vector<int> remaining;
    ListAssignment counterexample;
    bool refuted = false;
    bool over_budget = false;

    SystemEnumerator(const Graph& h_, const SizeProfile& f_, long long& checked_, long long cap_)
        : h(h_), f(f_), checked(checked_), cap(cap_), remaining(f_) {
        for (std::uint32_t m = 1; m < (1u << h.n); ++m)
            if (mask_connected(h, m)) classes.push_back(m);
        std::sort(classes.rbegin(), classes.rend());
    }

    bool done() const { return refuted || over_budget; }

    void run() { rec(0); }

    void rec(size_t min_idx) {
        if (done()) return;
        std::uint32_t support = 0;
        bool complete = true;
        for (int v = 0; v < h.n; ++v)
            if (remaining[v] > 0) {
                support |= (1u << v);
                complete = false;
            }
        if (complete) {
            if (++checked > cap) {
                over_budget = true;
                return;
            }
            ListAssignment lists(h.n);
            for (size_t i = 0; i < chosen.size(); ++i)
                for (int v = 0; v < h.n; ++v)
                    if (chosen[i] & (1u << v)) lists[v].push_back(static_cast<int>(i));
            if (!is_colorable(h, lists)) {
                counterexample = std::move(lists);
                refuted = true;
            }
            return;
        }
        for (size_t i = min_idx; i < classes.size(); ++i) {
            std::uint32_t cls = classes[i];
            if ((cls & support) != cls) continue;
            for (int v = 0; v < h.n; ++v)
                if (cls & (1u << v)) --remaining[v];
            chosen.push_back(cls);
            rec(i);
            chosen.pop_back();
            for (int v = 0; v < h.n; ++v)
                if (cls & (1u << v)) ++remaining[v];
            if (done()) return;
        }
    }
};

struct ProfileCheck {
    CheckStatus status = CheckStatus::certified;
    ListAssignment counterexample;
};

// Decides: is h colorable under every list assignment with sizes >= f?
// Reductions applied before enumerating: empty-list refutation, removal of
// vertices with more budget than neighbors (colorable last regardless), and
// per-component splitting.
inline ProfileCheck check_profile(const Graph& h, SizeProfile f, const ExhaustiveBudget& budget,
                                  long long& checked) {
    ProfileCheck out;
    if (h.n == 0) return out;

    for (int v = 0; v < h.n; ++v) {
        if (f[v] > 0) continue;
        out.status = CheckStatus::refuted;
        out.counterexample.assign(h.n, {});
        int next = 0;
        for (int u = 0; u < h.n; ++u) {
            if (u == v) continue;  // empty list here
            for (int i = 0; i < std::max(f[u], 1); ++i) out.counterexample[u].push_back(next++);
        }
        return out;
    }

    for (int v = 0; v < h.n; ++v) {
        if (f[v] <= h.degree(v)) continue;
        VertexSet rest;
        for (int u = 0; u < h.n; ++u)
            if (u != v) rest.push_back(u);
        auto sub = induced_subgraph(h, rest);
        SizeProfile fsub(sub.graph.n);
        for (int i = 0; i < sub.graph.n; ++i) fsub[i] = f[sub.host_vertex[i]];
        auto inner = check_profile(sub.graph, fsub, budget, checked);
        out.status = inner.status;
        if (inner.status == CheckStatus::refuted) {
            out.counterexample.assign(h.n, {});
            for (int i = 0; i < sub.graph.n; ++i)
                out.counterexample[sub.host_vertex[i]] = inner.counterexample[i];
            int next = max_color(out.counterexample) + 1;
            for (int i = 0; i < f[v]; ++i) out.counterexample[v].push_back(next++);
        }
        return out;
    }

    auto comps = connected_components(h);
    if (comps.size() > 1) {
        for (const auto& comp : comps) {
            auto sub = induced_subgraph(h, comp);
            SizeProfile fsub(sub.graph.n);
            for (int i = 0; i < sub.graph.n; ++i) fsub[i] = f[sub.host_vertex[i]];
            auto inner = check_profile(sub.graph, fsub, budget, checked);
            if (inner.status == CheckStatus::certified) continue;
            out.status = inner.status;
            if (inner.status == CheckStatus::refuted) {
                out.counterexample.assign(h.n, {});
                for (int i = 0; i < sub.graph.n; ++i)
                    out.counterexample[sub.host_vertex[i]] = inner.counterexample[i];
                int next = max_color(out.counterexample) + 1;
                for (int u = 0; u < h.n; ++u)
                    if (out.counterexample[u].empty())
                        for (int i = 0; i < f[u]; ++i) out.counterexample[u].push_back(next++);
            }
            return out;
        }
        return out;
    }

    if (h.n > budget.max_vertices) {
        out.status = CheckStatus::budget_exceeded;
        return out;
    }
    SystemEnumerator en(h, f, checked, budget.max_systems);
    en.run();
    if (en.over_budget) {
        out.status = CheckStatus::budget_exceeded;
    } else if (en.refuted) {
        out.status = CheckStatus::refuted;
        out.counterexample = std::move(en.counterexample);
    }
    return out;
}

}  // namespace detail

// Entry point used by both the certifier and strategy-step validation.
inline detail::ProfileCheck colorable_for_all_assignments(const Graph& h, const SizeProfile& f,
                                                          const ExhaustiveBudget& budget,
                                                          long long& systems_checked) {
    if (static_cast<int>(f.size()) != h.n)
        throw std::invalid_argument("profile: expected one entry per vertex");
    return detail::check_profile(h, f, budget, systems_checked);
}

// ---------------------------------------------------------------------------
// Strategy proofs.
//
// Replay semantics: steps execute in order on (U = unhandled set, beta =
// current guaranteed list-size lower bounds).
//   precolor_set(S): H[S] must be colorable for all assignments of sizes
//       beta|S; afterwards every unhandled z loses |N(z) cap S| budget.
//   degree_block(C): C connected, beta >= deg_C pointwise, and either a
//       strict-slack vertex exists or some block of H[C] is neither complete
//       nor an odd cycle; unhandled outside neighbors lose budget as above.
//   greedy(v): v is colored after everything still unhandled, so it only
//       needs beta(v) >= deg_{H[U]}(v) + 1; nobody else is affected.
// A proof is valid when every step validates and U ends empty.

struct StrategyValidation {
    bool ok = false;
    std::string error;
};

inline StrategyValidation validate_strategy(const Graph& h, const SizeProfile& f,
                                            const StrategyProof& proof) {
    StrategyValidation out;
    std::vector<char> in_u(h.n, 1);
    std::vector<int> beta = f;
    auto fail = [&](const std::string& msg) {
        out.error = msg;
        return out;
    };
    for (size_t si = 0; si < proof.size(); ++si) {
        const auto& step = proof[si];
        std::ostringstream tag;
        tag << "step " << si << ": ";
        if (step.vertices.empty()) return fail(tag.str() + "empty vertex set");
        for (int v : step.vertices) {
            h.check_vertex(v);
            if (!in_u[v]) return fail(tag.str() + "vertex " + std::to_string(v) + " already handled");
        }
        switch (step.kind) {
            case StrategyStep::Kind::greedy: {
                if (step.vertices.size() != 1) return fail(tag.str() + "greedy takes one vertex");
                int v = step.vertices.front();
                int deg_u = 0;
                for (int w : h.adj[v]) deg_u += in_u[w];
                if (beta[v] < deg_u + 1)
                    return fail(tag.str() + "greedy(" + std::to_string(v) + ") needs budget " +
                                std::to_string(deg_u + 1) + ", has " + std::to_string(beta[v]));
                in_u[v] = 0;
                break;
            }
            case StrategyStep::Kind::precolor_set: {
                if (step.vertices.size() > 5) return fail(tag.str() + "precolor set too large");
                auto sub = induced_subgraph(h, step.vertices);
                SizeProfile fs(sub.graph.n);
                for (int i = 0; i < sub.graph.n; ++i) fs[i] = beta[sub.host_vertex[i]];
                ExhaustiveBudget tiny;
                tiny.max_vertices = 5;
                long long n_checked = 0;
                auto pc = colorable_for_all_assignments(sub.graph, fs, tiny, n_checked);
                if (pc.status != CheckStatus::certified)
                    return fail(tag.str() + "precolor set not colorable under current budgets");
                for (int v : step.vertices) in_u[v] = 0;
                for (int v : step.vertices)
                    for (int w : h.adj[v])
                        if (in_u[w]) --beta[w];
                break;
            }
            case StrategyStep::Kind::degree_block: {
                auto sub = induced_subgraph(h, step.vertices);
                if (!is_connected(sub.graph)) return fail(tag.str() + "block set not connected");
                for (int i = 0; i < sub.graph.n; ++i)
                    if (beta[sub.host_vertex[i]] < sub.graph.degree(i))
                        return fail(tag.str() + "budget below block degree at vertex " +
                                    std::to_string(sub.host_vertex[i]));
                bool slack = false;
                if (step.slack_vertex >= 0) {
                    int li = sub.local_of_host.at(step.slack_vertex);
                    if (li < 0) return fail(tag.str() + "slack vertex outside block");
                    slack = beta[step.slack_vertex] > sub.graph.degree(li);
                }
                if (!slack) {
                    bool good_block = false;
                    for (const auto& blk : blocks(sub.graph).blocks)
                        if (!is_clique(sub.graph, blk) && !block_is_odd_cycle(sub.graph, blk)) {
                            good_block = true;
                            break;
                        }
                    if (!good_block)
                        return fail(tag.str() + "no slack vertex and every block is complete or an odd cycle");
                }
                for (int v : step.vertices) in_u[v] = 0;
                for (int v : step.vertices)
                    for (int w : h.adj[v])
                        if (in_u[w]) --beta[w];
                break;
            }
        }
    }
    for (int v = 0; v < h.n; ++v)
        if (in_u[v]) return fail("vertex " + std::to_string(v) + " never colored");
    out.ok = true;
    return out;
}

namespace detail {

struct StrategySearch {
    const Graph& h;
    VertexSet hint;
    long long nodes = 0;
    long long node_cap;
    std::map<std::vector<int>, char> failed;  // memo over (U, beta) states

    StrategySearch(const Graph& h_, VertexSet hint_, long long cap)
        : h(h_), hint(std::move(hint_)), node_cap(cap) {}

    static std::vector<int> key(const std::vector<char>& u, const std::vector<int>& beta) {
        std::vector<int> k(beta.size());
        for (size_t i = 0; i < beta.size(); ++i) k[i] = u[i] ? beta[i] : -100;
        return k;
    }

    bool precolor_ok(const VertexSet& s, const std::vector<int>& beta) const {
        auto sub = induced_subgraph(h, s);
        SizeProfile fs(sub.graph.n);
        for (int i = 0; i < sub.graph.n; ++i) {
            fs[i] = beta[sub.host_vertex[i]];
            if (fs[i] <= 0) return false;
        }
        ExhaustiveBudget tiny;
        tiny.max_vertices = 5;
        long long c = 0;
        return colorable_for_all_assignments(sub.graph, fs, tiny, c).status == CheckStatus::certified;
    }

    // Applies the moves that never hurt: budget-slack peels (no side effects)
    // and whole components satisfying the degree/Gallai criterion.
    void eager(std::vector<char>& u, std::vector<int>& beta, StrategyProof& proof) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < h.n; ++v) {
                if (!u[v]) continue;
                int deg_u = 0;
                for (int w : h.adj[v]) deg_u += u[w];
                if (beta[v] >= deg_u + 1) {
                    proof.push_back({StrategyStep::Kind::greedy, {v}, -1});
                    u[v] = 0;
                    changed = true;
                }
            }
            if (changed) continue;
            // whole components via the degree criterion
            std::vector<char> seen(h.n, 0);
            for (int s = 0; s < h.n; ++s) {
                if (!u[s] || seen[s]) continue;
                VertexSet comp;
                std::vector<int> stack{s};
                seen[s] = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    comp.push_back(v);
                    for (int w : h.adj[v])
                        if (u[w] && !seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                }
                std::sort(comp.begin(), comp.end());
                auto sub = induced_subgraph(h, comp);
                bool degrees_ok = true;
                int slack = -1;
                for (int i = 0; i < sub.graph.n; ++i) {
                    if (beta[sub.host_vertex[i]] < sub.graph.degree(i)) {
                        degrees_ok = false;
                        break;
                    }
                    if (beta[sub.host_vertex[i]] > sub.graph.degree(i)) slack = sub.host_vertex[i];
                }
                if (!degrees_ok) continue;
                bool applies = slack >= 0;
                if (!applies)
                    for (const auto& blk : blocks(sub.graph).blocks)
                        if (!is_clique(sub.graph, blk) && !block_is_odd_cycle(sub.graph, blk)) {
                            applies = true;
                            break;
                        }
                if (!applies) continue;
                proof.push_back({StrategyStep::Kind::degree_block, comp, slack});
                for (int v : comp) u[v] = 0;  // full component: no outside neighbors in U
                changed = true;
                break;
            }
        }
    }

    std::vector<VertexSet> candidates(const std::vector<char>& u, const std::vector<int>& beta) const {
        std::vector<VertexSet> out;
        VertexSet hint_left;
        for (int v : hint)
            if (u[v]) hint_left.push_back(v);
        if (hint_left.size() >= 2) out.push_back(hint_left);
        for (int v : hint_left) out.push_back({v});
        // deficient vertices, most constrained first
        std::vector<std::pair<int, int>> by_beta;
        for (int v = 0; v < h.n; ++v)
            if (u[v] && beta[v] >= 1 && beta[v] <= 2) by_beta.emplace_back(beta[v], v);
        std::sort(by_beta.begin(), by_beta.end());
        for (size_t i = 0; i < by_beta.size() && i < 6; ++i) out.push_back({by_beta[i].second});
        for (size_t i = 0; i < by_beta.size() && i < 6; ++i)
            for (size_t j = i + 1; j < by_beta.size() && j < 6; ++j) {
                VertexSet s{by_beta[i].second, by_beta[j].second};
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
        return out;
    }

    bool search(std::vector<char> u, std::vector<int> beta, StrategyProof& proof) {
        if (++nodes > node_cap) return false;
        eager(u, beta, proof);
        if (std::none_of(u.begin(), u.end(), [](char c) { return c != 0; })) return true;
        auto k = key(u, beta);
        if (failed.count(k)) return false;
        for (const auto& cand : candidates(u, beta)) {
            if (cand.size() > 5 || !precolor_ok(cand, beta)) continue;
            auto u2 = u;
            auto beta2 = beta;
            StrategyProof sub_proof;
            sub_proof.push_back({StrategyStep::Kind::precolor_set, cand, -1});
            for (int v : cand) u2[v] = 0;
            for (int v : cand)
                for (int w : h.adj[v])
                    if (u2[w]) --beta2[w];
            if (search(u2, beta2, sub_proof)) {
                proof.insert(proof.end(), sub_proof.begin(), sub_proof.end());
                return true;
            }
        }
        failed[k] = 1;
        return false;
    }
};

}  // namespace detail

struct StrategyOutcome {
    bool found = false;
    StrategyProof proof;
    long long nodes = 0;
};

// Searches for a strategy proof that h is colorable under all assignments of
// sizes f. `hint` biases precoloring toward the deficit set of the current
// forb case. Failure is inconclusive, never a refutation.
inline StrategyOutcome find_strategy(const Graph& h, const SizeProfile& f, const VertexSet& hint,
                                     const ExhaustiveBudget& budget) {
    detail::StrategySearch s(h, hint, budget.strategy_node_cap);
    StrategyOutcome out;
    std::vector<char> u(h.n, 1);
    out.found = s.search(u, f, out.proof);
    out.nodes = s.nodes;
    if (out.found) {
        auto v = validate_strategy(h, f, out.proof);
        if (!v.ok) throw std::logic_error("find_strategy produced invalid proof: " + v.error);
    }
    return out;
}

// Randomized hunt for a refuting list system of the given sizes. Universe
// sizes cycle through overlap-heavy choices; returns the first uncolorable
// system found.
inline std::optional<ListAssignment> falsify_profile(const Graph& h, const SizeProfile& f,
                                                     int trials, std::mt19937_64& rng) {
    int maxf = 1;
    for (int x : f) maxf = std::max(maxf, x);
    for (int t = 0; t < trials; ++t) {
        int universe;
        switch (t % 4) {
            case 0: universe = maxf; break;
            case 1: universe = maxf + 1; break;
            case 2: universe = maxf + 2; break;
            default: universe = 2 * maxf; break;
        }
        ListAssignment lists(h.n);
        bool bad = false;
        for (int v = 0; v < h.n && !bad; ++v) {
            if (f[v] <= 0) return ListAssignment(h.n);  // trivially refuting
            if (f[v] > universe) {
                bad = true;
                break;
            }
            std::vector<int> pool(universe);
            for (int i = 0; i < universe; ++i) pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            lists[v].assign(pool.begin(), pool.begin() + f[v]);
            std::sort(lists[v].begin(), lists[v].end());
        }
        if (bad) continue;
        if (!is_colorable(h, lists)) return lists;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// fix / forb / reducible drivers.

enum class CheckMode { exhaustive, strategy };

struct FixCase {
    int pinned;
    long long systems_checked = 0;
    StrategyProof proof;
};

struct ForbCase {
    VertexSet s;
    long long systems_checked = 0;
    StrategyProof proof;
};

struct Refutation {
    std::string part;  // "fix" or "forb"
    int pinned = -1;
    VertexSet s;
    ListAssignment lists;
};

struct ReductionCertificate {
    CheckMode mode = CheckMode::exhaustive;
    std::string independence_scope = "H";
    std::vector<FixCase> fix_cases;
    std::vector<ForbCase> forb_cases;
};

struct CheckResult {
    CheckStatus status = CheckStatus::certified;
    ReductionCertificate certificate;
    std::optional<Refutation> refutation;
    long long total_systems = 0;
};

// All sets that the forb condition quantifies over, enumerated inside H:
// every subset of size <= k-2 whose members pairwise avoid 2-/3-edge paths.
// Checking inside H is a superset of the host-side family, hence sound.
inline std::vector<VertexSet> forb_sets(const EmbeddedConfig& cfg) {
    std::vector<VertexSet> out{{}};
    int cap = cfg.k - 2;
    VertexSet cur;
    auto extend = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) >= cap) return;
        for (int v = start; v < cfg.h.n; ++v) {
            bool ok = true;
            for (int s : cur)
                if (has_exact_length_path(cfg.h, s, v, 2) || has_exact_length_path(cfg.h, s, v, 3)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            out.push_back(cur);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

namespace detail {

struct CaseOutcome {
    CheckStatus status;
    long long systems = 0;
    StrategyProof proof;
    ListAssignment counterexample;
};

inline CaseOutcome run_case(const EmbeddedConfig& cfg, const SizeProfile& f, const VertexSet& hint,
                            CheckMode mode, const ExhaustiveBudget& budget, std::uint64_t seed) {
    CaseOutcome out{CheckStatus::certified};
    if (mode == CheckMode::exhaustive) {
        auto pc = colorable_for_all_assignments(cfg.h, f, budget, out.systems);
        out.status = pc.status;
        out.counterexample = std::move(pc.counterexample);
        return out;
    }
    auto so = find_strategy(cfg.h, f, hint, budget);
    if (so.found) {
        out.proof = std::move(so.proof);
        return out;
    }
    auto rng = make_rng(seed, RngStream::falsify);
    if (auto cex = falsify_profile(cfg.h, f, budget.falsification_trials, rng)) {
        out.status = CheckStatus::refuted;
        out.counterexample = std::move(*cex);
        return out;
    }
    out.status = CheckStatus::budget_exceeded;
    return out;
}

}  // namespace detail

inline CheckResult check_fix(const EmbeddedConfig& cfg, CheckMode mode,
                             const ExhaustiveBudget& budget = {}, std::uint64_t seed = 0) {
    cfg.validate();
    CheckResult out;
    out.certificate.mode = mode;
    for (int v = 0; v < cfg.h.n; ++v) {
        auto c = detail::run_case(cfg, fix_profile(cfg, v), {v}, mode, budget, seed + v);
        out.total_systems += c.systems;
        if (c.status == CheckStatus::refuted) {
            out.status = CheckStatus::refuted;
            out.refutation = Refutation{"fix", v, {}, std::move(c.counterexample)};
            return out;
        }
        if (c.status == CheckStatus::budget_exceeded) {
            out.status = CheckStatus::budget_exceeded;
            return out;
        }
        out.certificate.fix_cases.push_back({v, c.systems, std::move(c.proof)});
    }
    return out;
}

inline CheckResult check_forb(const EmbeddedConfig& cfg, CheckMode mode,
                              const ExhaustiveBudget& budget = {}, std::uint64_t seed = 0) {
    cfg.validate();
    CheckResult out;
    out.certificate.mode = mode;
    auto sets = forb_sets(cfg);
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        auto c = detail::run_case(cfg, forb_profile(cfg, s), s, mode, budget,
                                  seed + 7919 * (i + 1));
        out.total_systems += c.systems;
        if (c.status == CheckStatus::refuted) {
            out.status = CheckStatus::refuted;
            out.refutation = Refutation{"forb", -1, s, std::move(c.counterexample)};
            return out;
        }
        if (c.status == CheckStatus::budget_exceeded) {
            out.status = CheckStatus::budget_exceeded;
            return out;
        }
        out.certificate.forb_cases.push_back({s, c.systems, std::move(c.proof)});
    }
    return out;
}

inline CheckResult check_reducible(const EmbeddedConfig& cfg, CheckMode mode,
                                   const ExhaustiveBudget& budget = {}, std::uint64_t seed = 0) {
    auto fix = check_fix(cfg, mode, budget, seed);
    if (fix.status != CheckStatus::certified) return fix;
    auto forb = check_forb(cfg, mode, budget, seed);
    forb.total_systems += fix.total_systems;
    forb.certificate.fix_cases = std::move(fix.certificate.fix_cases);
    return forb;
}

}  // namespace flexcol

#pragma once

// The recursive coloring distribution and its flexibility guarantees.
//
// Given a graph in which every induced subgraph contains a reducible
// configuration on at most b vertices, a coloring is drawn as follows: peel a
// reducible set Y, recursively color the rest, strike the colors used by
// outside neighbors from Y's lists, and color Y uniformly at random from the
// colorings of the struck lists. The resulting distribution satisfies, with
// epsilon = (1/k)^(b+k-2) and delta = (1/k)^b,
//   (i)  Pr[phi(v) = c] >= epsilon                   for every v, c in L(v),
//   (ii) Pr[phi avoids c on all of S] >= delta^|S|   for small spread-out S.
// The peel sequence is deterministic per instance; only the color draws
// consume randomness, so runs reproduce exactly from a seed.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "flexcol/config_catalog.hpp"
#include "flexcol/graph.hpp"
#include "flexcol/list_coloring.hpp"
#include "flexcol/rational.hpp"
#include "flexcol/reducibility.hpp"
#include "flexcol/rng.hpp"
#include "flexcol/stats.hpp"

namespace flexcol {

// Decimal string of base^exp (schoolbook digits; exp stays below a few hundred).
inline std::string power_decimal(int base, int exp) {
    if (base < 2 || exp < 0) throw std::invalid_argument("power_decimal: base >= 2, exp >= 0");
    std::vector<std::uint32_t> digits{1};  // base 10^9 limbs, little-endian
    for (int i = 0; i < exp; ++i) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            std::uint64_t cur = static_cast<std::uint64_t>(d) * base + carry;
            d = static_cast<std::uint32_t>(cur % 1000000000ull);
            carry = cur / 1000000000ull;
        }
        while (carry) {
            digits.push_back(static_cast<std::uint32_t>(carry % 1000000000ull));
            carry /= 1000000000ull;
        }
    }
    std::string out = std::to_string(digits.back());
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        std::string limb = std::to_string(*it);
        out += std::string(9 - limb.size(), '0') + limb;
    }
    return out;
}

struct FlexParams {
    int k = 4;
    int b = 138;

    void validate() const {
        if (k < 3) throw std::invalid_argument("params: k must be >= 3");
        if (b < 1) throw std::invalid_argument("params: b must be >= 1");
    }
    int delta_exponent() const { return b; }
    int epsilon_exponent() const { return b + k - 2; }

    bool exact_representable() const {
        long double v = 1;
        for (int i = 0; i < epsilon_exponent(); ++i) {
            v *= k;
            if (v > 9.0e18L) return false;
        }
        return true;
    }
    Rational epsilon() const {
        if (!exact_representable()) throw std::domain_error("params: epsilon denominator exceeds int64");
        std::int64_t d = 1;
        for (int i = 0; i < epsilon_exponent(); ++i) d *= k;
        return Rational(1, d);
    }
    Rational delta() const {
        if (!exact_representable()) throw std::domain_error("params: delta denominator exceeds int64");
        std::int64_t d = 1;
        for (int i = 0; i < delta_exponent(); ++i) d *= k;
        return Rational(1, d);
    }
    // exact value as a fraction string regardless of magnitude
    std::string epsilon_string() const { return "1/" + power_decimal(k, epsilon_exponent()); }
    std::string delta_string() const { return "1/" + power_decimal(k, delta_exponent()); }
    double log_epsilon() const { return -epsilon_exponent() * std::log(static_cast<double>(k)); }
    double log_delta() const { return -delta_exponent() * std::log(static_cast<double>(k)); }
    double epsilon_approx() const { return std::exp(log_epsilon()); }
    double delta_approx() const { return std::exp(log_delta()); }
};

struct hypothesis_violated : std::runtime_error {
    long long subsets_examined;
    hypothesis_violated(const std::string& msg, long long examined)
        : std::runtime_error(msg), subsets_examined(examined) {}
};

struct FindReducibleOptions {
    int generic_limit = 8;          // max size for the generic fallback search
    long long subset_cap = 200000;  // generic subsets examined before giving up
    bool use_catalog = true;
};

struct ReducibleHit {
    VertexSet y;          // host vertex ids
    std::string source;   // catalog id, or "generic/<size>"
    CheckMode mode = CheckMode::exhaustive;
};

namespace detail {

// Certified catalog entries, resolved once. Entries that fail to certify in
// strategy mode are skipped (matching them would not yield a valid peel).
inline const std::vector<CatalogConfig>& certified_catalog() {
    static const std::vector<CatalogConfig> entries = [] {
        std::vector<CatalogConfig> out;
        for (const auto& id : catalog_ids()) {
            CatalogConfig entry = build_catalog_entry(id);
            auto res = check_reducible(entry.config, CheckMode::strategy);
            if (res.status == CheckStatus::certified) out.push_back(std::move(entry));
        }
        return out;
    }();
    return entries;
}

// Connected induced subsets of g that contain `root` as their minimum vertex,
// emitted in lexicographic order per size. Standard rooted-growth enumeration.
template <typename Fn>
bool grow_connected(const Graph& g, VertexSet& cur, std::set<int>& frontier, int root, int max_size,
                    long long& budget, Fn&& visit) {
    if (budget-- <= 0) return false;
    if (!visit(cur)) return false;
    if (static_cast<int>(cur.size()) >= max_size) return true;
    auto frontier_snapshot = frontier;
    std::set<int> banned;  // keeps enumeration canonical: once skipped, stay skipped
    for (int w : frontier_snapshot) {
        if (w <= root) continue;
        cur.push_back(w);
        std::set<int> next = frontier;
        next.erase(w);
        for (int x : g.adj[w])
            if (std::find(cur.begin(), cur.end(), x) == cur.end()) next.insert(x);
        for (int x : banned) next.erase(x);
        if (!grow_connected(g, cur, next, root, max_size, budget, visit)) {
            cur.pop_back();
            return false;
        }
        cur.pop_back();
        banned.insert(w);
    }
    return true;
}

}  // namespace detail

// Finds a reducible configuration inside g[z]: catalog patterns first, then a
// size-ascending search over connected induced subsets checked directly.
inline ReducibleHit find_reducible(const Graph& g, const VertexSet& z, int k, int b,
                                   const FindReducibleOptions& opts = {}) {
    if (z.empty()) throw std::invalid_argument("find_reducible: empty active set");
    auto host = induced_subgraph(g, z);
    long long examined = 0;

    if (opts.use_catalog) {
        for (const auto& entry : detail::certified_catalog()) {
            if (entry.config.h.n > std::min(b, host.graph.n)) continue;
            auto occ = find_occurrences(host.graph, entry.config, 1);
            if (occ.empty()) continue;
            VertexSet y;
            for (int local : occ.front().image) y.push_back(host.host_vertex[local]);
            std::sort(y.begin(), y.end());
            return {y, entry.id, CheckMode::strategy};
        }
    }

    int max_size = std::min({b, opts.generic_limit, host.graph.n});
    ExhaustiveBudget budget;
    for (int size = 1; size <= max_size; ++size) {
        for (int root = 0; root < host.graph.n; ++root) {
            std::optional<VertexSet> found;
            VertexSet cur{root};
            std::set<int> frontier(host.graph.adj[root].begin(), host.graph.adj[root].end());
            long long budget_left = opts.subset_cap - examined;
            detail::grow_connected(host.graph, cur, frontier, root, size, budget_left,
                                   [&](const VertexSet& sub) {
                                       if (static_cast<int>(sub.size()) != size) return true;
                                       // quick filter: base profile >= 2 everywhere
                                       auto cand = induced_subgraph(host.graph, sub);
                                       for (int i = 0; i < cand.graph.n; ++i) {
                                           int outside = host.graph.degree(cand.host_vertex[i]) -
                                                         cand.graph.degree(i);
                                           if (outside > k - 2) return true;
                                       }
                                       EmbeddedConfig cfg;
                                       cfg.h = cand.graph;
                                       cfg.k = k;
                                       cfg.ambient_degree.resize(cand.graph.n);
                                       for (int i = 0; i < cand.graph.n; ++i)
                                           cfg.ambient_degree[i] = host.graph.degree(cand.host_vertex[i]);
                                       auto mode = cfg.h.n <= budget.max_vertices
                                                       ? CheckMode::exhaustive
                                                       : CheckMode::strategy;
                                       if (check_reducible(cfg, mode).status == CheckStatus::certified) {
                                           VertexSet y;
                                           for (int i : sub) y.push_back(host.host_vertex[i]);
                                           std::sort(y.begin(), y.end());
                                           found = std::move(y);
                                           return false;  // stop this root's enumeration
                                       }
                                       return true;
                                   });
            examined += std::max(0ll, opts.subset_cap - examined - budget_left);
            if (found) {
                auto mode = size <= budget.max_vertices ? CheckMode::exhaustive : CheckMode::strategy;
                return {*found, "generic/" + std::to_string(size), mode};
            }
            if (examined >= opts.subset_cap)
                throw hypothesis_violated(
                    "find_reducible: no reducible configuration within budget (class hypothesis violated?)",
                    examined);
        }
    }
    throw hypothesis_violated(
        "find_reducible: no reducible configuration up to size " + std::to_string(max_size),
        examined);
}

// ---------------------------------------------------------------------------
// Peel plan: the deterministic (Z_i, Y_i) sequence shared by all samples.

struct PeelLevel {
    VertexSet z;  // active vertices entering this level
    VertexSet y;  // reducible set peeled here
    std::string source;
    CheckMode mode = CheckMode::exhaustive;
};

struct PeelPlan {
    std::vector<PeelLevel> levels;
    int effective_b() const {
        int m = 0;
        for (const auto& l : levels) m = std::max(m, static_cast<int>(l.y.size()));
        return std::max(m, 1);
    }
    FlexParams effective_params(int k) const { return FlexParams{k, effective_b()}; }
};

inline PeelPlan build_peel_plan(const Graph& g, int k, int b, const FindReducibleOptions& opts = {}) {
    PeelPlan plan;
    VertexSet z(g.n);
    std::iota(z.begin(), z.end(), 0);
    while (!z.empty()) {
        auto hit = find_reducible(g, z, k, b, opts);
        PeelLevel level{z, hit.y, hit.source, hit.mode};
        VertexSet next;
        std::set_difference(z.begin(), z.end(), hit.y.begin(), hit.y.end(), std::back_inserter(next));
        plan.levels.push_back(std::move(level));
        z = std::move(next);
    }
    return plan;
}

// ---------------------------------------------------------------------------
// Sampling.

namespace detail {

// Uniform coloring of g[y] under `lists`, drawn independently per connected
// component (the joint distribution is the same as enumerating g[y] whole).
inline void color_subset_uniform(const Graph& g, const ListAssignment& lists, const VertexSet& y,
                                 Coloring& phi, std::mt19937_64& rng, long long cap) {
    auto sub = induced_subgraph(g, y);
    ListAssignment sub_lists(sub.graph.n);
    for (int i = 0; i < sub.graph.n; ++i) sub_lists[i] = lists[sub.host_vertex[i]];
    for (const auto& comp : connected_components(sub.graph)) {
        auto part = induced_subgraph(sub.graph, comp);
        ListAssignment part_lists(part.graph.n);
        for (int i = 0; i < part.graph.n; ++i) part_lists[i] = sub_lists[part.host_vertex[i]];
        auto res = enumerate_colorings(part.graph, part_lists, cap);
        if (res.truncated) throw std::runtime_error("sampler: enumeration cap exceeded on a peeled set");
        if (res.colorings.empty())
            throw std::logic_error("sampler: peeled set uncolorable after strikes; certificate broken");
        std::uniform_int_distribution<std::size_t> pick(0, res.colorings.size() - 1);
        const auto& chosen = res.colorings[pick(rng)];
        for (int i = 0; i < part.graph.n; ++i)
            phi[sub.host_vertex[part.host_vertex[i]]] = chosen[i];
    }
}

inline ListAssignment struck_lists(const Graph& g, const ListAssignment& lists, const Coloring& phi,
                                   const PeelLevel& level) {
    // L'(v) = L(v) minus colors already used by v's neighbors inside Z \ Y
    std::vector<char> in_y(g.n, 0);
    for (int v : level.y) in_y[v] = 1;
    std::vector<char> in_z(g.n, 0);
    for (int v : level.z) in_z[v] = 1;
    ListAssignment out = lists;
    for (int v : level.y) {
        std::vector<int>& l = out[v];
        for (int u : g.adj[v]) {
            if (!in_z[u] || in_y[u]) continue;
            if (phi[u] == kUncolored)
                throw std::logic_error("sampler: neighbor in the colored region has no color");
            l.erase(std::remove(l.begin(), l.end(), phi[u]), l.end());
        }
    }
    return out;
}

}  // namespace detail

struct SampleResult {
    Coloring coloring;
    const PeelPlan* plan;
};

inline Coloring sample_one(const Graph& g, const ListAssignment& lists, const PeelPlan& plan,
                           std::mt19937_64& rng, long long enum_cap = 1 << 20) {
    Coloring phi(g.n, kUncolored);
    for (auto it = plan.levels.rbegin(); it != plan.levels.rend(); ++it) {
        auto struck = detail::struck_lists(g, lists, phi, *it);
        detail::color_subset_uniform(g, struck, it->y, phi, rng, enum_cap);
    }
    return phi;
}

// The guarantees estimated below assume every list carries at least k colors;
// shorter lists are a caller error, not a sampler failure.
inline void check_list_sizes(const Graph& g, const ListAssignment& lists, int k) {
    for (int v = 0; v < g.n; ++v)
        if (static_cast<int>(lists[v].size()) < k)
            throw std::invalid_argument("sampler: vertex " + std::to_string(v) + " has fewer than k colors");
}

// Main entry point: builds the plan, draws one coloring, validates it.
inline std::pair<Coloring, PeelPlan> sample_flexible(const Graph& g, const ListAssignment& lists,
                                                     const FlexParams& params, std::uint64_t seed,
                                                     const FindReducibleOptions& opts = {}) {
    params.validate();
    check_lists(g, lists);
    check_list_sizes(g, lists, params.k);
    auto plan = build_peel_plan(g, params.k, params.b, opts);
    auto rng = make_rng(seed, RngStream::sampler, 0);
    auto phi = sample_one(g, lists, plan, rng);
    if (!is_valid_coloring(g, lists, phi))
        throw std::logic_error("sampler: produced an improper coloring");
    return {std::move(phi), std::move(plan)};
}

// Exact distribution of the sampler on small instances: walks the peel plan
// from the deepest level outward, multiplying uniform-choice probabilities.
// Keys are full colorings; probabilities are exact rationals.
inline std::map<Coloring, Rational> exact_distribution(const Graph& g, const ListAssignment& lists,
                                                       const PeelPlan& plan,
                                                       long long cap = 200000) {
    std::map<Coloring, Rational> dist;
    dist[Coloring(g.n, kUncolored)] = Rational(1);
    for (auto it = plan.levels.rbegin(); it != plan.levels.rend(); ++it) {
        std::map<Coloring, Rational> next;
        for (const auto& [phi, p] : dist) {
            auto struck = detail::struck_lists(g, lists, phi, *it);
            auto sub = induced_subgraph(g, it->y);
            ListAssignment sub_lists(sub.graph.n);
            for (int i = 0; i < sub.graph.n; ++i) sub_lists[i] = struck[sub.host_vertex[i]];
            auto res = enumerate_colorings(sub.graph, sub_lists, cap);
            if (res.truncated) throw std::runtime_error("exact_distribution: enumeration cap exceeded");
            if (res.colorings.empty())
                throw std::logic_error("exact_distribution: peeled set uncolorable");
            Rational each = p / Rational(static_cast<std::int64_t>(res.colorings.size()));
            for (const auto& sub_phi : res.colorings) {
                Coloring ext = phi;
                for (int i = 0; i < sub.graph.n; ++i) ext[sub.host_vertex[i]] = sub_phi[i];
                next[ext] = next.count(ext) ? next[ext] + each : each;
            }
            if (static_cast<long long>(next.size()) > cap)
                throw std::runtime_error("exact_distribution: state cap exceeded");
        }
        dist = std::move(next);
    }
    return dist;
}

inline std::map<std::pair<int, int>, Rational> exact_marginals(const Graph& g,
                                                               const ListAssignment& lists,
                                                               const PeelPlan& plan) {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [phi, p] : exact_distribution(g, lists, plan))
        for (int v = 0; v < g.n; ++v) {
            auto key = std::make_pair(v, phi[v]);
            out[key] = out.count(key) ? out[key] + p : p;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo reports.

struct MarginalEntry {
    int v;
    int c;
    long long hits = 0;
    double estimate = 0.0;
    double lower_bound = 0.0;  // one-sided Clopper-Pearson at the report's confidence
    bool clears_epsilon = false;
    bool empirically_zero = false;
};

struct MarginalReport {
    long long samples = 0;
    double confidence = 0.0;
    int effective_b = 0;
    std::string epsilon_effective;  // exact fraction string
    double epsilon_effective_approx = 0.0;
    std::vector<MarginalEntry> entries;
    bool all_clear = true;
};

inline MarginalReport estimate_marginals(const Graph& g, const ListAssignment& lists,
                                         const FlexParams& params, long long samples,
                                         std::uint64_t seed, double confidence = 0.99,
                                         const FindReducibleOptions& opts = {}) {
    if (samples < 1) throw std::invalid_argument("estimate_marginals: need samples >= 1");
    params.validate();
    check_lists(g, lists);
    check_list_sizes(g, lists, params.k);
    auto plan = build_peel_plan(g, params.k, params.b, opts);
    std::map<std::pair<int, int>, long long> hits;
    for (long long i = 0; i < samples; ++i) {
        auto rng = make_rng(seed, RngStream::sampler, static_cast<std::uint64_t>(i));
        auto phi = sample_one(g, lists, plan, rng);
        for (int v = 0; v < g.n; ++v) ++hits[{v, phi[v]}];
    }
    MarginalReport rep;
    rep.samples = samples;
    rep.confidence = confidence;
    rep.effective_b = plan.effective_b();
    FlexParams eff = plan.effective_params(params.k);
    rep.epsilon_effective = eff.epsilon_string();
    rep.epsilon_effective_approx = eff.epsilon_approx();
    for (int v = 0; v < g.n; ++v)
        for (int c : lists[v]) {
            MarginalEntry e;
            e.v = v;
            e.c = c;
            e.hits = hits.count({v, c}) ? hits[{v, c}] : 0;
            e.estimate = static_cast<double>(e.hits) / static_cast<double>(samples);
            e.lower_bound = clopper_pearson_lower(e.hits, samples, confidence);
            e.empirically_zero = e.hits == 0;
            e.clears_epsilon = e.lower_bound >= eff.epsilon_approx();
            rep.all_clear = rep.all_clear && e.clears_epsilon;
            rep.entries.push_back(e);
        }
    return rep;
}

struct AvoidanceReport {
    long long samples = 0;
    long long hits = 0;  // samples avoiding c on all of S
    double estimate = 0.0;
    double lower_bound = 0.0;
    double confidence = 0.0;
    int effective_b = 0;
    std::string delta_power;  // exact fraction string for delta^|S|
    double delta_power_approx = 0.0;
    bool clears_bound = false;
};

inline AvoidanceReport estimate_independent_avoidance(const Graph& g, const ListAssignment& lists,
                                                      const FlexParams& params, const VertexSet& s,
                                                      int color, long long samples,
                                                      std::uint64_t seed, double confidence = 0.99,
                                                      const FindReducibleOptions& opts = {}) {
    if (samples < 1) throw std::invalid_argument("estimate_independent_avoidance: need samples >= 1");
    params.validate();
    check_lists(g, lists);
    check_list_sizes(g, lists, params.k);
    if (static_cast<int>(s.size()) > params.k - 2)
        throw std::invalid_argument("avoidance: |S| must be at most k-2");
    if (!is_p3p4_independent(g, s))
        throw std::invalid_argument("avoidance: S is not independent (2- or 3-edge path inside)");
    auto plan = build_peel_plan(g, params.k, params.b, opts);
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        auto rng = make_rng(seed, RngStream::sampler, static_cast<std::uint64_t>(i));
        auto phi = sample_one(g, lists, plan, rng);
        bool avoided = true;
        for (int v : s)
            if (phi[v] == color) {
                avoided = false;
                break;
            }
        hits += avoided;
    }
    AvoidanceReport rep;
    rep.samples = samples;
    rep.hits = hits;
    rep.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    rep.lower_bound = clopper_pearson_lower(hits, samples, confidence);
    rep.confidence = confidence;
    rep.effective_b = plan.effective_b();
    FlexParams eff = plan.effective_params(params.k);
    int expo = eff.delta_exponent() * static_cast<int>(s.size());
    rep.delta_power = s.empty() ? "1" : "1/" + power_decimal(params.k, expo);
    rep.delta_power_approx = std::exp(-expo * std::log(static_cast<double>(params.k)));
    rep.clears_bound = rep.lower_bound >= rep.delta_power_approx || s.empty();
    return rep;
}

struct SatisfactionReport {
    Coloring best;
    double satisfied_weight = 0.0;
    double total_weight = 0.0;
    double ratio = 0.0;
    std::string epsilon_effective;
    double epsilon_effective_approx = 0.0;
    int effective_b = 0;
    bool clears_epsilon = false;
    long long samples = 0;
};

template <typename RequestList>
inline SatisfactionReport satisfy_weighted_request(const Graph& g, const ListAssignment& lists,
                                                   const FlexParams& params,
                                                   const RequestList& requests, long long samples,
                                                   std::uint64_t seed,
                                                   const FindReducibleOptions& opts = {}) {
    if (samples < 1) throw std::invalid_argument("satisfy: need samples >= 1");
    params.validate();
    check_lists(g, lists);
    check_list_sizes(g, lists, params.k);
    double total = 0.0;
    for (const auto& r : requests) {
        g.check_vertex(r.v);
        if (!std::binary_search(lists[r.v].begin(), lists[r.v].end(), r.c))
            throw std::invalid_argument("satisfy: request color " + std::to_string(r.c) +
                                        " not in the list of vertex " + std::to_string(r.v));
        if (r.weight < 0) throw std::invalid_argument("satisfy: negative weight");
        total += r.weight;
    }
    auto plan = build_peel_plan(g, params.k, params.b, opts);
    SatisfactionReport rep;
    rep.total_weight = total;
    rep.samples = samples;
    rep.effective_b = plan.effective_b();
    FlexParams eff = plan.effective_params(params.k);
    rep.epsilon_effective = eff.epsilon_string();
    rep.epsilon_effective_approx = eff.epsilon_approx();
    double best_w = -1.0;
    for (long long i = 0; i < samples; ++i) {
        auto rng = make_rng(seed, RngStream::sampler, static_cast<std::uint64_t>(i));
        auto phi = sample_one(g, lists, plan, rng);
        double w = 0.0;
        for (const auto& r : requests)
            if (phi[r.v] == r.c) w += r.weight;
        if (w > best_w) {
            best_w = w;
            rep.best = std::move(phi);
        }
    }
    rep.satisfied_weight = best_w;
    rep.ratio = total > 0 ? best_w / total : 1.0;
    rep.clears_epsilon = best_w >= rep.epsilon_effective_approx * total;
    return rep;
}

}  // namespace flexcol

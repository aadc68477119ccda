// flexcol: list-coloring flexibility toolkit.
//
// Subcommands
//   check-class     scan for 4-/5-cycles and validate a supplied embedding
//   color           decide list-colorability and print a witness
//   certify         run the fix/forb reducibility certifier on a config
//   find-reducible  locate a reducible configuration inside a host graph
//   sample          draw colorings from the recursive distribution
//   satisfy         maximize satisfied request weight over sampled colorings
//   discharge       run the charge rules on an embedded host and audit them
//
// Exit codes: 0 success (for certify: certified); 1 certify refuted /
// color uncolorable; 2 certify budget exceeded; 64 input or usage errors;
// 70 internal invariant failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "flexcol/report.hpp"

namespace {

using namespace flexcol;

constexpr int kExitRefuted = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 64;
constexpr int kExitInternal = 70;

struct Options {
    std::string input;
    std::string lists_path;
    std::string request_path;
    std::string entry;
    std::string mode = "auto";
    std::string format = "json";
    std::uint64_t seed = 0;
    long long samples = 1000;
    int limit_size = 6;
    long long limit_enum = 10'000'000;
    double confidence = 0.99;
    int generic_limit = 8;
    int bound_b = 138;
    bool pair_reducibility = false;
};

ProblemInput load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_problem(in);
}

// overlay L / REQ lines from side files when given
void merge_side_files(ProblemInput& pi, const Options& opt) {
    if (!opt.lists_path.empty()) {
        auto side = load_problem(opt.lists_path);
        if (side.n != pi.n)
            throw std::runtime_error("lists file declares V " + std::to_string(side.n) +
                                     " but input has V " + std::to_string(pi.n));
        pi.lists = side.lists;
        pi.has_lists = side.has_lists;
    }
    if (!opt.request_path.empty()) {
        auto side = load_problem(opt.request_path);
        if (side.n != pi.n)
            throw std::runtime_error("request file declares V " + std::to_string(side.n) +
                                     " but input has V " + std::to_string(pi.n));
        pi.requests = side.requests;
    }
}

void print_text(const ordered_json& j, std::ostream& os, int depth = 0) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_object() || (val.is_array() && !val.empty() && val.front().is_object())) {
                os << pad << key << ":\n";
                print_text(val, os, depth + 1);
            } else {
                os << pad << key << ": " << val.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& val : j) {
            if (val.is_object()) {
                os << pad << "-\n";
                print_text(val, os, depth + 1);
            } else {
                os << pad << "- " << val.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const ordered_json& j, const Options& opt) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        print_text(j, std::cout);
}

int cmd_check_class(const Options& opt) {
    auto pi = load_problem(opt.input);
    Graph g = to_graph(pi);
    ordered_json rep;
    rep["command"] = "check-class";
    rep["vertices"] = g.n;
    rep["edges"] = g.edge_count();
    bool c4 = has_cycle_of_length(g, 4);
    bool c5 = has_cycle_of_length(g, 5);
    rep["contains_c4"] = c4;
    rep["contains_c5"] = c5;
    bool euler_ok = true;
    if (pi.rotation.empty()) {
        rep["embedding"] = "not provided";
    } else {
        auto rot = to_rotation(pi, g);
        auto pg = trace_faces(g, rot);
        euler_ok = validate_planarity(pg);
        rep["embedding"] = euler_ok ? "euler_ok" : "euler_violated";
        rep["faces"] = static_cast<int>(pg.faces.size());
    }
    rep["class_ok"] = !c4 && !c5 && euler_ok;
    emit(rep, opt);
    return 0;
}

int cmd_color(const Options& opt) {
    auto pi = load_problem(opt.input);
    merge_side_files(pi, opt);
    Graph g = to_graph(pi);
    auto lists = to_lists(pi, g);
    auto phi = is_colorable(g, lists);
    ordered_json rep;
    rep["command"] = "color";
    rep["colorable"] = phi.has_value();
    if (phi) rep["coloring"] = json_of(*phi);
    emit(rep, opt);
    return phi ? 0 : kExitRefuted;
}

int cmd_certify(const Options& opt) {
    EmbeddedConfig cfg;
    ordered_json rep;
    rep["command"] = "certify";
    if (!opt.entry.empty()) {
        auto entry = build_catalog_entry(opt.entry);
        cfg = entry.config;
        rep["entry"] = entry.id;
        rep["notes"] = entry.notes;
        if (entry.stated_bound >= 0) rep["stated_bound"] = entry.stated_bound;
    } else {
        auto pi = load_problem(opt.input);
        cfg = to_config(pi);
    }
    rep["vertices"] = cfg.h.n;
    rep["k"] = cfg.k;
    CheckMode mode;
    if (opt.mode == "exhaustive") mode = CheckMode::exhaustive;
    else if (opt.mode == "strategy") mode = CheckMode::strategy;
    else mode = cfg.h.n <= opt.limit_size ? CheckMode::exhaustive : CheckMode::strategy;
    ExhaustiveBudget budget;
    budget.max_vertices = opt.limit_size;
    budget.max_systems = opt.limit_enum;
    auto res = check_reducible(cfg, mode, budget, opt.seed);
    rep["seed"] = opt.seed;
    rep["result"] = json_of(res);
    emit(rep, opt);
    switch (res.status) {
        case CheckStatus::certified: return 0;
        case CheckStatus::refuted: return kExitRefuted;
        default: return kExitBudget;
    }
}

int cmd_find_reducible(const Options& opt) {
    auto pi = load_problem(opt.input);
    Graph g = to_graph(pi);
    int k = pi.k < 0 ? 4 : pi.k;
    FindReducibleOptions fro;
    fro.generic_limit = opt.generic_limit;
    VertexSet all(g.n);
    std::iota(all.begin(), all.end(), 0);
    ordered_json rep;
    rep["command"] = "find-reducible";
    rep["k"] = k;
    rep["b"] = opt.bound_b;
    auto hit = find_reducible(g, all, k, opt.bound_b, fro);
    rep["reducible_set"] = hit.y;
    rep["source"] = hit.source;
    rep["mode"] = hit.mode == CheckMode::exhaustive ? "exhaustive" : "strategy";
    emit(rep, opt);
    return 0;
}

int cmd_sample(const Options& opt) {
    auto pi = load_problem(opt.input);
    merge_side_files(pi, opt);
    Graph g = to_graph(pi);
    auto lists = to_lists(pi, g);
    FlexParams params{pi.k < 0 ? 4 : pi.k, opt.bound_b};
    FindReducibleOptions fro;
    fro.generic_limit = opt.generic_limit;
    ordered_json rep;
    rep["command"] = "sample";
    rep["seed"] = opt.seed;
    rep["k"] = params.k;
    rep["b"] = params.b;
    rep["epsilon"] = params.epsilon_string();
    rep["delta"] = params.delta_string();
    auto [phi, plan] = sample_flexible(g, lists, params, opt.seed, fro);
    rep["plan"] = json_of(plan);
    rep["coloring"] = json_of(phi);
    if (opt.samples > 1) {
        auto marg = estimate_marginals(g, lists, params, opt.samples, opt.seed, opt.confidence, fro);
        rep["marginals"] = json_of(marg);
    }
    emit(rep, opt);
    return 0;
}

int cmd_satisfy(const Options& opt) {
    auto pi = load_problem(opt.input);
    merge_side_files(pi, opt);
    Graph g = to_graph(pi);
    auto lists = to_lists(pi, g);
    FlexParams params{pi.k < 0 ? 4 : pi.k, opt.bound_b};
    FindReducibleOptions fro;
    fro.generic_limit = opt.generic_limit;
    ordered_json rep;
    rep["command"] = "satisfy";
    rep["seed"] = opt.seed;
    rep["requests"] = pi.requests.size();
    auto res = satisfy_weighted_request(g, lists, params, pi.requests, opt.samples, opt.seed, fro);
    rep["result"] = json_of(res);
    emit(rep, opt);
    return 0;
}

int cmd_discharge(const Options& opt) {
    auto pi = load_problem(opt.input);
    Graph g = to_graph(pi);
    if (pi.rotation.empty() && g.edge_count() > 0)
        throw std::runtime_error("discharge requires R lines (an embedding)");
    auto rot = to_rotation(pi, g);
    auto pg = trace_faces(g, rot);
    ordered_json rep;
    rep["command"] = "discharge";
    rep["euler_ok"] = validate_planarity(pg);
    auto res = discharge(pg);
    auto aud = audit(pg, res);
    rep["report"] = json_of(res, aud);
    if (opt.pair_reducibility &&
        (!aud.negatives.empty() || !aud.counter_cap_violations.empty())) {
        // violations in a supposedly config-free host: hunt for the reducible
        // configuration that explains them
        VertexSet all(g.n);
        std::iota(all.begin(), all.end(), 0);
        try {
            FindReducibleOptions fro;
            fro.generic_limit = opt.generic_limit;
            auto hit = find_reducible(g, all, 4, opt.bound_b, fro);
            ordered_json w;
            w["reducible_set"] = hit.y;
            w["source"] = hit.source;
            rep["reducible_witness"] = std::move(w);
        } catch (const hypothesis_violated&) {
            rep["reducible_witness"] = "none within budget";
        }
    }
    emit(rep, opt);
    if (!aud.conserved) {
        std::cerr << "flexcol: internal error: charge conservation failed\n";
        return kExitInternal;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list-coloring flexibility toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", opt.input, "input file");
        if (needs_input) in->required();
        sub->add_option("--format", opt.format, "output format: json|text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", opt.seed, "random seed (echoed in reports)");
        sub->add_option("--limit-size", opt.limit_size, "exhaustive-mode vertex budget");
        sub->add_option("--limit-enum", opt.limit_enum, "exhaustive-mode list-system budget");
    };

    auto* check = app.add_subcommand("check-class", "scan for 4-/5-cycles and check the embedding");
    add_common(check, true);

    auto* color = app.add_subcommand("color", "decide list-colorability");
    add_common(color, true);
    color->add_option("--lists", opt.lists_path, "side file with L lines");

    auto* certify = app.add_subcommand("certify", "certify reducibility of a configuration");
    add_common(certify, false);
    certify->add_option("--entry", opt.entry, "catalog entry id (instead of --input)");
    certify->add_option("--mode", opt.mode, "exhaustive|strategy|auto")
        ->check(CLI::IsMember({"exhaustive", "strategy", "auto"}));

    auto* findr = app.add_subcommand("find-reducible", "find a reducible configuration in a host");
    add_common(findr, true);
    findr->add_option("--generic-limit", opt.generic_limit, "generic search size limit");
    findr->add_option("--bound-b", opt.bound_b, "reducible-size parameter b");

    auto* sample = app.add_subcommand("sample", "draw colorings from the recursive distribution");
    add_common(sample, true);
    sample->add_option("--lists", opt.lists_path, "side file with L lines");
    sample->add_option("--samples", opt.samples, "Monte Carlo sample count");
    sample->add_option("--confidence", opt.confidence, "one-sided confidence level");
    sample->add_option("--generic-limit", opt.generic_limit, "generic search size limit");
    sample->add_option("--bound-b", opt.bound_b, "reducible-size parameter b");

    auto* satisfy = app.add_subcommand("satisfy", "maximize satisfied request weight");
    add_common(satisfy, true);
    satisfy->add_option("--lists", opt.lists_path, "side file with L lines");
    satisfy->add_option("--request", opt.request_path, "side file with REQ lines");
    satisfy->add_option("--samples", opt.samples, "Monte Carlo sample count");
    satisfy->add_option("--generic-limit", opt.generic_limit, "generic search size limit");
    satisfy->add_option("--bound-b", opt.bound_b, "reducible-size parameter b");

    auto* discharge = app.add_subcommand("discharge", "apply the charge rules and audit them");
    add_common(discharge, true);
    discharge->add_flag("--pair-reducibility", opt.pair_reducibility,
                        "on audit violations, search for an explaining reducible configuration");
    discharge->add_option("--generic-limit", opt.generic_limit, "generic search size limit");
    discharge->add_option("--bound-b", opt.bound_b, "reducible-size parameter b");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check_class(opt);
        if (color->parsed()) return cmd_color(opt);
        if (certify->parsed()) {
            if (opt.entry.empty() && opt.input.empty()) {
                std::cerr << "flexcol: certify needs --input or --entry\n";
                return kExitInput;
            }
            return cmd_certify(opt);
        }
        if (findr->parsed()) return cmd_find_reducible(opt);
        if (sample->parsed()) return cmd_sample(opt);
        if (satisfy->parsed()) return cmd_satisfy(opt);
        if (discharge->parsed()) return cmd_discharge(opt);
    } catch (const parse_error& e) {
        std::cerr << "flexcol: " << (opt.input.empty() ? "" : opt.input + ": ") << e.what() << "\n";
        return kExitInput;
    } catch (const hypothesis_violated& e) {
        std::cerr << "flexcol: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "flexcol: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "flexcol: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "flexcol: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}

#pragma once

// JSON views of engine results. Keys keep insertion order (ordered_json) and
// nothing time- or path-dependent is emitted, so identical inputs and seeds
// produce byte-identical reports.

#include <json.hpp>

#include "flexcol/discharging.hpp"
#include "flexcol/flex_sampler.hpp"
#include "flexcol/io.hpp"
#include "flexcol/reducibility.hpp"

namespace flexcol {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_of(const Rational& r) { return r.str(); }

// VertexSet and Coloring are both plain int vectors; one view covers both.
inline ordered_json json_of(const VertexSet& s) { return ordered_json(s); }

inline ordered_json json_of(const StrategyProof& proof) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : proof) {
        ordered_json step;
        switch (s.kind) {
            case StrategyStep::Kind::precolor_set: step["op"] = "precolor_set"; break;
            case StrategyStep::Kind::degree_block: step["op"] = "degree_block"; break;
            case StrategyStep::Kind::greedy: step["op"] = "greedy"; break;
        }
        step["vertices"] = s.vertices;
        if (s.kind == StrategyStep::Kind::degree_block) step["slack_vertex"] = s.slack_vertex;
        steps.push_back(std::move(step));
    }
    return steps;
}

inline const char* status_name(CheckStatus st) {
    switch (st) {
        case CheckStatus::certified: return "certified";
        case CheckStatus::refuted: return "refuted";
        default: return "budget_exceeded";
    }
}

inline ordered_json json_of(const ListAssignment& lists) {
    ordered_json out = ordered_json::array();
    for (const auto& l : lists) out.push_back(l);
    return out;
}

inline ordered_json json_of(const CheckResult& res) {
    ordered_json out;
    out["status"] = status_name(res.status);
    out["mode"] = res.certificate.mode == CheckMode::exhaustive ? "exhaustive" : "strategy";
    out["independence_scope"] = res.certificate.independence_scope;
    out["systems_checked"] = res.total_systems;
    if (res.status == CheckStatus::certified) {
        ordered_json fix = ordered_json::array();
        for (const auto& c : res.certificate.fix_cases) {
            ordered_json e;
            e["pinned"] = c.pinned;
            e["systems_checked"] = c.systems_checked;
            if (!c.proof.empty()) e["proof"] = json_of(c.proof);
            fix.push_back(std::move(e));
        }
        ordered_json forb = ordered_json::array();
        for (const auto& c : res.certificate.forb_cases) {
            ordered_json e;
            e["set"] = c.s;
            e["systems_checked"] = c.systems_checked;
            if (!c.proof.empty()) e["proof"] = json_of(c.proof);
            forb.push_back(std::move(e));
        }
        out["fix_cases"] = std::move(fix);
        out["forb_cases"] = std::move(forb);
    }
    if (res.refutation) {
        ordered_json r;
        r["part"] = res.refutation->part;
        if (res.refutation->part == "fix") r["pinned"] = res.refutation->pinned;
        else r["set"] = res.refutation->s;
        r["lists"] = json_of(res.refutation->lists);
        out["counterexample"] = std::move(r);
    }
    return out;
}

inline ordered_json json_of(const PeelPlan& plan) {
    ordered_json levels = ordered_json::array();
    for (const auto& l : plan.levels) {
        ordered_json e;
        e["active"] = l.z;
        e["peeled"] = l.y;
        e["source"] = l.source;
        e["mode"] = l.mode == CheckMode::exhaustive ? "exhaustive" : "strategy";
        levels.push_back(std::move(e));
    }
    ordered_json out;
    out["levels"] = std::move(levels);
    out["effective_b"] = plan.effective_b();
    return out;
}

inline ordered_json json_of(const MarginalReport& rep) {
    ordered_json out;
    out["samples"] = rep.samples;
    out["confidence"] = rep.confidence;
    out["effective_b"] = rep.effective_b;
    out["epsilon_effective"] = rep.epsilon_effective;
    out["epsilon_effective_approx"] = rep.epsilon_effective_approx;
    out["all_clear"] = rep.all_clear;
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json j;
        j["v"] = e.v;
        j["c"] = e.c;
        j["hits"] = e.hits;
        j["estimate"] = e.estimate;
        j["lower_bound"] = e.lower_bound;
        j["clears_epsilon"] = e.clears_epsilon;
        j["empirically_zero"] = e.empirically_zero;
        entries.push_back(std::move(j));
    }
    out["marginals"] = std::move(entries);
    return out;
}

inline ordered_json json_of(const AvoidanceReport& rep) {
    ordered_json out;
    out["samples"] = rep.samples;
    out["hits"] = rep.hits;
    out["estimate"] = rep.estimate;
    out["lower_bound"] = rep.lower_bound;
    out["confidence"] = rep.confidence;
    out["effective_b"] = rep.effective_b;
    out["delta_power"] = rep.delta_power;
    out["delta_power_approx"] = rep.delta_power_approx;
    out["clears_bound"] = rep.clears_bound;
    return out;
}

inline ordered_json json_of(const SatisfactionReport& rep) {
    ordered_json out;
    out["samples"] = rep.samples;
    out["total_weight"] = rep.total_weight;
    out["satisfied_weight"] = rep.satisfied_weight;
    if (rep.total_weight > 0)
        out["ratio"] = rep.ratio;
    else
        out["ratio"] = "vacuous";
    out["effective_b"] = rep.effective_b;
    out["epsilon_effective"] = rep.epsilon_effective;
    out["epsilon_effective_approx"] = rep.epsilon_effective_approx;
    out["clears_epsilon"] = rep.clears_epsilon;
    out["best_coloring"] = json_of(rep.best);
    return out;
}

inline ordered_json json_of(const Taxonomy& tax) {
    ordered_json vertices = ordered_json::array();
    for (const auto& tv : tax.vertex) {
        ordered_json v;
        v["degree"] = tv.degree;
        v["f3"] = tv.f3;
        v["f33"] = tv.f33;
        v["f34"] = tv.f34;
        v["f3b"] = tv.f3b;
        v["f4b"] = tv.f4b;
        v["fbb"] = tv.fbb;
        v["bad"] = tv.bad;
        v["vice"] = tv.vice;
        v["dangerous"] = tv.dangerous;
        vertices.push_back(std::move(v));
    }
    ordered_json faces = ordered_json::array();
    for (const auto& tf : tax.face) {
        ordered_json f;
        f["degree"] = tf.degree;
        f["triangle"] = tf.triangle;
        f["poor"] = tf.poor;
        faces.push_back(std::move(f));
    }
    ordered_json out;
    out["vertices"] = std::move(vertices);
    out["faces"] = std::move(faces);
    return out;
}

inline ordered_json json_of(const DischargeResult& res, const AuditReport& aud) {
    ordered_json out;
    out["taxonomy"] = json_of(res.taxonomy);
    auto charges = [](const std::vector<Rational>& xs) {
        ordered_json a = ordered_json::array();
        for (const auto& x : xs) a.push_back(x.str());
        return a;
    };
    out["vertex_initial"] = charges(res.vertex_initial);
    out["vertex_after_phase1"] = charges(res.vertex_after_phase1);
    out["vertex_final"] = charges(res.vertex_final);
    out["face_initial"] = charges(res.face_initial);
    out["face_after_phase1"] = charges(res.face_after_phase1);
    out["face_final"] = charges(res.face_final);
    ordered_json transfers = ordered_json::array();
    for (const auto& t : res.transfers) {
        ordered_json j;
        j["rule"] = t.rule;
        j["from"] = t.from;
        j["from_kind"] = t.from_is_face ? "face" : "vertex";
        j["face"] = t.face;
        j["amount"] = t.amount.str();
        transfers.push_back(std::move(j));
    }
    out["transfers"] = std::move(transfers);
    ordered_json diags = ordered_json::array();
    for (const auto& d : res.diagnostics) {
        ordered_json j;
        j["kind"] = d.kind;
        j["face"] = d.face;
        j["vertex"] = d.vertex;
        j["detail"] = d.detail;
        diags.push_back(std::move(j));
    }
    out["diagnostics"] = std::move(diags);
    ordered_json audit_j;
    audit_j["expected_total"] = aud.expected_total.str();
    audit_j["total_initial"] = aud.total_initial.str();
    audit_j["total_after_phase1"] = aud.total_phase1.str();
    audit_j["total_final"] = aud.total_final.str();
    audit_j["conserved"] = aud.conserved;
    ordered_json negs = ordered_json::array();
    for (const auto& [kind, id] : aud.negatives) {
        ordered_json j;
        j["kind"] = kind;
        j["id"] = id;
        negs.push_back(std::move(j));
    }
    audit_j["negatives"] = std::move(negs);
    audit_j["counter_cap_violations"] = aud.counter_cap_violations;
    audit_j["phase1_floor_violations"] = aud.phase1_floor_violations;
    audit_j["gap_count"] = aud.gap_count;
    audit_j["overlap_count"] = aud.overlap_count;
    out["audit"] = std::move(audit_j);
    return out;
}

}  // namespace flexcol

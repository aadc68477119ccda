#pragma once

// Charge bookkeeping on plane graphs.
//
// Every vertex starts with d(v) - 2 and every face with -2; the grand total
// is -2(V - E + F), i.e. -4 per connected component. Phase one moves charge
// from vertices to their incident faces (rules R0-R6 plus the blanket rule
// R1); phase two tops up poor triangles from big faces (R7) and from nearby
// "well" vertices along nice paths (R8). Amounts are exact rationals and
// every move is logged, so audits can replay conservation and the per-shape
// arithmetic exactly.
//
// Vertex taxonomy (all on the embedded host):
//   f3    incident 3-faces            f33  (3,3,v) faces    f34  (3,4,v) faces
//   f3b/f4b/fbb  faces shared with bad vertices of degree >= 5
//   bad:       4 <= d <= 12, f33 + f34 = floor((d-2)/2), f3 = floor(d/2)
//   vice:      d = 4 with two incident triangles
//   dangerous: 5 <= d <= 12 with f33 = floor((d-3)/2)
//   well:      charge after phase one is at least 1/12
// A triangle is poor when its degrees are (3,4,4) and both 4-vertices are
// vice (those faces end phase one at -1/3).
//
// Corners that match no clause (degree <= 2 anywhere, or a 4+-vertex on a
// 4- or 5-face) yield "gap" diagnostics; corners matching two clauses whose
// documented tie-break is not purely lexicographic yield "overlap"
// diagnostics. Both are reported, never fatal.

#include <array>
#include <map>
#include <set>
#include <string>

#include "flexcol/plane_graph.hpp"
#include "flexcol/rational.hpp"

namespace flexcol {

struct VertexTaxonomy {
    int degree = 0;
    int f3 = 0, f33 = 0, f34 = 0, f3b = 0, f4b = 0, fbb = 0;
    bool bad = false, vice = false, dangerous = false;
};

struct FaceTaxonomy {
    int degree = 0;
    bool triangle = false;
    bool poor = false;
    std::array<int, 3> corners{-1, -1, -1};  // sorted, triangles only
};

struct Taxonomy {
    std::vector<VertexTaxonomy> vertex;
    std::vector<FaceTaxonomy> face;
};

inline Taxonomy classify(const PlaneGraph& pg) {
    const Graph& g = pg.g;
    Taxonomy tax;
    tax.vertex.resize(g.n);
    tax.face.resize(pg.faces.size());
    for (int v = 0; v < g.n; ++v) tax.vertex[v].degree = g.degree(v);
    for (size_t fi = 0; fi < pg.faces.size(); ++fi) {
        auto& f = tax.face[fi];
        f.degree = pg.faces[fi].degree();
        f.triangle = f.degree == 3;
        if (f.triangle) {
            f.corners = triangle_of(pg.faces[fi]);
            std::sort(f.corners.begin(), f.corners.end());
        }
    }
    // first pass: pure degree counters
    for (const auto& f : tax.face) {
        if (!f.triangle) continue;
        std::array<int, 3> deg;
        for (int i = 0; i < 3; ++i) deg[i] = g.degree(f.corners[i]);
        for (int i = 0; i < 3; ++i) {
            auto& tv = tax.vertex[f.corners[i]];
            ++tv.f3;
            int a = deg[(i + 1) % 3], b = deg[(i + 2) % 3];
            if (a > b) std::swap(a, b);
            if (a == 3 && b == 3) ++tv.f33;
            if (a == 3 && b == 4) ++tv.f34;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        auto& tv = tax.vertex[v];
        int d = tv.degree;
        tv.bad = d >= 4 && d <= 12 && tv.f33 + tv.f34 == (d - 2) / 2 && tv.f3 == d / 2;
        tv.vice = d == 4 && tv.f3 == 2;
        tv.dangerous = d >= 5 && d <= 12 && tv.f33 == (d - 3) / 2;
    }
    // second pass: counters that look at neighbors' badness (degree >= 5 only)
    for (const auto& f : tax.face) {
        if (!f.triangle) continue;
        for (int i = 0; i < 3; ++i) {
            auto& tv = tax.vertex[f.corners[i]];
            int a = f.corners[(i + 1) % 3], b = f.corners[(i + 2) % 3];
            auto big_bad = [&](int x) { return tax.vertex[x].bad && tax.vertex[x].degree >= 5; };
            int da = g.degree(a), db = g.degree(b);
            if (da > db) {
                std::swap(a, b);
                std::swap(da, db);
            }
            if (da == 3 && big_bad(b)) ++tv.f3b;
            if (da == 4 && big_bad(b)) ++tv.f4b;
            if (big_bad(a) && big_bad(b)) ++tv.fbb;
        }
    }
    for (auto& f : tax.face) {
        if (!f.triangle) continue;
        std::array<int, 3> deg;
        for (int i = 0; i < 3; ++i) deg[i] = g.degree(f.corners[i]);
        std::sort(deg.begin(), deg.end());
        if (deg == std::array<int, 3>{3, 4, 4}) {
            bool both_vice = true;
            for (int c : f.corners)
                if (g.degree(c) == 4 && !tax.vertex[c].vice) both_vice = false;
            f.poor = both_vice;
        }
    }
    return tax;
}

// ---------------------------------------------------------------------------
// Transfers and diagnostics.

struct Transfer {
    std::string rule;
    bool from_is_face = false;
    int from = -1;  // vertex id, or face id when from_is_face
    int face = -1;  // receiving face
    Rational amount;
};

struct Diagnostic {
    std::string kind;  // "gap" or "overlap"
    int face = -1;
    int vertex = -1;
    std::string detail;
};

struct NicePath {
    int from = -1;             // candidate vertex off the face
    std::vector<int> path;     // from -> ... -> endpoint on the face
    int face = -1;
    int kind = 0;              // 1: endpoint degree 3; 2: endpoint degree 4
    std::vector<int> internals() const {
        std::vector<int> out(path.begin() + 1, path.end() - 1);
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct DischargeResult {
    Taxonomy taxonomy;
    std::vector<Rational> vertex_initial, vertex_after_phase1, vertex_final;
    std::vector<Rational> face_initial, face_after_phase1, face_final;
    std::vector<char> well;
    std::vector<int> nice_path_records;  // per vertex: number of (path, poor face) pairs
    std::vector<Transfer> transfers;
    std::vector<Diagnostic> diagnostics;
};

namespace detail {

// true when edge (p, q) lies on a triangle whose third vertex has degree 4
inline bool on_common_444_face(const PlaneGraph& pg, const Taxonomy& tax, int p, int q) {
    for (size_t fi = 0; fi < pg.faces.size(); ++fi) {
        const auto& f = tax.face[fi];
        if (!f.triangle) continue;
        bool has_p = false, has_q = false;
        int third = -1;
        for (int c : f.corners) {
            if (c == p) has_p = true;
            else if (c == q) has_q = true;
            else third = c;
        }
        if (has_p && has_q && third >= 0 && pg.g.degree(p) == 4 && pg.g.degree(q) == 4 &&
            pg.g.degree(third) == 4)
            return true;
    }
    return false;
}

}  // namespace detail

// All nice paths into a poor face: length 1 or 2, starting off the face.
// Kind 1 ends at the face's 3-vertex with degree-3 internals; kind 2 ends at
// a 4-vertex of the face with vice internals, and every consecutive pair of
// degree-4 path vertices must share a (4,4,4)-face.
inline std::vector<NicePath> nice_paths_to(const PlaneGraph& pg, const Taxonomy& tax, int face_id) {
    const auto& f = tax.face[face_id];
    std::vector<NicePath> out;
    if (!f.poor) return out;
    const Graph& g = pg.g;
    std::set<int> on_face(f.corners.begin(), f.corners.end());
    auto pair_ok = [&](int p, int q) {
        if (g.degree(p) != 4 || g.degree(q) != 4) return true;
        return detail::on_common_444_face(pg, tax, p, q);
    };
    for (int u : f.corners) {
        int du = g.degree(u);
        int kind = du == 3 ? 1 : 2;
        for (int x : g.adj[u]) {
            if (on_face.count(x)) continue;
            // length 1: x -> u
            bool ok1 = kind == 1 || pair_ok(x, u);
            if (ok1) out.push_back({x, {x, u}, face_id, kind});
            // length 2: v -> x -> u
            bool internal_ok = kind == 1 ? g.degree(x) == 3 : tax.vertex[x].vice;
            if (!internal_ok) continue;
            for (int v : g.adj[x]) {
                if (v == u || on_face.count(v)) continue;
                if (kind == 2 && !(pair_ok(v, x) && pair_ok(x, u))) continue;
                out.push_back({v, {v, x, u}, face_id, kind});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const NicePath& a, const NicePath& b) {
        return std::tie(a.from, a.path) < std::tie(b.from, b.path);
    });
    return out;
}

namespace detail {

struct Payment {
    std::string rule;
    Rational amount;
    bool gap = false;
};

// Per-corner payment decision for a triangle with corners cs (face-sorted).
// Returns one payment per corner, appending overlap diagnostics when two
// clauses compete beyond the documented lexicographic tie-breaks.
inline std::array<Payment, 3> triangle_payments(const Taxonomy& tax, const std::array<int, 3>& cs,
                                                int face_id, std::vector<Diagnostic>& diags) {
    std::array<Payment, 3> pay;
    std::array<int, 3> deg;
    for (int i = 0; i < 3; ++i) deg[i] = tax.vertex[cs[i]].degree;

    auto set_pay = [&](int idx, const std::string& rule, Rational amount) {
        pay[idx] = {rule, amount, false};
    };

    // degenerate corners first
    bool degenerate = false;
    for (int i = 0; i < 3; ++i)
        if (deg[i] <= 2) {
            pay[i] = {"", Rational(0), true};
            diags.push_back({"gap", face_id, cs[i], "triangle corner of degree <= 2"});
            degenerate = true;
        }
    if (degenerate) {
        for (int i = 0; i < 3; ++i) {
            if (deg[i] <= 2) continue;
            if (deg[i] == 3) set_pay(i, "R1", Rational(1, 3));
            else {
                pay[i] = {"", Rational(0), true};
                diags.push_back({"gap", face_id, cs[i], "no clause for this corner on a degenerate triangle"});
            }
        }
        return pay;
    }

    // R0: a 13+-vertex bankrolls the face
    int huge = -1;
    for (int i = 0; i < 3; ++i)
        if (deg[i] >= 13 && (huge < 0 || deg[i] > deg[huge] || (deg[i] == deg[huge] && cs[i] < cs[huge])))
            huge = i;
    if (huge >= 0) {
        for (int i = 0; i < 3; ++i) {
            if (i == huge) set_pay(i, "R0", Rational(4, 3));
            else if (deg[i] == 3) set_pay(i, "R1", Rational(1, 3));
            else set_pay(i, "R0", Rational(1, 3));
        }
        return pay;
    }

    // all degrees within [3, 12] now
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return deg[a] < deg[b]; });
    int d1 = deg[idx[0]], d2 = deg[idx[1]], d3 = deg[idx[2]];
    auto vice = [&](int i) { return tax.vertex[cs[i]].vice; };
    auto bad = [&](int i) { return tax.vertex[cs[i]].bad; };
    auto dangerous = [&](int i) { return tax.vertex[cs[i]].dangerous; };

    for (int i = 0; i < 3; ++i)
        if (deg[i] == 3) set_pay(i, "R1", Rational(1, 3));

    if (d1 == 3 && d2 == 3) {
        if (d3 >= 5) {
            set_pay(idx[2], "R3", Rational(4, 3));
        } else if (d3 == 4) {
            // (3,3,4): no clause — a worst face at a 4-vertex cannot occur in
            // hosts free of the catalog's reducible configurations
            pay[idx[2]] = {"", Rational(0), true};
            diags.push_back({"gap", face_id, cs[idx[2]],
                             "4-vertex on a (3,3,4) face: shape excluded by reducibility"});
        }
    } else if (d1 == 3 && d2 == 4 && d3 == 4) {
        int a = idx[1], b = idx[2];
        if (cs[a] > cs[b]) std::swap(a, b);
        bool a_nonvice = !vice(a), b_nonvice = !vice(b);
        if (a_nonvice || b_nonvice) {
            int payer = a_nonvice ? a : b;  // lex-least non-vice 4-vertex
            int other = payer == a ? b : a;
            set_pay(payer, "R2.1", Rational(1));
            set_pay(other, "R2.1", Rational(2, 3));
        } else {
            set_pay(a, "R2.3", Rational(2, 3));
            set_pay(b, "R2.3", Rational(2, 3));
        }
    } else if (d1 == 3 && d2 == 4) {  // (3,4,5..12)
        set_pay(idx[1], "R2.3", Rational(2, 3));
        set_pay(idx[2], "R3", Rational(1));
    } else if (d1 == 3) {  // (3,5+,5+)
        int a = idx[1], b = idx[2];
        if (cs[a] > cs[b]) std::swap(a, b);
        if (bad(a) && bad(b)) {
            diags.push_back({"overlap", face_id, cs[a],
                             "two bad 5+-vertices on a (3,x,y) face; lexicographic payer chosen"});
            set_pay(a, "R4.1", Rational(2, 3));
            set_pay(b, "R4.1", Rational(1));
        } else if (bad(a) || bad(b)) {
            set_pay(bad(a) ? a : b, "R4.1", Rational(2, 3));
            set_pay(bad(a) ? b : a, "R4.1", Rational(1));
        } else {
            set_pay(a, "R4.2", Rational(5, 6));
            set_pay(b, "R4.2", Rational(5, 6));
        }
    } else if (d1 == 4 && d2 == 4 && d3 == 4) {
        for (int i = 0; i < 3; ++i) set_pay(i, "R2.3", Rational(2, 3));
    } else if (d1 == 4 && d2 == 4) {  // (4,4,5..12)
        int a = idx[0], b = idx[1];
        if (cs[a] > cs[b]) std::swap(a, b);
        bool fired = false;
        for (auto [p, o] : {std::pair{a, b}, std::pair{b, a}}) {
            if (bad(p) && !vice(o)) {
                set_pay(p, "R2.2", Rational(1, 2));
                set_pay(o, "R2.2", Rational(5, 6));
                fired = true;
                break;
            }
        }
        if (!fired) {
            set_pay(a, "R2.3", Rational(2, 3));
            set_pay(b, "R2.3", Rational(2, 3));
        }
        set_pay(idx[2], "R3", Rational(2) - pay[a].amount - pay[b].amount);
    } else if (d1 == 4) {  // (4,5+,5+)
        set_pay(idx[0], "R5", Rational(2, 3));
        int a = idx[1], b = idx[2];
        if (cs[a] > cs[b]) std::swap(a, b);
        if (bad(a) && bad(b)) {
            diags.push_back({"overlap", face_id, cs[a],
                             "two bad 5+-vertices on a (4,x,y) face; lexicographic payer chosen"});
            set_pay(a, "R5.1", Rational(1, 2));
            set_pay(b, "R5.1", Rational(5, 6));
        } else if (bad(a) || bad(b)) {
            set_pay(bad(a) ? a : b, "R5.1", Rational(1, 2));
            set_pay(bad(a) ? b : a, "R5.1", Rational(5, 6));
        } else {
            set_pay(a, "R5.2", Rational(2, 3));
            set_pay(b, "R5.2", Rational(2, 3));
        }
    } else {  // (5+,5+,5+)
        std::vector<int> bd;
        for (int i = 0; i < 3; ++i)
            if (bad(i) && dangerous(i)) bd.push_back(i);
        if (bd.size() == 1) {
            for (int i = 0; i < 3; ++i)
                set_pay(i, "R6.1", i == bd[0] ? Rational(1, 2) : Rational(3, 4));
        } else if (bd.size() == 2) {
            for (int i = 0; i < 3; ++i)
                set_pay(i, "R6.2",
                        std::find(bd.begin(), bd.end(), i) != bd.end() ? Rational(1, 2) : Rational(1));
        } else {
            for (int i = 0; i < 3; ++i) set_pay(i, "R6.3", Rational(2, 3));
        }
    }
    return pay;
}

}  // namespace detail

inline DischargeResult discharge(const PlaneGraph& pg) {
    const Graph& g = pg.g;
    DischargeResult res;
    res.taxonomy = classify(pg);
    const Taxonomy& tax = res.taxonomy;
    int nf = static_cast<int>(pg.faces.size());

    res.vertex_initial.resize(g.n);
    for (int v = 0; v < g.n; ++v) res.vertex_initial[v] = Rational(g.degree(v) - 2);
    res.face_initial.assign(nf, Rational(-2));
    res.vertex_after_phase1 = res.vertex_initial;
    res.face_after_phase1 = res.face_initial;

    auto move_v2f = [&](const std::string& rule, int v, int f, Rational amount) {
        if (amount == Rational(0)) return;
        res.vertex_after_phase1[v] = res.vertex_after_phase1[v] - amount;
        res.face_after_phase1[f] = res.face_after_phase1[f] + amount;
        res.transfers.push_back({rule, false, v, f, amount});
    };

    // phase one, per face
    for (int fi = 0; fi < nf; ++fi) {
        const auto& ft = tax.face[fi];
        if (ft.triangle) {
            auto pay = detail::triangle_payments(tax, ft.corners, fi, res.diagnostics);
            for (int i = 0; i < 3; ++i)
                if (!pay[i].gap) move_v2f(pay[i].rule, ft.corners[i], fi, pay[i].amount);
            continue;
        }
        // non-triangles: walk corners, with multiplicity
        for (int v : pg.faces[fi].walk) {
            int d = g.degree(v);
            if (d <= 2) {
                res.diagnostics.push_back({"gap", fi, v, "corner of degree <= 2"});
            } else if (d == 3) {
                move_v2f("R1", v, fi, Rational(1, 3));
            } else if (ft.degree >= 6) {
                move_v2f("R1", v, fi, Rational(1, 3));
            } else {
                res.diagnostics.push_back(
                    {"gap", fi, v, "4+-vertex on a face of degree " + std::to_string(ft.degree)});
            }
        }
    }

    res.vertex_final = res.vertex_after_phase1;
    res.face_final = res.face_after_phase1;
    res.well.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        res.well[v] = res.vertex_after_phase1[v] >= Rational(1, 12) ? 1 : 0;

    auto move_f2f = [&](const std::string& rule, int from, int to, Rational amount) {
        if (amount == Rational(0)) return;
        res.face_final[from] = res.face_final[from] - amount;
        res.face_final[to] = res.face_final[to] + amount;
        res.transfers.push_back({rule, true, from, to, amount});
    };

    // R7: big faces feed edge-adjacent poor triangles
    std::map<int, std::set<int>> poor_neighbors;  // big face -> poor faces
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < pg.rot[v].size(); ++i) {
            int f1 = pg.side_of[v][i];
            int u = pg.rot[v][i];
            int j = -1;
            for (size_t t = 0; t < pg.rot[u].size(); ++t)
                if (pg.rot[u][t] == v) j = static_cast<int>(t);
            int f2 = pg.side_of[u][j];
            if (f1 == f2) continue;
            for (auto [big, small] : {std::pair{f1, f2}, std::pair{f2, f1}})
                if (tax.face[big].degree >= 7 && tax.face[small].poor)
                    poor_neighbors[big].insert(small);
        }
    std::map<int, Rational> r7_income;
    for (const auto& [big, poors] : poor_neighbors) {
        Rational share =
            Rational(tax.face[big].degree - 6) / Rational(3 * static_cast<std::int64_t>(poors.size()));
        for (int p : poors) {
            move_f2f("R7", big, p, share);
            r7_income[p] = r7_income.count(p) ? r7_income[p] + share : share;
        }
    }

    // R8: well vertices along nice paths top up still-needy poor faces
    res.nice_path_records.assign(g.n, 0);
    std::vector<std::vector<NicePath>> paths_per_face(nf);
    for (int fi = 0; fi < nf; ++fi) {
        if (!tax.face[fi].poor) continue;
        paths_per_face[fi] = nice_paths_to(pg, tax, fi);
        for (const auto& p : paths_per_face[fi]) ++res.nice_path_records[p.from];
    }
    auto move_v2f_final = [&](const std::string& rule, int v, int f, Rational amount) {
        res.vertex_final[v] = res.vertex_final[v] - amount;
        res.face_final[f] = res.face_final[f] + amount;
        res.transfers.push_back({rule, false, v, f, amount});
    };
    for (int fi = 0; fi < nf; ++fi) {
        if (!tax.face[fi].poor) continue;
        Rational income = r7_income.count(fi) ? r7_income[fi] : Rational(0);
        if (income >= Rational(1, 3)) continue;
        // group eligible well vertices by the internal-vertex set of their paths
        std::map<std::vector<int>, std::set<int>> groups;
        for (const auto& p : paths_per_face[fi])
            if (res.well[p.from]) groups[p.internals()].insert(p.from);
        if (groups.empty()) continue;
        const auto& chosen = groups.begin()->second;  // lex-least internal set
        int t = std::min<int>(2, static_cast<int>(chosen.size()));
        auto it = chosen.begin();
        for (int i = 0; i < t; ++i, ++it)
            move_v2f_final("R8", *it, fi, Rational(1, 6 * static_cast<std::int64_t>(t)));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Audit: conservation at every stage, negative elements, and the structural
// spot checks (counter cap for 4+-vertices; phase-one floor for non-dangerous
// 5+-vertices). Violations are reported, never thrown.

struct AuditReport {
    Rational expected_total;  // -2 (V - E + F)
    Rational total_initial, total_phase1, total_final;
    bool conserved = false;
    std::vector<std::pair<std::string, int>> negatives;       // ("vertex"/"face", id), final stage
    std::vector<int> counter_cap_violations;                  // vertices
    std::vector<int> phase1_floor_violations;                 // non-dangerous 5+-vertices below 1/6
    int gap_count = 0, overlap_count = 0;
};

inline AuditReport audit(const PlaneGraph& pg, const DischargeResult& res) {
    AuditReport rep;
    rep.expected_total =
        Rational(-2) * Rational(pg.g.n - pg.g.edge_count() + static_cast<int>(pg.faces.size()));
    auto sum = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s(0);
        for (const auto& x : a) s = s + x;
        for (const auto& x : b) s = s + x;
        return s;
    };
    rep.total_initial = sum(res.vertex_initial, res.face_initial);
    rep.total_phase1 = sum(res.vertex_after_phase1, res.face_after_phase1);
    rep.total_final = sum(res.vertex_final, res.face_final);
    rep.conserved = rep.total_initial == rep.expected_total &&
                    rep.total_phase1 == rep.expected_total && rep.total_final == rep.expected_total;
    for (int v = 0; v < pg.g.n; ++v)
        if (res.vertex_final[v] < Rational(0)) rep.negatives.emplace_back("vertex", v);
    for (size_t f = 0; f < res.face_final.size(); ++f)
        if (res.face_final[f] < Rational(0)) rep.negatives.emplace_back("face", static_cast<int>(f));
    for (int v = 0; v < pg.g.n; ++v) {
        const auto& tv = res.taxonomy.vertex[v];
        if (tv.degree >= 4) {
            int cap = tv.degree / 2 - 1;
            if (tv.f33 + tv.f34 + tv.f3b + tv.fbb > cap) rep.counter_cap_violations.push_back(v);
        }
        if (tv.degree >= 5 && !tv.dangerous && res.vertex_after_phase1[v] < Rational(1, 6))
            rep.phase1_floor_violations.push_back(v);
    }
    for (const auto& d : res.diagnostics) {
        if (d.kind == "gap") ++rep.gap_count;
        if (d.kind == "overlap") ++rep.overlap_count;
    }
    return rep;
}

}  // namespace flexcol

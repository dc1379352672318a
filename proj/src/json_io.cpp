#include "igr/json_io.hpp"

namespace igr {

Json to_json(const GLWeight& w) { return Json(w.entries()); }

Json to_json(const SpWeight& w) { return Json(w.entries()); }

Json to_json(const TwistedBundle& b) {
    return Json{{"weight", to_json(b.display_weight())}, {"twist", b.display_twist()}};
}

Json to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& [w, mult] : d.terms)
        terms.push_back(Json{{"weight", to_json(w)}, {"multiplicity", mult}});
    return Json{{"rank", d.rank}, {"terms", terms}};
}

Json to_json(const GradedDim& g) {
    Json out = Json::object();
    for (const auto& [deg, dim] : g.dims) out[std::to_string(deg)] = dim;
    return out;
}

Json to_json(const CohomologyResult& r) {
    if (r.zero) return Json{{"zero", true}};
    return Json{{"degree", r.degree}, {"rep", to_json(r.rep)}, {"dim", r.dim}};
}

Json to_json(const E1Page& page) {
    Json rows = Json::array();
    for (const auto& [pq, entries] : page.cells)
        for (const auto& e : entries)
            rows.push_back(Json{{"p", pq.first},
                                {"q", pq.second},
                                {"rep", to_json(e.rep)},
                                {"mult", e.mult},
                                {"dim", e.mult * dim_sp(e.rep)}});
    return rows;
}

Json to_json(const CohomologyVerdict& v) {
    Json out{{"verdict", to_string(v.verdict)}};
    if (v.verdict == Verdict::Exact) out["dims"] = to_json(v.graded);
    if (v.verdict == Verdict::Acyclic) out["zero"] = true;
    if (v.verdict == Verdict::Indeterminate) out["page"] = to_json(v.page);
    out["euler"] = v.euler();
    return out;
}

Json to_json(const ExtResult& r) {
    Json out{{"verdict", to_string(r.verdict)}};
    if (r.verdict == Verdict::Exact) out["dims"] = to_json(r.graded);
    if (r.verdict == Verdict::Acyclic) out["zero"] = true;
    out["euler"] = r.euler;
    return out;
}

Json to_json(const PairResult& p) {
    Json out{{"source", p.j}, {"target", p.i}, {"twist", p.twist},
             {"verdict", to_string(p.verdict)}, {"expected", p.expected}, {"ok", p.ok}};
    if (p.verdict == Verdict::Exact) out["dims"] = to_json(p.graded);
    out["euler"] = p.euler;
    return out;
}

Json to_json(const CheckReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    return Json{{"schema", "check-report/1"},
                {"kind", r.kind},
                {"collection", r.collection},
                {"index", r.index_w},
                {"pass", r.pass},
                {"indeterminate", r.any_indeterminate},
                {"pairs", pairs}};
}

Json to_json(const FormalComplex& c) {
    Json degrees = Json::array();
    for (const auto& [d, slot] : c.terms) {
        Json terms = Json::array();
        for (const auto& [b, mult] : slot)
            terms.push_back(Json{{"bundle", b.canonical_str()},
                                 {"weight", to_json(b.absorbed())},
                                 {"mult", mult}});
        degrees.push_back(Json{{"degree", d}, {"terms", terms}});
    }
    return Json{{"schema", "complex/1"}, {"ambient", c.ambient}, {"degrees", degrees}};
}

Json to_json(const TableVerdict& v) {
    Json out{{"verdict", to_string(v.verdict)}};
    if (v.verdict == Verdict::Exact) out["dims"] = to_json(v.graded);
    out["euler"] = v.euler;
    return out;
}

Json to_json(const Monomial& m) { return Json(m.str()); }

Json to_json(const StepRecord& r) {
    Json out{{"rule", to_string(r.rule)}};
    if (r.rule == RuleKind::Staircase || r.rule == RuleKind::Chain) {
        out["a"] = r.a;
        out["b"] = r.b;
        out["c"] = r.c;
        out["l"] = r.l;
    }
    if (r.rule == RuleKind::Symplectic) {
        out["i"] = r.i;
        out["j"] = r.j;
        out["l"] = r.l;
    }
    Json prem = Json::array(), adds = Json::array();
    for (const auto& m : r.premises) prem.push_back(m.str());
    for (const auto& m : r.additions) adds.push_back(m.str());
    if (r.rule != RuleKind::Seed) out["premises"] = prem;
    out["additions"] = adds;
    return out;
}

Json to_json(const std::vector<StepRecord>& log) {
    Json out = Json::array();
    for (const auto& r : log) out.push_back(to_json(r));
    return out;
}

Json to_json(const ReplayReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json notes = Json::array();
        for (const auto& n : s.notes) notes.push_back(n);
        steps.push_back(Json{{"step", s.step}, {"ok", s.ok}, {"notes", notes}});
    }
    return Json{{"schema", "replay-report/1"},
                {"ok", r.ok},
                {"final_check", r.final_ok},
                {"covered", r.state.present().size()},
                {"steps", steps}};
}

Json to_json(const SpaceInvariants& s) {
    Json out{{"dimension", s.dimension}, {"index", s.index}, {"k0_rank", s.k0_rank}};
    if (s.lefschetz_length)
        out["lefschetz_length"] = *s.lefschetz_length;
    else
        out["lefschetz_length"] = nullptr;
    return out;
}

}  // namespace igr

#include "domcolor/json_io.hpp"

namespace domcolor {
namespace {

Json optional_coloring(const std::optional<Coloring>& c) {
    return c ? to_json(*c) : Json(nullptr);
}

}  // namespace

Json vertex_set_json(VertexSet s) {
    Json out = Json::array();
    for (Vertex v : members(s)) out.push_back(v);
    return out;
}

Json to_json(const Coloring& c) { return c.normalized().to_line(); }

Json to_json(const ViolationReport& r) {
    Json pairs = Json::array();
    for (auto [u, v] : r.proper_violations) pairs.push_back({u, v});
    Json out;
    out["valid"] = r.empty();
    out["proper_violations"] = std::move(pairs);
    out["undominating_vertices"] = r.undominating_vertices;
    out["undominated_classes"] = r.undominated_classes;
    return out;
}

Json to_json(const ColoringResult& r) {
    Json out;
    out["status"] = to_string(r.status);
    // An undecided search reports where it stopped, never a value.
    out["value"] = r.optimal() ? Json(r.value) : Json(nullptr);
    if (!r.optimal()) out["undecided_at"] = r.value;
    out["witness"] = optional_coloring(r.witness);
    out["nodes"] = r.nodes;
    return out;
}

Json to_json(const InvariantReport& r) {
    Json out;
    out["status"] = to_string(r.status);
    // Optimal solves always carry a witness; without one the value is undecided.
    auto value = [](int v, const std::optional<Coloring>& w) { return w ? Json(v) : Json(nullptr); };
    out["chi"] = value(r.chi, r.chi_witness);
    out["gamma"] = r.gamma;
    out["chi_d"] = value(r.chi_d, r.chi_d_witness);
    out["chi_dom"] = value(r.chi_dom, r.chi_dom_witness);
    out["chi_dd"] = value(r.chi_dd, r.chi_dd_witness);
    Json w;
    w["chi"] = optional_coloring(r.chi_witness);
    w["gamma"] = vertex_set_json(r.gamma_witness);
    w["chi_d"] = optional_coloring(r.chi_d_witness);
    w["chi_dom"] = optional_coloring(r.chi_dom_witness);
    w["chi_dd"] = optional_coloring(r.chi_dd_witness);
    out["witnesses"] = std::move(w);
    Json nodes;
    nodes["chi"] = r.stats.chi_nodes;
    nodes["chi_d"] = r.stats.chi_d_nodes;
    nodes["chi_dom"] = r.stats.chi_dom_nodes;
    nodes["chi_dd"] = r.stats.chi_dd_nodes;
    out["nodes"] = std::move(nodes);
    return out;
}

Json to_json(const BoundRecord& r) {
    Json out;
    out["name"] = r.name;
    out["relation"] = r.relation;
    out["lhs"] = r.lhs;
    out["rhs"] = r.rhs;
    out["holds"] = r.holds;
    out["applicable"] = r.applicable;
    return out;
}

Json to_json(const BoundsReport& r) {
    Json out;
    out["invariants"] = to_json(r.invariants);
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    out["bounds"] = std::move(records);
    out["consistent"] = r.consistent();
    return out;
}

Json to_json(const SurveyReport& r) {
    Json out;
    out["n_min"] = r.n_min;
    out["n_max"] = r.n_max;
    out["graphs"] = r.graphs;
    out["skipped"] = r.skipped;
    out["inconclusive"] = r.inconclusive;
    out["complete"] = r.complete;
    Json tallies = Json::array();
    for (const auto& t : r.tallies) {
        Json j;
        j["check"] = t.check;
        j["applicable"] = t.applicable;
        j["passed"] = t.passed;
        j["failed"] = t.failed;
        tallies.push_back(std::move(j));
    }
    out["checks"] = std::move(tallies);
    Json cex = Json::array();
    for (const auto& c : r.counterexamples) {
        Json j;
        j["check"] = c.check;
        j["graph6"] = c.graph6;
        j["relation"] = c.relation;
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        cex.push_back(std::move(j));
    }
    out["counterexamples"] = std::move(cex);
    return out;
}

Json to_json(const FamilyCheckReport& r) {
    Json out;
    out["family"] = r.family;
    out["n_max"] = r.n_max;
    Json rows = Json::array();
    for (const auto& c : r.instances) {
        Json j;
        j["instance"] = c.instance;
        j["graph6"] = c.graph6;
        j["formula"] = c.formula;
        j["solver"] = c.solver;
        j["agree"] = c.agree();
        rows.push_back(std::move(j));
    }
    out["instances"] = std::move(rows);
    out["disagreements"] = r.disagreements();
    out["inconclusive"] = r.inconclusive;
    return out;
}

}  // namespace domcolor

#include "bridgekit/json_io.hpp"

#include <limits>

namespace bridgekit {

std::int64_t to_i64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi)
        throw std::invalid_argument("integer too large for JSON output: " + v.str());
    return v.convert_to<std::int64_t>();
}

namespace {

json slopes_json(const SlopeTuple& t) {
    json arr = json::array();
    for (const auto& s : t) arr.push_back(s.str());
    return arr;
}

}  // namespace

json census_json(const ArborescentLink& link) {
    SphereCensus c = census(link);
    json classes = json::array();
    for (const auto& cls : c.classes) {
        json blk = json::array();
        for (auto s : cls) blk.push_back(sphere_label_str(s));
        classes.push_back(blk);
    }
    json spheres = json::array();
    for (auto s : c.spheres) spheres.push_back(sphere_label_str(s));
    return json{{"link", emit_link(link)},   {"family", family_name(c.family)},
                {"case", c.case_label},      {"spheres", spheres},
                {"classes", classes},        {"mu", c.mu},
                {"exact", c.exact}};
}

json classify_json(const ArborescentLink& link) {
    json out{{"link", emit_link(link)}, {"family", family_name(family_of(link))}};
    BranchedCover cover = branched_cover_invariants(link);
    json pieces = json::array();
    for (const auto& p : cover.pieces) {
        json pj{{"piece", p.str()}};
        if (!p.note.empty()) pj["note"] = p.note;
        pieces.push_back(pj);
    }
    out["double_branched_cover"] = {{"pieces", pieces}, {"gluings", cover.gluings}};
    if (const auto* l2 = std::get_if<L2Link>(&link)) {
        auto n = is_exceptional_nonsimple(*l2);
        out["exceptional_nonsimple"] = n.has_value();
        if (n) out["exceptional_n"] = to_i64(*n);
    }
    if (const auto* m = std::get_if<MontesinosLink>(&link))
        out["elliptic"] = is_elliptic_montesinos(*m);
    return out;
}

json heegaard_json(const SeifertInvariants& inv) {
    HeegaardCount h = genus2_heegaard_count(inv);
    json out{{"space", emit_seifert(normalize_seifert(inv))},
             {"count", h.count},
             {"labels", h.labels},
             {"exceptional", h.exceptional}};
    if (h.exceptional_family) out["exceptional_family"] = *h.exceptional_family;
    return out;
}

json symmetry_json(const MontesinosLink& link) {
    SymmetryGroup g = elliptic_symmetry_group(link);
    return json{{"link", emit_link(ArborescentLink(link))},
                {"group", symmetry_name_str(g.name)},
                {"generators", g.generators}};
}

json merge_graph_json(const MontesinosLink& link) {
    auto edges = montesinos_merge_edges(link);
    json earr = json::array();
    for (auto [i, j] : edges)
        earr.push_back(json::array({"P" + std::to_string(i), "P" + std::to_string(j)}));
    json out{{"link", emit_link(ArborescentLink(link))}, {"edges", earr}};
    out["census"] = census_json(ArborescentLink(link));
    return out;
}

json solutions_json(const SfsGroup& group, const SolveWindow& window,
                    const std::set<WSolution>& predicted,
                    const std::optional<std::set<WSolution>>& brute) {
    auto set_json = [](const std::set<WSolution>& s) {
        json arr = json::array();
        for (const auto& sol : s)
            arr.push_back(json{{"a", to_i64(sol.a)},
                               {"b", to_i64(sol.b)},
                               {"c", to_i64(sol.c)},
                               {"d", to_i64(sol.d)},
                               {"target", target_str(sol.target)}});
        return arr;
    };
    json out{{"group", group.str()},
             {"window", {{"ac", to_i64(window.ac_bound)}, {"bd", to_i64(window.bd_bound)}}},
             {"predicted", set_json(predicted)},
             {"predicted_count", predicted.size()}};
    if (brute) {
        out["brute_force_count"] = brute->size();
        out["oracle_agrees"] = (*brute == predicted);
    }
    return out;
}

json presentation_json(const Presentation& pres) {
    json rels = json::array();
    for (const auto& rel : pres.relators) {
        json w = json::array();
        for (const auto& [gen, exp] : rel) w.push_back(json::array({gen, to_i64(exp)}));
        rels.push_back(w);
    }
    return json{{"generators", pres.generators}, {"relators", rels}};
}

}  // namespace bridgekit

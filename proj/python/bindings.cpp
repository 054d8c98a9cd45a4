// Python bindings over the library's main operations.  The surface is kept
// text-first: links, groups, slopes and words travel as their canonical
// string forms, structured results as JSON strings; exact integers cross the
// boundary as int64.

#include "bridgekit/json_io.hpp"
#include "bridgekit/amalgam.hpp"
#include "bridgekit/orbifold.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bridgekit;

namespace {

SlopeTuple tuple_from_strings(const std::vector<std::string>& parts) {
    SlopeTuple out;
    for (const auto& p : parts) out.push_back(Slope::parse(p));
    return out;
}

const L1Link& as_l1(const ArborescentLink& link) {
    const auto* l1 = std::get_if<L1Link>(&link);
    if (!l1) throw std::invalid_argument("expected an L1 link");
    return *l1;
}

const MontesinosLink& as_montesinos(const ArborescentLink& link) {
    const auto* m = std::get_if<MontesinosLink>(&link);
    if (!m) throw std::invalid_argument("expected a Montesinos link");
    return *m;
}

std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::string>>
solutions_to_py(const std::set<WSolution>& sols) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::string>> out;
    for (const auto& s : sols)
        out.emplace_back(to_i64(s.a), to_i64(s.b), to_i64(s.c), to_i64(s.d), target_str(s.target));
    return out;
}

SolveWindow window_from(std::int64_t ac, std::int64_t bd) {
    return SolveWindow{Int(ac), Int(bd)};
}

// Amalgam of the double branched cover of an L1 link, with the fiber
// commutator invariants used to distinguish its Heegaard surfaces.
std::pair<std::size_t, std::size_t> commutator_lengths(const std::string& link_text) {
    ArborescentLink link = parse_link(link_text);
    const L1Link& l1 = as_l1(link);
    AmalgamGroup g{make_sfs_group(l1.pair1[0].den(), l1.pair1[0].num(), l1.pair1[1].den(),
                                  l1.pair1[1].num()),
                   make_sfs_group(l1.pair2[0].den(), l1.pair2[0].num(), l1.pair2[1].den(),
                                  l1.pair2[1].num())};
    AmalgamWord u1 = amalgam_factor(g, 1, fiber_word(g.vertex1, 1));
    AmalgamWord v1 = amalgam_factor(g, 1, fiber_word(g.vertex1, 2));
    AmalgamWord u2 = amalgam_factor(g, 2, fiber_word(g.vertex2, 1));
    AmalgamWord four = amalgam_commutator(u2, u1);
    AmalgamWord eight =
        amalgam_commutator(u1, amalgam_multiply(amalgam_multiply(u2, v1), amalgam_invert(u2)));
    return {cyclic_reduced_length(four), cyclic_reduced_length(eight)};
}

}  // namespace

PYBIND11_MODULE(_bridgekit, m) {
    m.doc() = "3-bridge sphere census and Seifert word engine";

    m.def("slope_normalize",
          [](std::int64_t p, std::int64_t q) { return slope_normalize(Int(p), Int(q)).str(); },
          py::arg("p"), py::arg("q"));
    m.def("tuples_equivalent",
          [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              return tuples_equivalent(tuple_from_strings(a), tuple_from_strings(b));
          });
    m.def("matches_epsilon_pattern",
          [](const std::vector<std::string>& p) -> std::optional<std::pair<int, int>> {
              return matches_epsilon_pattern(tuple_from_strings(p));
          });
    m.def("matches_half_pattern",
          [](const std::vector<std::string>& p) -> std::optional<std::int64_t> {
              auto n = matches_half_pattern(tuple_from_strings(p));
              if (!n) return std::nullopt;
              return to_i64(*n);
          });

    m.def("parse_link", [](const std::string& text) { return emit_link(parse_link(text)); },
          "parse and re-emit a link in canonical form");
    m.def("census_json", [](const std::string& text) { return census_json(parse_link(text)).dump(); });
    m.def("classify_json",
          [](const std::string& text) { return classify_json(parse_link(text)).dump(); });
    m.def("enumerate_spheres", [](const std::string& text) {
        std::vector<std::string> out;
        for (auto s : enumerate_spheres(parse_link(text))) out.push_back(sphere_label_str(s));
        return out;
    });
    m.def("spheres_isotopic", [](const std::string& text, int i, int j) {
        return spheres_isotopic_l1(as_l1(parse_link(text)), i, j);
    });

    m.def("word_normalize", [](const std::string& group, const std::string& word) {
        return parse_word(parse_sfs_group(group), word).str();
    });
    m.def("word_multiply",
          [](const std::string& group, const std::string& u, const std::string& v) {
              SfsGroup g = parse_sfs_group(group);
              return multiply(parse_word(g, u), parse_word(g, v)).str();
          });
    m.def("word_invert", [](const std::string& group, const std::string& word) {
        return invert(parse_word(parse_sfs_group(group), word)).str();
    });
    m.def("peripheral_membership",
          [](const std::string& group, const std::string& word)
              -> std::optional<std::pair<std::int64_t, std::int64_t>> {
              auto pq = peripheral_membership(parse_word(parse_sfs_group(group), word));
              if (!pq) return std::nullopt;
              return std::make_pair(to_i64(pq->first), to_i64(pq->second));
          });

    m.def("predicted_solutions",
          [](const std::string& group, std::int64_t ac, std::int64_t bd) {
              return solutions_to_py(predicted_solutions(parse_sfs_group(group), window_from(ac, bd)));
          });
    m.def("brute_force_solutions",
          [](const std::string& group, std::int64_t ac, std::int64_t bd) {
              return solutions_to_py(
                  brute_force_solutions(parse_sfs_group(group), window_from(ac, bd)));
          });

    m.def("heegaard_json",
          [](const std::string& space) { return heegaard_json(parse_seifert(space)).dump(); });
    m.def("symmetry_json", [](const std::string& link) {
        return symmetry_json(as_montesinos(parse_link(link))).dump();
    });
    m.def("merge_graph_json", [](const std::string& link) {
        return merge_graph_json(as_montesinos(parse_link(link))).dump();
    });
    m.def("orbifold_presentation_json", [](const std::string& link) {
        return presentation_json(orbifold_presentation(as_montesinos(parse_link(link)))).dump();
    });
    m.def("rho_images", [](const std::string& link) {
        std::map<std::string, std::string> out;
        for (const auto& [gen, img] : rho_automorphism_images(as_montesinos(parse_link(link))))
            out[gen] = abstract_word_str(img);
        return out;
    });

    m.def("commutator_lengths", &commutator_lengths,
          "cyclically reduced lengths of the two Heegaard commutator invariants of an L1 link");
}

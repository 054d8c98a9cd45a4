// bridgekit: census and word-engine computations for 3-bridge arborescent
// links, exposed as a batch CLI with machine-readable output.
//
// Exit codes: 0 success, 1 parse/validation error, 2 input outside the
// arithmetic coverage of the symmetry classification.

#include "bridgekit/json_io.hpp"
#include "bridgekit/orbifold.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace bridgekit;

SolveWindow default_window() {
    if (const char* env = std::getenv("BRIDGEKIT_WINDOW")) return parse_window(env);
    return SolveWindow{};
}

void print_result(const json& j, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string census_text(const SphereCensus& c) {
    std::ostringstream os;
    os << "case " << c.case_label << ": mu = " << c.mu << (c.exact ? "" : " (conjectured)")
       << ", classes:";
    for (const auto& cls : c.classes) {
        os << " {";
        for (size_t i = 0; i < cls.size(); ++i) {
            if (i) os << ",";
            os << sphere_label_str(cls[i]);
        }
        os << "}";
    }
    return os.str();
}

// Canonical slope grid: all reduced beta/alpha with 0 < beta < alpha <= amax.
std::vector<Slope> slope_grid(int amax) {
    std::vector<Slope> out;
    for (int a = 2; a <= amax; ++a)
        for (int b = 1; b < a; ++b)
            if (boost::multiprecision::gcd(Int(a), Int(b)) == 1) out.push_back(Slope(b, a));
    return out;
}

void run_sweep(int amax) {
    std::vector<Slope> slopes = slope_grid(amax);
    std::vector<SlopeTuple> pairs;
    for (const auto& s1 : slopes)
        for (const auto& s2 : slopes) pairs.push_back(SlopeTuple{s1, s2});
    std::cout << "link,case,mu,exact\n";
    for (const auto& p1 : pairs)
        for (const auto& p2 : pairs) {
            ArborescentLink link = make_l1(p1, p2);
            SphereCensus c = census(link);
            std::cout << emit_link(link) << "," << c.case_label << "," << c.mu << ","
                      << (c.exact ? "true" : "false") << "\n";
        }
}

int run(int argc, char** argv) {
    CLI::App app{"3-bridge sphere census and Seifert word engine"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands use the global --format

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string link_text, group_text, window_text, space_text, sweep_text, word_op;
    std::vector<std::string> word_args;
    int sphere_i = 0, sphere_j = 0;
    bool check_oracle = false;

    auto* classify = app.add_subcommand("classify", "parse a link and describe its family");
    classify->add_option("link", link_text)->required();

    auto* cen = app.add_subcommand("census", "3-bridge sphere census of a link");
    cen->add_option("link", link_text);
    cen->add_option("--sweep", sweep_text, "emit CSV over the L1 grid, e.g. alpha_max=7");

    auto* iso = app.add_subcommand("isotopic", "decide isotopy of two spheres of an L1 link");
    iso->add_option("link", link_text)->required();
    iso->add_option("i", sphere_i)->required();
    iso->add_option("j", sphere_j)->required();

    auto* word = app.add_subcommand("word", "word engine: normalize, multiply, invert, peripheral");
    word->add_option("op", word_op)
        ->required()
        ->check(CLI::IsMember({"normalize", "multiply", "invert", "peripheral"}));
    word->add_option("--group", group_text, "group, e.g. D(1/2,1/3)")->required();
    word->add_option("words", word_args);

    auto* solve = app.add_subcommand("solve-w", "solution set of w(a,b,c,d) = eta^{+-1}");
    solve->add_option("--group", group_text)->required();
    solve->add_option("--window", window_text, "bounds 'A,B' for |a|,|c| and |b|,|d|");
    solve->add_flag("--check-oracle", check_oracle, "verify against brute-force enumeration");

    auto* heeg = app.add_subcommand("heegaard", "genus-2 Heegaard surface count");
    heeg->add_option("space", space_text, "e.g. S2(0;1/2,1/3,1/4)")->required();

    auto* sym = app.add_subcommand("symmetry", "symmetry group of an elliptic Montesinos link");
    sym->add_option("link", link_text)->required();

    auto* merge = app.add_subcommand("merge-graph", "sphere merge graph of a nonelliptic Montesinos link");
    merge->add_option("link", link_text)->required();

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        ArborescentLink link = parse_link(link_text);
        json j = classify_json(link);
        if (const auto* m = std::get_if<MontesinosLink>(&link)) {
            j["orbifold_presentation"] = presentation_json(orbifold_presentation(*m));
            json images = json::object();
            for (const auto& [gen, img] : rho_automorphism_images(*m))
                images[gen] = abstract_word_str(img);
            j["rho_images"] = images;
        }
        print_result(j, format, j["family"].get<std::string>() + " " + emit_link(link));
        return 0;
    }
    if (cen->parsed()) {
        if (!sweep_text.empty()) {
            if (sweep_text.rfind("alpha_max=", 0) != 0)
                throw std::invalid_argument("--sweep expects alpha_max=N");
            run_sweep(std::stoi(sweep_text.substr(10)));
            return 0;
        }
        if (link_text.empty()) throw std::invalid_argument("census needs a link or --sweep");
        ArborescentLink link = parse_link(link_text);
        print_result(census_json(link), format, census_text(census(link)));
        return 0;
    }
    if (iso->parsed()) {
        ArborescentLink link = parse_link(link_text);
        const auto* l1 = std::get_if<L1Link>(&link);
        if (!l1) throw std::invalid_argument("isotopic: only L1 links carry several spheres");
        bool ans = spheres_isotopic_l1(*l1, sphere_i, sphere_j);
        print_result(json{{"isotopic", ans}}, format, ans ? "true" : "false");
        return 0;
    }
    if (word->parsed()) {
        SfsGroup g = parse_sfs_group(group_text);
        auto need = [&](size_t n) {
            if (word_args.size() != n)
                throw std::invalid_argument("word " + word_op + " expects " + std::to_string(n) +
                                            " word argument(s)");
        };
        if (word_op == "normalize") {
            need(1);
            SfsWord w = parse_word(g, word_args[0]);
            print_result(json{{"word", w.str()}}, format, w.str());
        } else if (word_op == "multiply") {
            need(2);
            SfsWord w = multiply(parse_word(g, word_args[0]), parse_word(g, word_args[1]));
            print_result(json{{"word", w.str()}}, format, w.str());
        } else if (word_op == "invert") {
            need(1);
            SfsWord w = invert(parse_word(g, word_args[0]));
            print_result(json{{"word", w.str()}}, format, w.str());
        } else {
            need(1);
            auto pq = peripheral_membership(parse_word(g, word_args[0]));
            if (pq)
                print_result(json{{"peripheral", true},
                                  {"p", to_i64(pq->first)},
                                  {"q", to_i64(pq->second)}},
                             format,
                             "(c1c2)^" + pq->first.str() + " h^" + pq->second.str());
            else
                print_result(json{{"peripheral", false}}, format, "not peripheral");
        }
        return 0;
    }
    if (solve->parsed()) {
        SfsGroup g = parse_sfs_group(group_text);
        SolveWindow w = window_text.empty() ? default_window() : parse_window(window_text);
        auto predicted = predicted_solutions(g, w);
        std::optional<std::set<WSolution>> brute;
        if (check_oracle) brute = brute_force_solutions(g, w);
        json j = solutions_json(g, w, predicted, brute);
        std::ostringstream os;
        if (brute) {
            if (*brute != predicted) {
                std::cerr << "oracle mismatch: predicted " << predicted.size() << ", brute-force "
                          << brute->size() << "\n";
                return 1;
            }
            os << "predicted == brute-force: OK (" << predicted.size() << " solutions)";
        } else {
            os << predicted.size() << " predicted solutions";
        }
        print_result(j, format, os.str());
        return 0;
    }
    if (heeg->parsed()) {
        SeifertInvariants inv = parse_seifert(space_text);
        json j = heegaard_json(inv);
        std::ostringstream os;
        os << j["count"].get<int>() << " genus-2 Heegaard surface(s)";
        if (j["exceptional"].get<bool>()) os << " (exceptional family)";
        print_result(j, format, os.str());
        return 0;
    }
    if (sym->parsed()) {
        ArborescentLink link = parse_link(link_text);
        const auto* m = std::get_if<MontesinosLink>(&link);
        if (!m) throw std::invalid_argument("symmetry expects a Montesinos link");
        json j = symmetry_json(*m);
        std::string text = j["group"].get<std::string>() + " <";
        const auto& gens = j["generators"];
        for (size_t i = 0; i < gens.size(); ++i)
            text += (i ? "," : "") + gens[i].get<std::string>();
        print_result(j, format, text + ">");
        return 0;
    }
    if (merge->parsed()) {
        ArborescentLink link = parse_link(link_text);
        const auto* m = std::get_if<MontesinosLink>(&link);
        if (!m) throw std::invalid_argument("merge-graph expects a Montesinos link");
        json j = merge_graph_json(*m);
        std::ostringstream os;
        os << j["edges"].size() << " merge edge(s), mu <= " << j["census"]["mu"].get<int>();
        print_result(j, format, os.str());
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bridgekit::coverage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

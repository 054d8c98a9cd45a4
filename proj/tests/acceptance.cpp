// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every expected value and runtime bound is pinned here.

#include "bridgekit/amalgam.hpp"
#include "bridgekit/census.hpp"
#include "bridgekit/orbifold.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <cmath>
#include <sstream>

using namespace bridgekit;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title, double seconds_limit)
        : number_(number), title_(std::move(title)), limit_(seconds_limit),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            problems_.push_back(what);
        }
    }

    void finish() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        bool timed_out = limit_ > 0 && elapsed > limit_;
        if (timed_out) {
            std::ostringstream os;
            os << "runtime " << elapsed << "s exceeds " << limit_ << "s";
            problems_.push_back(os.str());
        }
        std::ostringstream line;
        line << (problems_.empty() ? "PASS" : "FAIL") << " criterion " << number_ << ": "
             << title_ << " [" << elapsed << "s]";
        for (const auto& p : problems_) line << "\n    - " << p;
        std::cout << line.str() << "\n";
        if (!problems_.empty()) ++failures;
    }

private:
    int number_;
    std::string title_;
    double limit_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

std::vector<Slope> slope_grid(int amax) {
    std::vector<Slope> out;
    for (int a = 2; a <= amax; ++a)
        for (int b = 1; b < a; ++b)
            if (boost::multiprecision::gcd(Int(a), Int(b)) == 1) out.push_back(Slope(b, a));
    return out;
}

// ---------------------------------------------------------------------------

void criterion1_table1() {
    Criterion cr(1, "Table of L1 sphere counts over the eight condition cells", 1.0);
    const std::map<std::string, int> expected{
        {"(a-1)", 2}, {"(a-2)", 2}, {"(a-3)", 3}, {"(a-4)", 1},
        {"(b-1)", 3}, {"(b-2)", 3}, {"(b-3)", 4}, {"(b-4)", 2},
    };

    // grid search over alpha <= 7 for one instance per cell (the half-pattern
    // representatives (1/2,-n/(2n+1)) live on the grid as (1/2,-1/3) and
    // (1/2,-2/5) after sign normalization, so include negative numerators)
    std::vector<Slope> slopes = slope_grid(7);
    for (int n : {1, 2, 3}) {
        slopes.push_back(Slope(-n, 2 * n + 1));
    }
    std::vector<SlopeTuple> pairs;
    for (const auto& s1 : slopes)
        for (const auto& s2 : slopes) pairs.push_back(SlopeTuple{s1, s2});

    std::map<std::string, SphereCensus> found;
    for (const auto& p1 : pairs) {
        for (const auto& p2 : pairs) {
            SphereCensus c = census(make_l1(p1, p2));
            if (!found.count(c.case_label)) found.emplace(c.case_label, c);
            if (found.size() == expected.size()) break;
        }
        if (found.size() == expected.size()) break;
    }
    cr.require(found.size() == 8, "grid search did not realize all eight cells");
    for (const auto& [label, want_mu] : expected) {
        auto it = found.find(label);
        if (it == found.end()) {
            cr.require(false, "no instance found for cell " + label);
            continue;
        }
        std::ostringstream what;
        what << "cell " << label << ": mu = " << it->second.mu << ", expected " << want_mu;
        cr.require(it->second.mu == want_mu && it->second.exact, what.str());
    }

    // spot consistency across a random sample of the grid
    std::mt19937 rng(2024);
    std::uniform_int_distribution<size_t> pick(0, pairs.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        SphereCensus c = census(make_l1(pairs[pick(rng)], pairs[pick(rng)]));
        cr.require(expected.count(c.case_label) == 1 && c.mu == expected.at(c.case_label),
                   "grid sample disagrees with the table in cell " + c.case_label);
    }
    cr.finish();
}

void criterion2_four_spheres() {
    Criterion cr(2, "four spheres for the doubled half-pattern links, 2 <= |n|,|m| <= 10", 1.0);
    // the four-sphere statement requires |2n+1|, |2m+1| >= 5, which inside
    // 2 <= |n| <= 10 excludes exactly n = -2 (there 2n+1 = -3 and the S1/S2
    // merge fires, giving the consistent count 3 instead)
    auto admissible = [](int n) {
        int t = 2 * n + 1;
        return std::abs(t) >= 5;
    };
    for (int n = -10; n <= 10; ++n) {
        if ((-1 <= n && n <= 1) || !admissible(n)) continue;
        for (int m = -10; m <= 10; ++m) {
            if ((-1 <= m && m <= 1) || !admissible(m)) continue;
            SphereCensus c = census(make_l1(half_pattern_tuple(n), half_pattern_tuple(m)));
            std::ostringstream what;
            what << "n=" << n << " m=" << m << ": mu = " << c.mu << " exact = " << c.exact;
            cr.require(c.mu == 4 && c.exact && c.case_label == "(b-3)", what.str());
        }
    }
    cr.finish();
}

std::vector<SfsGroup> oracle_groups() {
    std::vector<SfsGroup> groups{make_sfs_group(5, 2, 5, 2), make_sfs_group(3, -1, 2, 1),
                                 make_sfs_group(2, 1, 3, 1)};
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> den(2, 7), num(-9, 9);
    while (groups.size() < 13) {
        int a1 = den(rng), a2 = den(rng), b1 = num(rng), b2 = num(rng);
        if (b1 == 0 || b2 == 0) continue;
        if (boost::multiprecision::gcd(Int(a1), Int(std::abs(b1))) != 1) continue;
        if (boost::multiprecision::gcd(Int(a2), Int(std::abs(b2))) != 1) continue;
        groups.push_back(make_sfs_group(a1, b1, a2, b2));
    }
    return groups;
}

void criterion3_and_4_oracle() {
    Criterion cr(3, "closed-form solution families equal brute force on 13 groups", 30.0);
    SolveWindow window{3, 10};
    std::vector<SfsGroup> groups = oracle_groups();
    bool identity_clean = true;
    for (const auto& g : groups) {
        auto predicted = predicted_solutions(g, window);
        auto brute = brute_force_solutions(g, window);
        if (predicted != brute) {
            std::ostringstream what;
            what << g.str() << ": predicted " << predicted.size() << " tuples, brute force "
                 << brute.size();
            cr.require(false, what.str());
        }
        for (const auto& s : brute)
            cr.require(build_w(g, s.a, s.b, s.c, s.d) == target_word(g, s.target),
                       g.str() + ": solution fails exact verification");
        identity_clean = identity_clean && brute_force_identity_solutions(g, window).empty();
    }
    cr.finish();

    Criterion cr4(4, "w(a,b,c,d) = 1 has no solutions on any tested window", 0.0);
    cr4.require(identity_clean, "brute-force search found an identity solution");
    cr4.finish();
}

void criterion5_commutator_lengths() {
    Criterion cr(5, "commutator lengths 4 and 8 in the doubled (2/5,2/5) amalgam", 1.0);
    SfsGroup v = make_sfs_group(5, 2, 5, 2);
    AmalgamGroup g{v, v};
    AmalgamWord u1 = amalgam_factor(g, 1, fiber_word(g.vertex1, 1));
    AmalgamWord v1 = amalgam_factor(g, 1, fiber_word(g.vertex1, 2));
    AmalgamWord u2 = amalgam_factor(g, 2, fiber_word(g.vertex2, 1));

    AmalgamWord four = amalgam_commutator(u2, u1);
    AmalgamWord eight =
        amalgam_commutator(u1, amalgam_multiply(amalgam_multiply(u2, v1), amalgam_invert(u2)));
    cr.require(cyclic_reduced_length(four) == 4, "[u2,u1] does not have length 4");
    cr.require(cyclic_reduced_length(eight) == 8, "[u1, u2 v1 u2^-1] does not have length 8");

    std::mt19937 rng(555);
    std::uniform_int_distribution<int> side(1, 2), which(1, 2), pow(-2, 2), len(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        AmalgamWord x = amalgam_edge(g, pow(rng), pow(rng));
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int s = side(rng);
            x = amalgam_multiply(x, amalgam_factor(g, s, fiber_word(g.vertex(s), which(rng))));
        }
        cr.require(cyclic_reduced_length(amalgam_conjugate(x, four)) == 4,
                   "length 4 not stable under conjugation");
        cr.require(cyclic_reduced_length(amalgam_conjugate(x, eight)) == 8,
                   "length 8 not stable under conjugation");
    }
    cr.finish();
}

void criterion6_heegaard() {
    Criterion cr(6, "genus-2 Heegaard counts and the exceptional-family matcher", 5.0);
    auto inv = [](int b, SlopeTuple s) {
        return SeifertInvariants{BaseSurface::Sphere, b, std::move(s)};
    };
    cr.require(genus2_heegaard_count(inv(0, {Slope(2, 5), Slope(2, 5), Slope(2, 7)})).count == 3,
               "expected count 3");
    cr.require(genus2_heegaard_count(inv(0, {Slope(2, 5), Slope(2, 5), Slope(1, 3)})).count == 2,
               "expected count 2");
    cr.require(genus2_heegaard_count(inv(0, {Slope(1, 2), Slope(1, 3), Slope(2, 7)})).count == 1,
               "expected count 1");

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> den(2, 9), num(-9, 9), bdist(-4, 4), shift(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        SlopeTuple slopes;
        while (slopes.size() < 3) {
            int a = den(rng), b = num(rng);
            if (b == 0 || boost::multiprecision::gcd(Int(a), Int(std::abs(b))) != 1) continue;
            slopes.push_back(Slope(b, a));
        }
        SeifertInvariants base{BaseSurface::Sphere, bdist(rng), slopes};
        int count = genus2_heegaard_count(base).count;
        SeifertInvariants permuted = base;
        std::shuffle(permuted.slopes.begin(), permuted.slopes.end(), rng);
        SeifertInvariants shifted = base;
        for (auto& s : shifted.slopes) {
            Int k = shift(rng);
            s = s + Rational(k);
            shifted.b -= k;
        }
        cr.require(genus2_heegaard_count(permuted).count == count,
                   "count not invariant under slope permutation");
        cr.require(genus2_heegaard_count(shifted).count == count,
                   "count not invariant under renormalization");
    }

    // the matcher fires on the smallest member of each family descriptor
    for (auto [family, param] : {std::pair<int, int>{1, 7}, {2, 7}, {3, 5}}) {
        ExceptionalDescriptor d = exceptional_family_member(family, param);
        auto got = match_exceptional_descriptor(d.euler, d.residues);
        std::ostringstream what;
        what << "family " << family << " member (param " << param << ") not matched";
        cr.require(got.has_value() && *got == family, what.str());
    }
    // families 1 and 3 are realizable with an integral section; the full
    // count path reports the extra horizontal surface
    HeegaardCount h1 =
        genus2_heegaard_count(inv(-2, {Slope(1, 2), Slope(2, 3), Slope(6, 7)}));
    cr.require(h1.count == 2 && h1.exceptional && h1.exceptional_family == 1,
               "family 1 member S2(-2;1/2,2/3,6/7) not detected");
    HeegaardCount h3 =
        genus2_heegaard_count(inv(-2, {Slope(1, 2), Slope(3, 4), Slope(4, 5)}));
    cr.require(h3.count == 2 && h3.exceptional && h3.exceptional_family == 3,
               "family 3 member S2(-2;1/2,3/4,4/5) not detected");

    // 500 random negatives: drawn away from the family descriptors, then
    // checked not to match
    int negatives = 0;
    while (negatives < 500) {
        SlopeTuple slopes;
        while (slopes.size() < 3) {
            int a = den(rng), b = num(rng);
            if (b == 0 || boost::multiprecision::gcd(Int(a), Int(std::abs(b))) != 1) continue;
            slopes.push_back(Slope(b, a));
        }
        SeifertInvariants candidate{BaseSurface::Sphere, bdist(rng), slopes};
        SeifertInvariants n = normalize_seifert(candidate);
        // keep it a genuine negative: unequal to every member descriptor
        bool is_member = false;
        for (int family : {1, 2, 3}) {
            for (int param = 5; param <= 11; ++param) {
                try {
                    ExceptionalDescriptor d = exceptional_family_member(family, param);
                    SlopeTuple sorted = n.slopes;
                    std::sort(sorted.begin(), sorted.end());
                    if (d.euler == n.euler() && d.residues == sorted) is_member = true;
                } catch (const std::invalid_argument&) {
                }
            }
        }
        if (is_member) continue;
        ++negatives;
        cr.require(!match_exceptional(candidate).has_value(),
                   "matcher fired on a random negative " + emit_seifert(candidate));
    }
    cr.finish();
}

void criterion7_symmetry() {
    Criterion cr(7, "elliptic symmetry groups: worked examples and the parameter grid", 1.0);
    auto mont = [](int b, SlopeTuple slopes) {
        return std::get<MontesinosLink>(make_montesinos(b, std::move(slopes)));
    };
    auto check = [&](int b, SlopeTuple s, SymmetryName want, const char* what) {
        try {
            cr.require(elliptic_symmetry_group(mont(b, std::move(s))).name == want, what);
        } catch (const std::exception& e) {
            cr.require(false, std::string(what) + ": " + e.what());
        }
    };
    check(1, {Slope(1, 2), Slope(1, 2), Slope(3, 5)}, SymmetryName::Z2xZ2,
          "M(1;1/2,1/2,3/5) should give Z2+Z2");
    check(0, {Slope(1, 2), Slope(1, 2), Slope(1, 2)}, SymmetryName::Z2xD3,
          "M(0;1/2,1/2,1/2) should give Z2+D3");
    check(0, {Slope(1, 2), Slope(1, 3), Slope(1, 4)}, SymmetryName::Z2,
          "M(0;1/2,1/3,1/4) should give Z2");

    // full case table over b in [-3,3], alpha <= 9: (2,2,alpha), (2,3,3),
    // (2,3,4), (2,3,5) with every admissible numerator
    for (int b = -3; b <= 3; ++b) {
        for (int alpha = 2; alpha <= 9; ++alpha)
            for (int beta = 1; beta < std::max(alpha, 2); ++beta) {
                if (boost::multiprecision::gcd(Int(alpha), Int(beta)) != 1) continue;
                try {
                    SymmetryGroup g = elliptic_symmetry_group(
                        mont(b, {Slope(1, 2), Slope(1, 2), Slope(beta, alpha)}));
                    if (alpha == 2)
                        cr.require(g.name == SymmetryName::Z2xD3, "(2,2,2) must give Z2+D3");
                } catch (const std::exception& e) {
                    cr.require(false, std::string("(2,2,a) grid error: ") + e.what());
                }
            }
        for (int tail : {3, 4, 5})
            for (int b2 = 1; b2 < 3; ++b2)
                for (int b3 = 1; b3 < tail; ++b3) {
                    if (boost::multiprecision::gcd(Int(tail), Int(b3)) != 1) continue;
                    try {
                        SymmetryGroup g = elliptic_symmetry_group(
                            mont(b, {Slope(1, 2), Slope(b2, 3), Slope(b3, tail)}));
                        if (tail != 3)
                            cr.require(g.name == SymmetryName::Z2, "(2,3,4|5) must give Z2");
                    } catch (const std::exception& e) {
                        cr.require(false, std::string("(2,3,k) grid error: ") + e.what());
                    }
                }
    }
    cr.finish();
}

void criterion8_property_suites() {
    Criterion cr(8, "property suites: normal form, group laws, tuples, peripheral", 0.0);
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> den(2, 7), num(-9, 9), exp(-6, 6), gen(1, 3);

    auto rand_group = [&]() {
        for (;;) {
            int a1 = den(rng), a2 = den(rng), b1 = num(rng), b2 = num(rng);
            if (b1 == 0 || b2 == 0) continue;
            if (boost::multiprecision::gcd(Int(a1), Int(std::abs(b1))) != 1) continue;
            if (boost::multiprecision::gcd(Int(a2), Int(std::abs(b2))) != 1) continue;
            return make_sfs_group(a1, b1, a2, b2);
        }
    };
    auto rand_raw = [&](int len) {
        RawWord raw;
        for (int i = 0; i < len; ++i) {
            int e = exp(rng);
            raw.push_back({static_cast<Gen>(gen(rng)), e == 0 ? 1 : e});
        }
        return raw;
    };

    // relator insertion invariance, 1000 trials
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SfsGroup g = rand_group();
        RawWord raw = rand_raw(8);
        std::vector<RawWord> rels{
            {{Gen::C1, g.alpha1}, {Gen::H, g.beta1}},
            {{Gen::C2, g.alpha2}, {Gen::H, g.beta2}},
            {{Gen::C1, 1}, {Gen::H, 1}, {Gen::C1, -1}, {Gen::H, -1}},
            {{Gen::C2, 1}, {Gen::H, 1}, {Gen::C2, -1}, {Gen::H, -1}}};
        const RawWord& rel = rels[static_cast<size_t>(trial) % rels.size()];
        std::uniform_int_distribution<size_t> pos(0, raw.size());
        RawWord spliced = raw;
        spliced.insert(spliced.begin() + static_cast<long>(pos(rng)), rel.begin(), rel.end());
        if (normalize(g, spliced) != normalize(g, raw)) ++bad;
    }
    cr.require(bad == 0, "relator insertion changed a normal form");

    // group laws and centrality
    bad = 0;
    for (int trial = 0; trial < 300; ++trial) {
        SfsGroup g = rand_group();
        SfsWord u = normalize(g, rand_raw(8));
        SfsWord v = normalize(g, rand_raw(8));
        SfsWord w = normalize(g, rand_raw(8));
        SfsWord h = normalize(g, {{Gen::H, 1}});
        if (!multiply(u, invert(u)).is_identity()) ++bad;
        if (multiply(multiply(u, v), w) != multiply(u, multiply(v, w))) ++bad;
        if (multiply(h, u) != multiply(u, h)) ++bad;
    }
    cr.require(bad == 0, "a group law failed");

    // tuples_equivalent equivalence laws
    bad = 0;
    std::uniform_int_distribution<int> tlen(1, 4), shift(-3, 3);
    auto rand_tuple = [&](size_t len) {
        SlopeTuple t;
        for (size_t i = 0; i < len; ++i) {
            int q = den(rng), p = num(rng);
            t.push_back(slope_normalize(p == 0 ? 1 : p, q));
        }
        return t;
    };
    for (int trial = 0; trial < 1000; ++trial) {
        SlopeTuple a = rand_tuple(static_cast<size_t>(tlen(rng)));
        SlopeTuple b = reversed(a);
        if (b.size() >= 2) {
            Int k = shift(rng);
            b[0] = b[0] + Rational(k);
            b[1] = b[1] - Rational(k);
        }
        SlopeTuple c = reversed(b);
        if (!tuples_equivalent(a, a)) ++bad;
        if (!tuples_equivalent(a, b) || !tuples_equivalent(b, a)) ++bad;
        if (!tuples_equivalent(b, c) || !tuples_equivalent(a, c)) ++bad;
        SlopeTuple bumped = a;
        bumped[0] = bumped[0] + Rational(1);
        if (tuples_equivalent(a, bumped)) ++bad;
    }
    cr.require(bad == 0, "tuples_equivalent equivalence law failed");

    // peripheral membership round trips
    bad = 0;
    std::uniform_int_distribution<int> pq(-6, 6);
    for (int trial = 0; trial < 500; ++trial) {
        SfsGroup g = rand_group();
        Int p = pq(rng), q = pq(rng);
        auto got = peripheral_membership(boundary_word(g, p, q));
        if (!got || got->first != p || got->second != q) ++bad;
        if (peripheral_membership(fiber_word(g, 1)).has_value()) ++bad;
    }
    cr.require(bad == 0, "peripheral membership round trip failed");
    cr.finish();
}

}  // namespace

int main() {
    criterion1_table1();
    criterion2_four_spheres();
    criterion3_and_4_oracle();
    criterion5_commutator_lengths();
    criterion6_heegaard();
    criterion7_symmetry();
    criterion8_property_suites();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

#include "bridgekit/census.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace bridgekit {

std::string sphere_label_str(SphereLabel s) {
    switch (s) {
        case SphereLabel::S1: return "S1";
        case SphereLabel::S2: return "S2";
        case SphereLabel::S3: return "S3";
        case SphereLabel::S4: return "S4";
        case SphereLabel::S0: return "S0";
        case SphereLabel::P1: return "P1";
        case SphereLabel::P2: return "P2";
        case SphereLabel::P3: return "P3";
        case SphereLabel::P4: return "P4";
        case SphereLabel::P5: return "P5";
        default: return "P6";
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

struct L1Analysis {
    bool cond_a;  // some pair ~ (eps/alpha, eps'/alpha')
    std::optional<Int> n1, n2;
};

L1Analysis analyze_l1(const L1Link& link) {
    L1Analysis out;
    out.cond_a = matches_epsilon_pattern(link.pair1).has_value() ||
                 matches_epsilon_pattern(link.pair2).has_value();
    out.n1 = matches_half_pattern(link.pair1);
    out.n2 = matches_half_pattern(link.pair2);
    return out;
}

std::string l1_case_label(const L1Analysis& a) {
    int digit;
    if (a.n1 && !a.n2)
        digit = 1;
    else if (!a.n1 && a.n2)
        digit = 2;
    else if (a.n1 && a.n2)
        digit = 3;
    else
        digit = 4;
    std::ostringstream os;
    os << "(" << (a.cond_a ? "a" : "b") << "-" << digit << ")";
    return os.str();
}

}  // namespace

std::vector<SphereLabel> enumerate_spheres(const ArborescentLink& link) {
    std::vector<SphereLabel> out;
    if (const auto* l1 = std::get_if<L1Link>(&link)) {
        out = {SphereLabel::S1, SphereLabel::S2};
        if (matches_half_pattern(l1->pair1)) out.push_back(SphereLabel::S3);
        if (matches_half_pattern(l1->pair2)) out.push_back(SphereLabel::S4);
    } else if (const auto* l2 = std::get_if<L2Link>(&link)) {
        out = {is_exceptional_nonsimple(*l2) ? SphereLabel::S0 : SphereLabel::S1};
    } else if (std::holds_alternative<L3Link>(link)) {
        out = {SphereLabel::S1};
    } else {
        const auto& m = std::get<MontesinosLink>(link);
        if (is_elliptic_montesinos(m)) {
            out = {SphereLabel::P1};
        } else {
            out = {SphereLabel::P1, SphereLabel::P2, SphereLabel::P3,
                   SphereLabel::P4, SphereLabel::P5, SphereLabel::P6};
        }
    }
    return out;
}

bool spheres_isotopic_l1(const L1Link& link, int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4)
        throw std::invalid_argument("sphere index must be 1..4");
    L1Analysis a = analyze_l1(link);
    auto possessed = [&](int k) {
        if (k == 3) return a.n1.has_value();
        if (k == 4) return a.n2.has_value();
        return true;
    };
    for (int k : {i, j})
        if (!possessed(k))
            throw std::invalid_argument("sphere S" + std::to_string(k) +
                                        " is not possessed by this link");
    if (i == j) return true;
    return ((i == 1 && j == 2) || (i == 2 && j == 1)) && a.cond_a;
}

SphereCensus census(const ArborescentLink& link) {
    SphereCensus out;
    out.family = family_of(link);
    out.spheres = enumerate_spheres(link);
    if (const auto* l1 = std::get_if<L1Link>(&link)) {
        L1Analysis a = analyze_l1(*l1);
        out.case_label = l1_case_label(a);
        if (a.cond_a)
            out.classes.push_back({SphereLabel::S1, SphereLabel::S2});
        else {
            out.classes.push_back({SphereLabel::S1});
            out.classes.push_back({SphereLabel::S2});
        }
        if (a.n1) out.classes.push_back({SphereLabel::S3});
        if (a.n2) out.classes.push_back({SphereLabel::S4});
    } else if (const auto* l2 = std::get_if<L2Link>(&link)) {
        out.case_label = is_exceptional_nonsimple(*l2) ? "exceptional" : "generic";
        out.classes.push_back({out.spheres[0]});
    } else if (std::holds_alternative<L3Link>(link)) {
        out.case_label = "generic";
        out.classes.push_back({SphereLabel::S1});
    } else {
        const auto& m = std::get<MontesinosLink>(link);
        if (is_elliptic_montesinos(m)) {
            out.case_label = "elliptic";
            out.classes.push_back({SphereLabel::P1});
        } else {
            out.case_label = "nonelliptic";
            out.exact = false;  // merge conditions are proved sufficient, conjectured complete
            UnionFind uf(6);
            for (auto [i, j] : montesinos_merge_edges(m)) uf.unite(i - 1, j - 1);
            std::array<std::vector<SphereLabel>, 6> blocks;
            for (int i = 0; i < 6; ++i)
                blocks[static_cast<size_t>(uf.find(i))].push_back(out.spheres[static_cast<size_t>(i)]);
            for (const auto& blk : blocks)
                if (!blk.empty()) out.classes.push_back(blk);
            std::sort(out.classes.begin(), out.classes.end(),
                      [](const auto& x, const auto& y) { return x.front() < y.front(); });
        }
    }
    out.mu = static_cast<int>(out.classes.size());
    return out;
}

std::vector<std::pair<int, int>> montesinos_merge_edges(const MontesinosLink& link) {
    if (is_elliptic_montesinos(link))
        throw std::invalid_argument("merge edges not applicable: link is elliptic");
    // conditions read off the residues beta_k mod alpha_k
    std::array<bool, 4> c1{}, c2{};
    for (int k = 1; k <= 3; ++k) {
        const Slope& s = link.slopes[static_cast<size_t>(k - 1)];
        Int r = floor_mod(s.num(), s.den());
        c1[static_cast<size_t>(k)] = (r == 1 || r == s.den() - 1);
        c2[static_cast<size_t>(k)] = (s.den() == 2);
    }
    std::vector<std::pair<int, int>> edges;
    auto add = [&](int i, int j, bool cond) {
        if (cond) edges.emplace_back(i, j);
    };
    add(1, 2, c2[1] || c2[2]);
    add(1, 4, c1[2]);
    add(1, 6, c1[1]);
    add(2, 3, c1[2]);
    add(2, 5, c1[1]);
    add(3, 4, c2[2] || c2[3]);
    add(3, 6, c1[3]);
    add(4, 5, c1[3]);
    add(5, 6, c2[1] || c2[3]);

    if (c1[1] && c1[2] && c1[3]) {
        // all six merge when b = sum beta_k/alpha_k - sum eps_k/alpha_k for
        // admissible signs (beta_k = eps_k mod alpha_k keeps each term integral)
        for (int mask = 0; mask < 8; ++mask) {
            Int total = 0;
            bool ok = true;
            for (int k = 1; k <= 3 && ok; ++k) {
                int eps = (mask >> (k - 1)) & 1 ? -1 : 1;
                const Slope& s = link.slopes[static_cast<size_t>(k - 1)];
                if (!divides(s.den(), s.num() - eps)) {
                    ok = false;
                    break;
                }
                total += (s.num() - eps) / s.den();
            }
            if (ok && total == link.b) {
                for (int i = 1; i <= 5; ++i) {
                    auto e = std::make_pair(i, i + 1);
                    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
                }
                break;
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// ---------------------------------------------------------------------------
// Heegaard counts

namespace {

Slope residue_slope(const Int& num, const Int& mod) {
    return Slope(mod_inverse(num, mod), mod);
}

bool is_pm_one(const Slope& normalized) {
    return normalized.num() == 1 || normalized.num() == normalized.den() - 1;
}

}  // namespace

ExceptionalDescriptor exceptional_family_member(int family, const Int& param) {
    ExceptionalDescriptor d;
    if (family == 1) {
        const Int& a = param;
        if (a < 7 || floor_mod(a, 2) != 1 || floor_mod(a, 3) == 0)
            throw std::invalid_argument("family 1 needs odd a >= 7 with gcd(a,3)=1");
        d.euler = Rational(-1, 6 * a);
        d.residues = {Slope(Int(1), Int(2)), residue_slope(-a, 3), residue_slope(6, a)};
    } else if (family == 2) {
        const Int& a = param;
        if (a < 7 || floor_mod(a, 3) == 0)
            throw std::invalid_argument("family 2 needs a >= 7 with gcd(a,3)=1");
        d.euler = Rational(-1, 6 * a);
        d.residues = {residue_slope(-1, 3), residue_slope(-a, 3), residue_slope(3, a)};
    } else if (family == 3) {
        const Int& b = param;
        if (b < 5 || floor_mod(b, 2) != 1)
            throw std::invalid_argument("family 3 needs odd b >= 5");
        d.euler = Rational(-1, 4 * b);
        d.residues = {Slope(Int(1), Int(2)), residue_slope(-b, 4), residue_slope(4, b)};
    } else {
        throw std::invalid_argument("exceptional family index must be 1, 2 or 3");
    }
    std::sort(d.residues.begin(), d.residues.end());
    return d;
}

std::optional<int> match_exceptional_descriptor(const Rational& euler, const SlopeTuple& residues) {
    if (residues.size() != 3) return std::nullopt;
    SlopeTuple sorted = residues;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Int> dens{sorted[0].den(), sorted[1].den(), sorted[2].den()};
    std::sort(dens.begin(), dens.end());
    auto try_family = [&](int family, const Int& param) -> bool {
        try {
            ExceptionalDescriptor d = exceptional_family_member(family, param);
            return d.euler == euler && d.residues == sorted;
        } catch (const std::invalid_argument&) {
            return false;
        }
    };
    if (dens[0] == 2 && dens[1] == 3 && try_family(1, dens[2])) return 1;
    if (dens[0] == 3 && dens[1] == 3 && try_family(2, dens[2])) return 2;
    if (dens[0] == 2 && dens[1] == 4 && try_family(3, dens[2])) return 3;
    return std::nullopt;
}

std::optional<int> match_exceptional(const SeifertInvariants& inv) {
    SeifertInvariants n = normalize_seifert(inv);
    return match_exceptional_descriptor(n.euler(), n.slopes);
}

HeegaardCount genus2_heegaard_count(const SeifertInvariants& inv) {
    if (inv.base != BaseSurface::Sphere || inv.slopes.size() != 3)
        throw std::invalid_argument(
            "genus2_heegaard_count: expected sphere base with exactly three fibers");
    SeifertInvariants n = normalize_seifert(inv);

    std::array<bool, 3> pm{};
    int t = 0;
    for (size_t i = 0; i < 3; ++i) {
        pm[i] = is_pm_one(n.slopes[i]);
        if (pm[i]) ++t;
    }

    static const std::array<std::pair<int, int>, 3> surfaces{
        std::make_pair(1, 2), std::make_pair(2, 3), std::make_pair(3, 1)};
    auto surf = [&](size_t i) {
        std::ostringstream os;
        os << "F(" << surfaces[i].first << "," << surfaces[i].second << ")";
        return os.str();
    };

    HeegaardCount out;
    if (t == 0) {
        out.count = 3;
        out.labels = {surf(0), surf(1), surf(2)};
        return out;
    }
    if (t == 1) {
        int k = 1 + static_cast<int>(std::find(pm.begin(), pm.end(), true) - pm.begin());
        std::string merged;
        for (size_t i = 0; i < 3; ++i) {
            if (surfaces[i].first == k || surfaces[i].second == k) {
                if (!merged.empty()) merged += "=";
                merged += surf(i);
            } else {
                out.labels.push_back(surf(i));
            }
        }
        out.labels.push_back(merged);
        out.count = 2;
        return out;
    }
    out.labels = {surf(0) + "=" + surf(1) + "=" + surf(2)};
    out.count = 1;
    if (auto family = match_exceptional_descriptor(n.euler(), n.slopes)) {
        out.count = 2;
        out.exceptional = true;
        out.exceptional_family = family;
        out.labels.push_back("horizontal");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elliptic symmetry groups

std::string symmetry_name_str(SymmetryName n) {
    switch (n) {
        case SymmetryName::Z2: return "Z2";
        case SymmetryName::Z2xZ2: return "Z2+Z2";
        default: return "Z2+D3";
    }
}

SymmetryGroup elliptic_symmetry_group(const MontesinosLink& link) {
    if (!is_elliptic_montesinos(link))
        throw std::invalid_argument("elliptic_symmetry_group: link is not elliptic");

    // canonicalize to 0 < beta < alpha; the m-formulas below are stated on
    // this normal form
    Int b = link.b;
    SlopeTuple slopes;
    for (const auto& s : link.slopes) {
        Int k = s.floor();
        slopes.push_back(Slope(s.num() - k * s.den(), s.den()));
        b -= k;
    }
    std::sort(slopes.begin(), slopes.end(),
              [](const Slope& x, const Slope& y) { return x.den() < y.den(); });

    using boost::multiprecision::gcd;
    const Int &d1 = slopes[0].den(), &d2 = slopes[1].den(), &d3 = slopes[2].den();

    if (d1 == 2 && d2 == 2) {
        // (i): L(b; 1/2, 1/2, beta/alpha), m = (-b+1) alpha + beta
        const Int& alpha = d3;
        const Int& beta = slopes[2].num();
        Int m = (1 - b) * alpha + beta;
        Int mabs = m < 0 ? Int(-m) : m;
        if (gcd(mabs, Int(2 * alpha)) == 1) {
            if (alpha == 2) return {SymmetryName::Z2xD3, {"psi1", "psi3"}};
            if (m != 1) return {SymmetryName::Z2xZ2, {"psi1", "psi2"}};
            if (floor_mod(alpha, 2) == 1) return {SymmetryName::Z2, {"psi1"}};
            return {SymmetryName::Z2xZ2, {"psi1", "psi2"}};
        }
        if (floor_mod(m, 2) == 0 && gcd(mabs, alpha) == 1)
            return {SymmetryName::Z2xZ2, {"psi1", "psi2"}};
        throw coverage_error("outside proposition coverage: gcd(m,2a)>1 and m not even-coprime");
    }
    if (d2 == 3 && d3 == 3) {
        // (ii): L(b; 1/2, beta2/3, beta3/3), m = -6b + 3 + 2(beta2+beta3)
        Int m = -6 * b + 3 + 2 * (slopes[1].num() + slopes[2].num());
        Int mabs = m < 0 ? Int(-m) : m;
        if (gcd(mabs, Int(12)) == 1 && m != 1)
            return {SymmetryName::Z2xZ2, {"psi1", "psi4"}};
        return {SymmetryName::Z2, {"psi1"}};
    }
    // (iii): (2,3,4) and (2,3,5)
    return {SymmetryName::Z2, {"psi1"}};
}

}  // namespace bridgekit

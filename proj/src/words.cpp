#include "bridgekit/words.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace bridgekit {

std::string SfsGroup::str() const {
    std::ostringstream os;
    os << "D(" << beta1 << "/" << alpha1 << "," << beta2 << "/" << alpha2 << ")";
    return os.str();
}

SfsGroup make_sfs_group(Int alpha1, Int beta1, Int alpha2, Int beta2) {
    using boost::multiprecision::gcd;
    if (alpha1 <= 1 || alpha2 <= 1)
        throw std::invalid_argument("SfsGroup: alpha_j must exceed 1");
    if (gcd(alpha1, beta1 < 0 ? Int(-beta1) : beta1) != 1 ||
        gcd(alpha2, beta2 < 0 ? Int(-beta2) : beta2) != 1)
        throw std::invalid_argument("SfsGroup: gcd(alpha_j, beta_j) must be 1");
    return SfsGroup{std::move(alpha1), std::move(beta1), std::move(alpha2), std::move(beta2)};
}

SfsGroup parse_sfs_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 4 || s[0] != 'D' || s[1] != '(' || s.back() != ')')
        throw std::invalid_argument("expected group of the form D(b1/a1,b2/a2)");
    std::string inner = s.substr(2, s.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected two slopes in D(...)");
    Slope s1 = Slope::parse(inner.substr(0, comma));
    Slope s2 = Slope::parse(inner.substr(comma + 1));
    return make_sfs_group(s1.den(), s1.num(), s2.den(), s2.num());
}

bool SfsWord::operator<(const SfsWord& o) const {
    if (hpow_ != o.hpow_) return hpow_ < o.hpow_;
    if (syllables_.size() != o.syllables_.size()) return syllables_.size() < o.syllables_.size();
    for (size_t i = 0; i < syllables_.size(); ++i) {
        if (syllables_[i].gen != o.syllables_[i].gen) return syllables_[i].gen < o.syllables_[i].gen;
        if (syllables_[i].exp != o.syllables_[i].exp) return syllables_[i].exp < o.syllables_[i].exp;
    }
    return false;
}

std::string SfsWord::str() const {
    if (is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syllables_) {
        if (!first) os << " ";
        first = false;
        os << "c" << s.gen;
        if (s.exp != 1) os << "^" << s.exp;
    }
    if (hpow_ != 0) {
        if (!first) os << " ";
        os << "h";
        if (hpow_ != 1) os << "^" << hpow_;
    }
    return os.str();
}

namespace {

// Accumulates letters into normal form.  Pushing c_gen^e merges with the top
// syllable, then reduces the exponent into (0, alpha) via c^alpha = h^-beta.
class Builder {
public:
    explicit Builder(const SfsGroup& g) : group_(g) {}

    void push_h(const Int& e) { hpow_ += e; }

    void push_c(int gen, Int e) {
        while (!stack_.empty() && stack_.back().gen == gen) {
            e += stack_.back().exp;
            stack_.pop_back();
        }
        const Int& alpha = group_.alpha(gen);
        Int q = floor_div(e, alpha);
        Int r = e - q * alpha;
        hpow_ -= q * group_.beta(gen);
        if (r != 0) stack_.push_back(Syllable{gen, std::move(r)});
    }

    void push(const std::pair<Gen, Int>& letter) {
        if (letter.first == Gen::H)
            push_h(letter.second);
        else
            push_c(static_cast<int>(letter.first), letter.second);
    }

    void push_word(const SfsWord& w) {
        for (const auto& s : w.syllables()) push_c(s.gen, s.exp);
        push_h(w.hpow());
    }

    SfsWord take() { return SfsWord(group_, std::move(stack_), std::move(hpow_)); }

private:
    SfsGroup group_;
    std::vector<Syllable> stack_;
    Int hpow_ = 0;
};

}  // namespace

SfsWord normalize(const SfsGroup& group, const RawWord& raw) {
    Builder b(group);
    for (const auto& letter : raw) b.push(letter);
    return b.take();
}

SfsWord identity_word(const SfsGroup& group) { return SfsWord(group, {}, 0); }

SfsWord multiply(const SfsWord& u, const SfsWord& v) {
    if (u.group() != v.group())
        throw std::invalid_argument("multiply: words from different groups");
    Builder b(u.group());
    b.push_word(u);
    b.push_word(v);
    return b.take();
}

SfsWord invert(const SfsWord& w) {
    Builder b(w.group());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        b.push_c(it->gen, -it->exp);
    b.push_h(-w.hpow());
    return b.take();
}

SfsWord parse_word(const SfsGroup& group, const std::string& text) {
    RawWord raw;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        Gen gen;
        size_t base_len;
        if (tok.rfind("c1", 0) == 0) {
            gen = Gen::C1;
            base_len = 2;
        } else if (tok.rfind("c2", 0) == 0) {
            gen = Gen::C2;
            base_len = 2;
        } else if (tok.rfind("h", 0) == 0) {
            gen = Gen::H;
            base_len = 1;
        } else {
            throw std::invalid_argument("unknown generator in word: '" + tok + "'");
        }
        Int exp = 1;
        if (tok.size() > base_len) {
            if (tok[base_len] != '^')
                throw std::invalid_argument("expected '^' in word token '" + tok + "'");
            try {
                exp = Int(tok.substr(base_len + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in word token '" + tok + "'");
            }
        }
        raw.emplace_back(gen, std::move(exp));
    }
    return normalize(group, raw);
}

// --------------------------------------------------------------------------
// Conjugacy in the quotient Z_a1 * Z_a2

namespace {

// Cyclically reduced syllable sequence of the quotient image.
std::vector<Syllable> cyclic_reduce_syllables(const SfsWord& w) {
    std::vector<Syllable> s = w.syllables();
    const SfsGroup& g = w.group();
    while (s.size() >= 2 && s.front().gen == s.back().gen) {
        int gen = s.front().gen;
        Int e = floor_mod(s.back().exp + s.front().exp, g.alpha(gen));
        s.erase(s.begin());
        s.pop_back();
        if (e != 0) s.push_back(Syllable{gen, std::move(e)});
    }
    return s;
}

}  // namespace

bool quotient_conjugate(const SfsWord& u, const SfsWord& v) {
    if (u.group() != v.group())
        throw std::invalid_argument("quotient_conjugate: words from different groups");
    auto a = cyclic_reduce_syllables(u);
    auto b = cyclic_reduce_syllables(v);
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    if (a.size() == 1) return a[0] == b[0];
    // even alternating length: compare all syllable rotations
    for (size_t shift = 0; shift < a.size(); ++shift) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i)
            ok = a[(shift + i) % a.size()] == b[i];
        if (ok) return true;
    }
    return false;
}

// --------------------------------------------------------------------------
// Fibers and the boundary subgroup

FiberData exceptional_fiber(const SfsGroup& group, int which) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("exceptional_fiber: which must be 1 or 2");
    const Int& alpha = group.alpha(which);
    const Int& beta = group.beta(which);
    Int gamma = floor_mod(-mod_inverse(beta, alpha), alpha);  // in (0, alpha)
    Int num = 1 + beta * gamma;
    if (!divides(alpha, num))
        throw std::logic_error("exceptional_fiber: determinant equation not solvable");
    return FiberData{std::move(gamma), num / alpha};
}

SfsWord fiber_word(const SfsGroup& group, int which) {
    FiberData f = exceptional_fiber(group, which);
    RawWord raw{{which == 1 ? Gen::C1 : Gen::C2, f.gamma}, {Gen::H, f.delta}};
    return normalize(group, raw);
}

SfsWord boundary_word(const SfsGroup& group, const Int& p, const Int& q) {
    RawWord raw;
    Int count = p < 0 ? Int(-p) : p;
    for (Int i = 0; i < count; ++i) {
        if (p > 0) {
            raw.push_back({Gen::C1, 1});
            raw.push_back({Gen::C2, 1});
        } else {
            raw.push_back({Gen::C2, -1});
            raw.push_back({Gen::C1, -1});
        }
    }
    raw.push_back({Gen::H, q});
    return normalize(group, raw);
}

std::optional<std::pair<Int, Int>> peripheral_membership(const SfsWord& w) {
    const auto& s = w.syllables();
    if (s.empty()) return std::make_pair(Int(0), w.hpow());
    if (s.size() % 2 != 0) return std::nullopt;
    // (c1c2)^p starts with c1 when p > 0 and with c2 when p < 0
    Int p = Int(s.size() / 2);
    if (s.front().gen == 2) p = -p;
    SfsWord target = boundary_word(w.group(), p, 0);
    if (target.syllables() != s) return std::nullopt;
    return std::make_pair(std::move(p), Int(w.hpow() - target.hpow()));
}

SfsWord build_w(const SfsGroup& group, const Int& a, const Int& b, const Int& c, const Int& d) {
    Builder out(group);
    out.push_word(boundary_word(group, a, b));
    out.push_word(fiber_word(group, 1));
    out.push_word(boundary_word(group, c, d));
    return out.take();
}

// --------------------------------------------------------------------------
// Solution sets

std::string target_str(WTarget t) {
    switch (t) {
        case WTarget::Eta1: return "eta1";
        case WTarget::Eta1Inv: return "eta1^-1";
        case WTarget::Eta2: return "eta2";
        default: return "eta2^-1";
    }
}

SfsWord target_word(const SfsGroup& group, WTarget t) {
    switch (t) {
        case WTarget::Eta1: return fiber_word(group, 1);
        case WTarget::Eta1Inv: return invert(fiber_word(group, 1));
        case WTarget::Eta2: return fiber_word(group, 2);
        default: return invert(fiber_word(group, 2));
    }
}

std::set<WSolution> predicted_solutions(const SfsGroup& group, const SolveWindow& window) {
    std::set<WSolution> out;
    const Int& A = window.ac_bound;
    const Int& B = window.bd_bound;
    if (A < 0 || B < 0) return out;
    auto emit = [&](Int a, const Int& b, Int c, Int d, WTarget t) {
        if (a > A || a < -A || c > A || c < -A) return;
        if (d > B || d < -B) return;
        out.insert(WSolution{std::move(a), b, std::move(c), std::move(d), t});
    };

    if (group.alpha1 == 2 && group.alpha2 == 2) {
        // Degenerate case: the quotient Z_2 * Z_2 is infinite dihedral and
        // (c1c2)^a c1 (c1c2)^c collapses iff c = a or c = a+1, for every a.
        // From x c1 x = c1 h^{-(b1+b2)} one gets, with sigma = b1 + b2 (even),
        //   w(a,b,a,  -b + a*sigma)                 = eta_1
        //   w(a,b,a,  -b + a*sigma - 1)             = eta_1^{-1}
        //   w(a,b,a+1,-b + a*sigma + sigma/2)       = eta_2
        //   w(a,b,a+1,-b + a*sigma + sigma/2 - 1)   = eta_2^{-1}
        Int sigma = group.beta1 + group.beta2;
        for (Int a = -A; a <= A; ++a)
            for (Int b = -B; b <= B; ++b) {
                emit(a, b, a, -b + a * sigma, WTarget::Eta1);
                emit(a, b, a, -b + a * sigma - 1, WTarget::Eta1Inv);
                emit(a, b, a + 1, -b + a * sigma + sigma / 2, WTarget::Eta2);
                emit(a, b, a + 1, -b + a * sigma + sigma / 2 - 1, WTarget::Eta2Inv);
            }
        return out;
    }

    for (Int b = -B; b <= B; ++b) {
        // (i) w(0,b,0,-b) = eta_1
        emit(0, b, 0, -b, WTarget::Eta1);
        // degenerate companion of (i): for alpha1 = 2, eta_1^{-1} is again
        // c1 h^*, so w(0,b,0,-b-1) = eta_1^{-1}
        if (group.alpha1 == 2) emit(0, b, 0, -b - 1, WTarget::Eta1Inv);
        for (int s : {1, -1}) {
            // (ii) needs beta1 = s + k1*alpha1 and alpha2 = 2; the two sign
            // branches are mirror images, d = -b + s(2 k1 + beta2)
            if (group.alpha2 == 2 && divides(group.alpha1, group.beta1 - s)) {
                Int k1 = (group.beta1 - s) / group.alpha1;
                emit(s, b, s, -b + s * (2 * k1 + group.beta2), WTarget::Eta1Inv);
            }
            // (iii) needs beta1 = -1 + k1*alpha1 and beta2 = s + k2*alpha2
            if (divides(group.alpha1, group.beta1 + 1) && divides(group.alpha2, group.beta2 - s)) {
                Int k1 = (group.beta1 + 1) / group.alpha1;
                Int k2 = (group.beta2 - s) / group.alpha2;
                emit(-1, b, 0, -b - k1 - k2, s == 1 ? WTarget::Eta2 : WTarget::Eta2Inv);
            }
            // (iv) needs beta1 = 1 + k1*alpha1 and beta2 = -s + k2*alpha2
            if (divides(group.alpha1, group.beta1 - 1) && divides(group.alpha2, group.beta2 + s)) {
                Int k1 = (group.beta1 - 1) / group.alpha1;
                Int k2 = (group.beta2 + s) / group.alpha2;
                emit(0, b, 1, -b + k1 + k2, s == 1 ? WTarget::Eta2 : WTarget::Eta2Inv);
            }
        }
    }
    return out;
}

std::set<WSolution> brute_force_solutions(const SfsGroup& group, const SolveWindow& window) {
    std::set<WSolution> out;
    const Int& A = window.ac_bound;
    const Int& B = window.bd_bound;
    if (A < 0 || B < 0) return out;
    const std::array<std::pair<WTarget, SfsWord>, 4> targets{
        std::make_pair(WTarget::Eta1, target_word(group, WTarget::Eta1)),
        std::make_pair(WTarget::Eta1Inv, target_word(group, WTarget::Eta1Inv)),
        std::make_pair(WTarget::Eta2, target_word(group, WTarget::Eta2)),
        std::make_pair(WTarget::Eta2Inv, target_word(group, WTarget::Eta2Inv))};
    for (Int a = -A; a <= A; ++a)
        for (Int c = -A; c <= A; ++c)
            for (Int b = -B; b <= B; ++b)
                for (Int d = -B; d <= B; ++d) {
                    SfsWord w = build_w(group, a, b, c, d);
                    for (const auto& [t, tw] : targets)
                        if (w == tw) out.insert(WSolution{a, b, c, d, t});
                }
    return out;
}

std::vector<std::array<Int, 4>> brute_force_identity_solutions(const SfsGroup& group,
                                                               const SolveWindow& window) {
    std::vector<std::array<Int, 4>> out;
    const Int& A = window.ac_bound;
    const Int& B = window.bd_bound;
    for (Int a = -A; a <= A; ++a)
        for (Int c = -A; c <= A; ++c)
            for (Int b = -B; b <= B; ++b)
                for (Int d = -B; d <= B; ++d)
                    if (build_w(group, a, b, c, d).is_identity())
                        out.push_back({a, b, c, d});
    return out;
}

SolveWindow parse_window(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("window must be 'A,B', e.g. '3,10'");
    try {
        SolveWindow w;
        w.ac_bound = Int(text.substr(0, comma));
        w.bd_bound = Int(text.substr(comma + 1));
        return w;
    } catch (const std::exception&) {
        throw std::invalid_argument("window must be 'A,B', e.g. '3,10'");
    }
}

}  // namespace bridgekit

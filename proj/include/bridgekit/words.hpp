#pragma once

// Word engine for pi_1 of a Seifert fibered space over the disk with two
// exceptional fibers,
//
//   pi_1(D(b1/a1, b2/a2)) = < c1, c2, h | [c1,h], [c2,h], c1^a1 h^b1, c2^a2 h^b2 >,
//
// a central extension of Z_a1 * Z_a2 by <h>.  Elements have a unique normal
// form: an alternating sequence of syllables c_i^e with 0 < e < a_i, times a
// central power of h.  On top of the normal form sit the boundary-subgroup
// membership test (pi_1(boundary) = <c1c2, h>), the exceptional fiber
// elements eta_i = c_i^gamma h^delta with a*delta - b*gamma = 1, and the
// solver for the conjugation equation
//
//   w(a,b,c,d) = {(c1c2)^a h^b} eta_1 {(c1c2)^c h^d} = eta_1^{+-1} or eta_2^{+-1},
//
// with a brute-force enumerator as an independent check of the closed-form
// solution families.

#include "bridgekit/rational.hpp"

#include <array>
#include <set>
#include <tuple>

namespace bridgekit {

struct SfsGroup {
    Int alpha1, beta1, alpha2, beta2;

    bool operator==(const SfsGroup& o) const = default;

    const Int& alpha(int which) const { return which == 1 ? alpha1 : alpha2; }
    const Int& beta(int which) const { return which == 1 ? beta1 : beta2; }

    std::string str() const;
};

// Validates a1, a2 > 1 and gcd(a_i, b_i) = 1.
SfsGroup make_sfs_group(Int alpha1, Int beta1, Int alpha2, Int beta2);

// "D(b1/a1,b2/a2)" text form.
SfsGroup parse_sfs_group(const std::string& text);

enum class Gen { C1 = 1, C2 = 2, H = 3 };

using RawWord = std::vector<std::pair<Gen, Int>>;

struct Syllable {
    int gen;  // 1 or 2
    Int exp;  // 0 < exp < alpha_gen

    bool operator==(const Syllable& o) const = default;
};

class SfsWord {
public:
    SfsWord() = default;
    SfsWord(SfsGroup group, std::vector<Syllable> syllables, Int hpow)
        : group_(std::move(group)), syllables_(std::move(syllables)), hpow_(std::move(hpow)) {}

    const SfsGroup& group() const { return group_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    const Int& hpow() const { return hpow_; }

    bool is_identity() const { return syllables_.empty() && hpow_ == 0; }

    bool operator==(const SfsWord& o) const = default;
    bool operator<(const SfsWord& o) const;

    std::string str() const;

private:
    SfsGroup group_{};
    std::vector<Syllable> syllables_;
    Int hpow_ = 0;
};

// Unique normal form of a raw word: h-letters are central, c-exponents are
// reduced mod alpha via c^alpha = h^-beta, adjacent equal-generator syllables
// merge; iterated to a fixpoint.
SfsWord normalize(const SfsGroup& group, const RawWord& raw);

SfsWord multiply(const SfsWord& u, const SfsWord& v);  // throws on group mismatch
SfsWord invert(const SfsWord& w);
SfsWord identity_word(const SfsGroup& group);

// Parses "c1^2 c2^-1 h^3" (space separated, caret exponents, "1" = identity).
SfsWord parse_word(const SfsGroup& group, const std::string& text);

// Conjugacy of the images of u and v in the quotient Z_a1 * Z_a2 = pi_1 / <h>,
// by cyclic reduction and rotation comparison of the syllable sequences.
bool quotient_conjugate(const SfsWord& u, const SfsWord& v);

// Exceptional fiber data: the canonical solution of a*delta - b*gamma = 1
// with gamma = -beta^{-1} mod alpha, 0 < gamma < alpha.
struct FiberData {
    Int gamma, delta;
};

FiberData exceptional_fiber(const SfsGroup& group, int which);

// eta_which = c_which^gamma h^delta as a normalized word.
SfsWord fiber_word(const SfsGroup& group, int which);

// (p, q) with w = (c1 c2)^p h^q, i.e. w lies in the boundary subgroup
// <c1c2, h>; detected by matching the quotient image against the normal form
// of (c1c2)^p and reading q off the residual h-power.
std::optional<std::pair<Int, Int>> peripheral_membership(const SfsWord& w);

// Normal form of (c1 c2)^p h^q.
SfsWord boundary_word(const SfsGroup& group, const Int& p, const Int& q);

// w(a,b,c,d) = {(c1c2)^a h^b} eta_1 {(c1c2)^c h^d}.
SfsWord build_w(const SfsGroup& group, const Int& a, const Int& b, const Int& c, const Int& d);

// --------------------------------------------------------------------------
// Solution sets of w(a,b,c,d) = eta_1^{+-1} / eta_2^{+-1}

enum class WTarget { Eta1, Eta1Inv, Eta2, Eta2Inv };

std::string target_str(WTarget t);
SfsWord target_word(const SfsGroup& group, WTarget t);

struct WSolution {
    Int a, b, c, d;
    WTarget target;

    auto tie() const { return std::tie(a, b, c, d, target); }
    bool operator==(const WSolution& o) const { return tie() == o.tie(); }
    bool operator<(const WSolution& o) const { return tie() < o.tie(); }
};

struct SolveWindow {
    Int ac_bound = 3;   // |a|, |c| <= ac_bound
    Int bd_bound = 10;  // |b|, |d| <= bd_bound
};

// The closed-form solution families, enumerated inside the window:
//  (i)   w(0,b,0,-b) = eta_1
//  (ii)  w(s,b,s,-b-2k1+s*beta2) = eta_1^{-1}       if beta1 = s+k1*alpha1, alpha2 = 2
//  (iii) w(-1,b,0,-b-k1-k2) = eta_2^{s}             if beta1 = -1+k1*alpha1, beta2 = s+k2*alpha2
//  (iv)  w(0,b,1,-b+k1+k2) = eta_2^{s}              if beta1 = 1+k1*alpha1, beta2 = -s+k2*alpha2
// for s in {+1,-1}.
std::set<WSolution> predicted_solutions(const SfsGroup& group, const SolveWindow& window);

// Independent oracle: evaluates w(a,b,c,d) on the whole window and compares
// normal forms against the four targets.
std::set<WSolution> brute_force_solutions(const SfsGroup& group, const SolveWindow& window);

// All window tuples with w(a,b,c,d) = 1 (expected empty: an exceptional
// fiber is not homotopic into the boundary).
std::vector<std::array<Int, 4>> brute_force_identity_solutions(const SfsGroup& group,
                                                               const SolveWindow& window);

// Reads "A,B" (e.g. "3,10") into a window.
SolveWindow parse_window(const std::string& text);

}  // namespace bridgekit

#pragma once

// Data model for the four 3-bridge arborescent link families, the link-spec
// text grammar, and Seifert invariants of the double branched covers.

#include "bridgekit/rational.hpp"

#include <variant>

namespace bridgekit {

// Family L1: two double-tangle columns, all alpha > 1.
struct L1Link {
    SlopeTuple pair1;  // (beta1/alpha1, beta1'/alpha1')
    SlopeTuple pair2;  // (beta2/alpha2, beta2'/alpha2')
};

// Family L2: two double-tangle columns around a middle tangle 1/alpha0,
// |alpha0| > 1.
struct L2Link {
    SlopeTuple pair1;
    Slope middle;  // stored reduced; equals 1/alpha0 or -1/|alpha0|
    SlopeTuple pair2;
};

// Family L3: a triple column and a (1/2, -n/(2n+1)) tail, |2n+1| > 1.
struct L3Link {
    SlopeTuple triple;
    SlopeTuple tail;
};

// Montesinos link M(b; s1, s2, s3), all denominators >= 2.  The integer b is
// stored literally; each operation reads it in the sign convention of the
// formula it implements (documented per operation).
struct MontesinosLink {
    Int b;
    SlopeTuple slopes;
};

using ArborescentLink = std::variant<L1Link, L2Link, L3Link, MontesinosLink>;

enum class LinkFamily { L1, L2, L3, Montesinos };

LinkFamily family_of(const ArborescentLink& link);
std::string family_name(LinkFamily f);

// Validated constructors; throw std::invalid_argument naming the violated
// invariant.
ArborescentLink make_l1(SlopeTuple pair1, SlopeTuple pair2);
ArborescentLink make_l2(SlopeTuple pair1, Slope middle, SlopeTuple pair2);
ArborescentLink make_l3(SlopeTuple triple, SlopeTuple tail);
ArborescentLink make_montesinos(Int b, SlopeTuple slopes);

// Link-spec grammar (whitespace insignificant):
//   link   := "L1(" pair "," pair ")"
//           | "L2(" pair "," "(" slope ")" "," pair ")"
//           | "L3(" triple "," pair ")"
//           | "M(" int ";" slope "," slope "," slope ")"
//   pair   := "(" slope "," slope ")"
//   triple := "(" slope "," slope "," slope ")"
//   slope  := int "/" int
// Syntax errors report the offending position; validation errors name the
// violated invariant.
ArborescentLink parse_link(const std::string& text);

// Canonical emission (no spaces, slopes reduced).  parse . emit = identity.
std::string emit_link(const ArborescentLink& link);

// n such that the link is equivalent to L2((-1/2,1/2),(1/n),(-1/2,1/2)),
// i.e. both pairs are ~ (-1/2,1/2); this is the non-simple exceptional link.
std::optional<Int> is_exceptional_nonsimple(const L2Link& link);

// True iff the unordered denominator triple is spherical: (2,2,alpha) for
// some alpha >= 2, or (2,3,3), (2,3,4), (2,3,5).
bool is_elliptic_montesinos(const MontesinosLink& link);

// ---------------------------------------------------------------------------
// Seifert invariants

enum class BaseSurface { Disk, Sphere };

struct SeifertInvariants {
    BaseSurface base = BaseSurface::Sphere;
    Int b = 0;  // integral section twist (sphere base); 0 when unused
    SlopeTuple slopes;

    // e = -(b + sum beta_i/alpha_i); recomputed, never stored.
    Rational euler() const;
};

// Reduces every slope into 0 < beta < alpha, absorbing integer parts into b
// so the Euler number is unchanged.  Requires all alpha >= 2.
SeifertInvariants normalize_seifert(const SeifertInvariants& inv);

// True iff the normalized slope multisets and Euler numbers agree; with
// orientation_sensitive = false the mirror (beta -> alpha - beta, e -> -e)
// is also accepted.  Both inputs must be sphere-base with three slopes.
bool same_seifert_space(const SeifertInvariants& a, const SeifertInvariants& b,
                        bool orientation_sensitive);

// Mirror image: each slope beta/alpha -> (alpha-beta)/alpha, b -> -(b + r)
// so that e -> -e.
SeifertInvariants mirror_seifert(const SeifertInvariants& inv);

// "S2(b;s1,s2,s3)" text form used by the CLI.
SeifertInvariants parse_seifert(const std::string& text);
std::string emit_seifert(const SeifertInvariants& inv);

// ---------------------------------------------------------------------------
// Double branched cover description

// One Seifert piece of M2(L).  Disk/annulus/Moebius bases keep their slope
// lists; the sphere base also carries the section twist b.
struct SeifertPiece {
    enum class Base { Disk, Annulus, Moebius, Sphere };
    Base base;
    Int b = 0;  // sphere base only
    SlopeTuple slopes;
    std::string note;  // e.g. the knot-exterior identification of the piece

    std::string str() const;
};

struct BranchedCover {
    std::vector<SeifertPiece> pieces;
    // One tag per gluing torus, in order; always the fiber <-> horizontal swap.
    std::vector<std::string> gluings;
};

// Pieces of the double branched cover M2(L):
//  L1         -> D(pair1), D(pair2), glued fiber<->horizontal
//  L2 generic -> D(pair1), A(1/alpha0) = E(S(2 alpha0,1)), D(pair2)
//  L2 with a Klein-bottle column (pair ~ (-1/2,1/2))
//             -> D(other pair), Moebius(1/alpha0) = E(1-bridge knot)
//  L3         -> D(triple), D(1/2,-n/(2n+1)) = E(S(2n+1,1))
//  Montesinos -> S2(b; s1, s2, s3)
BranchedCover branched_cover_invariants(const ArborescentLink& link);

// ---------------------------------------------------------------------------
// Abstract group presentations (used by the orbifold builder)

using AbstractWord = std::vector<std::pair<std::string, Int>>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<AbstractWord> relators;  // every letter is a declared generator
};

std::string abstract_word_str(const AbstractWord& w);

}  // namespace bridgekit

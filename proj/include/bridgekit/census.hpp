#pragma once

// Classification engines: sphere enumeration per link family, pairwise
// isotopy decisions and class counts for L1, the Montesinos sphere merge
// graph, genus-2 Heegaard surface counts of small Seifert spaces, and the
// symmetry groups of elliptic Montesinos links.

#include "bridgekit/linkdata.hpp"

namespace bridgekit {

enum class SphereLabel { S1, S2, S3, S4, S0, P1, P2, P3, P4, P5, P6 };

std::string sphere_label_str(SphereLabel s);

struct SphereCensus {
    LinkFamily family;
    std::string case_label;  // "(a-1)".."(b-4)", "generic", "exceptional", "elliptic", ...
    std::vector<SphereLabel> spheres;
    std::vector<std::vector<SphereLabel>> classes;  // partition of spheres
    int mu = 0;                                     // number of classes
    bool exact = true;  // false only for the conjectured nonelliptic Montesinos count
};

// All 3-bridge spheres of the link:
//  L1          -> S1, S2, plus S3 iff pair1 ~ (1/2,-n/(2n+1)), plus S4 iff pair2 does
//  L2, L3      -> the single sphere (S0 for the exceptional non-simple link)
//  Montesinos  -> P1 (elliptic) or P1..P6 (nonelliptic)
std::vector<SphereLabel> enumerate_spheres(const ArborescentLink& link);

// Condition (a): some pair is ~ (eps/alpha, eps'/alpha').  S_i and S_j are
// isotopic iff {i,j} = {1,2} and condition (a) holds.  Throws if the link
// does not possess sphere i or j.
bool spheres_isotopic_l1(const L1Link& link, int i, int j);

// Full census with isotopy classes and mu.
SphereCensus census(const ArborescentLink& link);

// Sufficient merge conditions for the spheres P1..P6 of a nonelliptic
// Montesinos link, with (1-k): beta_k = +-1 mod alpha_k and (2-k): alpha_k = 2:
//   P1-P2: (2-1) or (2-2)   P1-P4: (1-2)   P1-P6: (1-1)
//   P2-P3: (1-2)            P2-P5: (1-1)
//   P3-P4: (2-2) or (2-3)   P3-P6: (1-3)
//   P4-P5: (1-3)            P5-P6: (2-1) or (2-3)
// and, additionally, all six merge when every (1-k) holds and
// b = sum beta_k/alpha_k - sum eps_k/alpha_k for some admissible signs.
// Throws on elliptic input.
std::vector<std::pair<int, int>> montesinos_merge_edges(const MontesinosLink& link);

// ---------------------------------------------------------------------------
// Genus-2 Heegaard surfaces of small Seifert fibered spaces

struct HeegaardCount {
    int count = 0;
    std::vector<std::string> labels;  // isotopy classes of vertical surfaces (+ "horizontal")
    bool exceptional = false;         // an extra horizontal surface exists
    std::optional<int> exceptional_family;  // 1..3 when exceptional
};

// With t = #{i : beta_i = +-1 mod alpha_i}:
//   t = 0  -> 3 surfaces F(1,2), F(2,3), F(3,1)
//   t = 1  -> 2 surfaces (the two containing the +-1 fiber merge)
//   t >= 2 -> 1 surface, except the three exceptional families below, which
//             carry one additional horizontal surface (count 2).
// Input must be sphere-base with exactly three fibers, all alpha >= 2.
HeegaardCount genus2_heegaard_count(const SeifertInvariants& inv);

// The three exceptional families, by Euler number and residue multiset:
//   1: e = -1/(6a), residues {1/2, (-a)^-1 mod 3 / 3, 6^-1 mod a / a}, a odd
//   2: e = -1/(6a), residues {(-1)^-1 mod 3 / 3, (-a)^-1 mod 3 / 3, 3^-1 mod a / a}
//   3: e = -1/(4b), residues {1/2, (-b)^-1 mod 4 / 4, 4^-1 mod b / b}, b odd
// with a >= 7, gcd(a,3) = 1 and b >= 5.
struct ExceptionalDescriptor {
    Rational euler;
    SlopeTuple residues;  // sorted, each in (0,1)
};

ExceptionalDescriptor exceptional_family_member(int family, const Int& param);

// Family index whose member descriptor equals (euler, residues); residues
// need not be pre-sorted.
std::optional<int> match_exceptional_descriptor(const Rational& euler, const SlopeTuple& residues);

// Same, reading the descriptor off normalized Seifert invariants.
std::optional<int> match_exceptional(const SeifertInvariants& inv);

// ---------------------------------------------------------------------------
// Symmetry groups of elliptic Montesinos links

// Raised when a valid-looking input falls outside the arithmetic subcases the
// symmetry classification enumerates.
struct coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SymmetryName { Z2, Z2xZ2, Z2xD3 };

std::string symmetry_name_str(SymmetryName n);

struct SymmetryGroup {
    SymmetryName name;
    std::vector<std::string> generators;  // subset of psi1..psi4
};

// Classification by denominator triple (slopes canonicalized to 0 < beta <
// alpha first; the stored b is read in the same convention as the m-formulas):
//  (2,2,alpha): m = (-b+1) alpha + beta
//  (2,3,3):     m = -6b + 3 + 2(beta2 + beta3)
//  (2,3,4), (2,3,5): Z2
// Throws coverage_error when (2,2,alpha) inputs satisfy neither
// gcd(m,2 alpha) = 1 nor (m even and gcd(m,alpha) = 1).
SymmetryGroup elliptic_symmetry_group(const MontesinosLink& link);

}  // namespace bridgekit

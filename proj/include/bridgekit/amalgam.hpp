#pragma once

// Free product of two disk SFS groups amalgamated over the boundary torus,
// glued by the fiber <-> horizontal swap: with x_i = c1c2 (horizontal loop)
// and h_i (fiber) on side i, the gluing sends x_1 -> h_2 and h_1 -> x_2.
// Consequently an edge element written (c1c2)^p h^q on one side equals
// (c1c2)^q h^p on the other.
//
// Words are alternating lists of vertex-group factors.  Reduction absorbs
// every factor lying in the edge subgroup into its neighbours (translating
// across the gluing), so a reduced word is either a pure edge element or an
// alternating list with no factor in the edge subgroup.  The surviving
// factor count is the length; after cyclic reduction it is a conjugacy
// invariant for lengths >= 2.

#include "bridgekit/words.hpp"

namespace bridgekit {

struct AmalgamGroup {
    SfsGroup vertex1, vertex2;

    const SfsGroup& vertex(int side) const { return side == 1 ? vertex1 : vertex2; }
    bool operator==(const AmalgamGroup& o) const = default;
};

struct AmalgamFactor {
    int side;  // 1 or 2
    SfsWord word;

    bool operator==(const AmalgamFactor& o) const = default;
};

// Reduced amalgam word.  Exactly one of the two shapes:
//  - pure edge element: factors empty, (edge_p, edge_q) in side-1
//    coordinates, i.e. the element (c1c2)^edge_p h^edge_q of vertex 1;
//  - alternating non-edge factors with edge_p = edge_q = 0.
class AmalgamWord {
public:
    AmalgamWord() = default;
    AmalgamWord(AmalgamGroup group, Int edge_p, Int edge_q, std::vector<AmalgamFactor> factors)
        : group_(std::move(group)),
          edge_p_(std::move(edge_p)),
          edge_q_(std::move(edge_q)),
          factors_(std::move(factors)) {}

    const AmalgamGroup& group() const { return group_; }
    const std::vector<AmalgamFactor>& factors() const { return factors_; }

    bool is_pure_edge() const { return factors_.empty(); }
    // Side-1 coordinates of a pure edge element.
    std::pair<Int, Int> edge_part() const { return {edge_p_, edge_q_}; }
    // The same element in the other side's coordinates (the gluing swaps).
    std::pair<Int, Int> edge_on_side(int side) const {
        return side == 1 ? std::make_pair(edge_p_, edge_q_) : std::make_pair(edge_q_, edge_p_);
    }

    bool is_identity() const { return factors_.empty() && edge_p_ == 0 && edge_q_ == 0; }

    // Number of surviving factors (0 for edge elements).
    size_t length() const { return factors_.size(); }

    bool operator==(const AmalgamWord& o) const = default;

    std::string str() const;

private:
    AmalgamGroup group_{};
    Int edge_p_ = 0, edge_q_ = 0;
    std::vector<AmalgamFactor> factors_;
};

// Reduces a raw factor list: merges same-side neighbours, translates edge
// factors across the gluing into their neighbours, iterated until no factor
// lies in the edge subgroup.
AmalgamWord amalgam_reduce(const AmalgamGroup& g, const std::vector<AmalgamFactor>& raw);

AmalgamWord amalgam_identity(const AmalgamGroup& g);
AmalgamWord amalgam_multiply(const AmalgamWord& u, const AmalgamWord& v);
AmalgamWord amalgam_invert(const AmalgamWord& w);
AmalgamWord amalgam_conjugate(const AmalgamWord& x, const AmalgamWord& w);  // x w x^-1

bool amalgam_equal(const AmalgamWord& u, const AmalgamWord& v);

// Single-factor word, reduced.
AmalgamWord amalgam_factor(const AmalgamGroup& g, int side, const SfsWord& w);

// Edge element given in side-1 coordinates.
AmalgamWord amalgam_edge(const AmalgamGroup& g, const Int& p, const Int& q);

// Commutator [u, v] = u v u^-1 v^-1.
AmalgamWord amalgam_commutator(const AmalgamWord& u, const AmalgamWord& v);

// Cyclically reduces (merging first/last factors on the same side, absorbing
// edge elements) and returns the surviving length; conjugacy invariant for
// results >= 2.
size_t cyclic_reduced_length(const AmalgamWord& w);

// Bounded conjugator search: candidates are edge elements with exponents
// bounded by edge_bound times products of at most `depth` exceptional-fiber
// factors.  A returned witness x satisfies x u x^-1 = v exactly; nullopt
// means "not found within bounds", not non-conjugacy.
std::optional<AmalgamWord> search_conjugator(const AmalgamGroup& g, const AmalgamWord& u,
                                             const AmalgamWord& v, int depth,
                                             const Int& edge_bound);

}  // namespace bridgekit

#pragma once

// pi-orbifold group presentations of Montesinos links and the generator
// images of the lifted half-rotation symmetry.
//
// For M(b; b1/a1, b2/a2, b3/a3) the presentation is
//
//   O(L) = < c1,...,c4, f | c_i^2, c_i f c_i^-1 f,
//                           (c_j c_{j+1})^{a_j} f^{b_j}, c1 c4 f^b >,
//
// and the symmetry acts by c1 -> c1 f, c_j -> (c1 f)(c_j f)(c1 f)^-1,
// f -> (c1 f) f (c1 f)^-1.  The images are verified in the abelianization:
// the exponent-sum vector of every relator image must lie in the integer row
// span of the relator matrix (checked via Hermite normal form).

#include "bridgekit/linkdata.hpp"

#include <map>

namespace bridgekit {

// The 12-relator presentation above (4 reflection relators, 4 commuting-type
// relators, 3 tangle relators, 1 closing relator).  The closing relator uses
// the stored b literally.
Presentation orbifold_presentation(const MontesinosLink& link);

// Generator -> freely reduced image word.  Throws std::logic_error
// "presentation/image mismatch" if the abelianized check fails (that would
// indicate an implementation bug, not a property of the link).
std::map<std::string, AbstractWord> rho_automorphism_images(const MontesinosLink& link);

// Exponent-sum vector of a word over the presentation's generator list.
std::vector<Int> abelianize(const Presentation& pres, const AbstractWord& word);

// Row-style Hermite normal form of an integer matrix (rows span the same
// lattice); zero rows dropped.
std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows);

// True iff v lies in the integer row span of the (HNF) rows.
bool in_row_span(const std::vector<std::vector<Int>>& hnf, std::vector<Int> v);

// Word of the image of `word` under the generator substitution, freely reduced.
AbstractWord substitute(const std::map<std::string, AbstractWord>& images,
                        const AbstractWord& word);

AbstractWord free_reduce(AbstractWord word);
AbstractWord word_inverse(const AbstractWord& word);

}  // namespace bridgekit

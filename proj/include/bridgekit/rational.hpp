#pragma once

// Exact rational arithmetic for tangle slopes.
//
// Slopes are stored as fully reduced fractions with positive denominator;
// equality tests throughout the library must be exact, so every integer is
// arbitrary precision and nothing is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bridgekit {

using Int = boost::multiprecision::cpp_int;

// Floor division/remainder (cpp_int's operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

// True iff m divides a exactly.
bool divides(const Int& m, const Int& a);

// Inverse of a mod m (m >= 2, gcd(a, m) = 1), returned in (0, m).
Int mod_inverse(const Int& a, const Int& m);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Largest integer <= value.
    Int floor() const { return floor_div(num_, den_); }

    // Residue in [0, 1); two slopes agree mod Z iff their residues are equal.
    Rational mod1() const;

    // Canonical text form "p/q", e.g. "-2/5", "0/1".
    std::string str() const;

    // Parses "p/q" (optional sign on either part, whitespace ignored).
    static Rational parse(const std::string& text);

private:
    Int num_;  // carries the sign
    Int den_;  // always >= 1
};

// A slope is a reduced rational carrying a tangle / Seifert index.
using Slope = Rational;
using SlopeTuple = std::vector<Slope>;

// Reduced slope with positive denominator; rejects q = 0.
Slope slope_normalize(const Int& p, const Int& q);

Rational tuple_sum(const SlopeTuple& t);
SlopeTuple reversed(const SlopeTuple& t);
std::string tuple_str(const SlopeTuple& t);

// The ~ relation on slope tuples: entrywise equal mod Z in the given or
// reversed order, and equal exact (not mod Z) sums.  Throws on length
// mismatch.
bool tuples_equivalent(const SlopeTuple& a, const SlopeTuple& b);

// First sign pair (eps, eps') in scan order (+,+),(+,-),(-,+),(-,-) with
// p ~ (eps/alpha, eps'/alpha'), testing both assignments of the two
// denominators.  Requires both denominators > 1.
std::optional<std::pair<int, int>> matches_epsilon_pattern(const SlopeTuple& p);

// n with |2n+1| > 1 such that p ~ (1/2, -n/(2n+1)), if one exists.  The
// candidates are finite: once one coordinate is assigned the denominator 2,
// |2n+1| must equal the other (normalized) denominator alpha', leaving
// n = (alpha'-1)/2 and n = (-alpha'-1)/2.  Requires both denominators > 1.
std::optional<Int> matches_half_pattern(const SlopeTuple& p);

// The tuple (1/2, -n/(2n+1)).
SlopeTuple half_pattern_tuple(const Int& n);

}  // namespace bridgekit

#include "bridgekit/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace bridgekit {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(const Int& a, const Int& b) {
    return a - floor_div(a, b) * b;
}

bool divides(const Int& m, const Int& a) {
    if (m == 0) return a == 0;
    return a % m == 0;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    Int r0 = m, r1 = floor_mod(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return floor_mod(t0, m);
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("degenerate slope: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::mod1() const {
    return Rational(floor_mod(num_, den_), den_);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_ << "/" << den_;
    return os.str();
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        return slope_normalize(p, q);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed slope '" + text + "'");
    }
}

Slope slope_normalize(const Int& p, const Int& q) {
    return Slope(p, q);  // constructor reduces and fixes the sign
}

Rational tuple_sum(const SlopeTuple& t) {
    Rational s;
    for (const auto& x : t) s = s + x;
    return s;
}

SlopeTuple reversed(const SlopeTuple& t) {
    return SlopeTuple(t.rbegin(), t.rend());
}

std::string tuple_str(const SlopeTuple& t) {
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += t[i].str();
    }
    return out + ")";
}

bool tuples_equivalent(const SlopeTuple& a, const SlopeTuple& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("tuples_equivalent: length mismatch");
    if (tuple_sum(a) != tuple_sum(b)) return false;
    auto residues_match = [](const SlopeTuple& x, const SlopeTuple& y) {
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i].mod1() != y[i].mod1()) return false;
        return true;
    };
    return residues_match(a, b) || residues_match(a, reversed(b));
}

std::optional<std::pair<int, int>> matches_epsilon_pattern(const SlopeTuple& p) {
    if (p.size() != 2)
        throw std::invalid_argument("matches_epsilon_pattern: tuple must have length 2");
    if (p[0].den() <= 1 || p[1].den() <= 1)
        throw std::invalid_argument("matches_epsilon_pattern: denominators must exceed 1");
    const Int& a0 = p[0].den();
    const Int& a1 = p[1].den();
    static const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const auto& s : signs) {
        SlopeTuple given{Slope(Int(s[0]), a0), Slope(Int(s[1]), a1)};
        if (tuples_equivalent(p, given)) return std::make_pair(s[0], s[1]);
        SlopeTuple swapped{Slope(Int(s[0]), a1), Slope(Int(s[1]), a0)};
        if (tuples_equivalent(p, swapped)) return std::make_pair(s[0], s[1]);
    }
    return std::nullopt;
}

SlopeTuple half_pattern_tuple(const Int& n) {
    return SlopeTuple{Slope(Int(1), Int(2)), Slope(-n, 2 * n + 1)};
}

std::optional<Int> matches_half_pattern(const SlopeTuple& p) {
    if (p.size() != 2)
        throw std::invalid_argument("matches_half_pattern: tuple must have length 2");
    if (p[0].den() <= 1 || p[1].den() <= 1)
        throw std::invalid_argument("matches_half_pattern: denominators must exceed 1");
    for (int which : {1, 0}) {
        const Int& other_den = p[which].den();
        for (const Int& numer : {Int(other_den - 1), Int(-other_den - 1)}) {
            if (!divides(Int(2), numer)) continue;
            Int n = numer / 2;
            if (2 * n + 1 == 1 || 2 * n + 1 == -1) continue;
            if (tuples_equivalent(p, half_pattern_tuple(n))) return n;
        }
    }
    return std::nullopt;
}

}  // namespace bridgekit

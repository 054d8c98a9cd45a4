#include "bridgekit/linkdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bridgekit {

namespace {

void require_pair(const SlopeTuple& pair, const char* what) {
    if (pair.size() != 2)
        throw std::invalid_argument(std::string(what) + " must contain exactly 2 slopes");
    for (const auto& s : pair)
        if (s.den() <= 1)
            throw std::invalid_argument(std::string("alpha must exceed 1 in ") + what);
}

const SlopeTuple& klein_pair() {
    static const SlopeTuple t{Slope(Int(-1), Int(2)), Slope(Int(1), Int(2))};
    return t;
}

}  // namespace

LinkFamily family_of(const ArborescentLink& link) {
    switch (link.index()) {
        case 0: return LinkFamily::L1;
        case 1: return LinkFamily::L2;
        case 2: return LinkFamily::L3;
        default: return LinkFamily::Montesinos;
    }
}

std::string family_name(LinkFamily f) {
    switch (f) {
        case LinkFamily::L1: return "L1";
        case LinkFamily::L2: return "L2";
        case LinkFamily::L3: return "L3";
        default: return "Montesinos";
    }
}

ArborescentLink make_l1(SlopeTuple pair1, SlopeTuple pair2) {
    require_pair(pair1, "L1 pair 1");
    require_pair(pair2, "L1 pair 2");
    return L1Link{std::move(pair1), std::move(pair2)};
}

ArborescentLink make_l2(SlopeTuple pair1, Slope middle, SlopeTuple pair2) {
    require_pair(pair1, "L2 pair 1");
    require_pair(pair2, "L2 pair 2");
    if (middle.num() != 1 && middle.num() != -1)
        throw std::invalid_argument("L2 middle tangle must be of the form 1/alpha0");
    if (middle.den() <= 1)
        throw std::invalid_argument("|alpha0|>1 violated in L2 middle tangle");
    return L2Link{std::move(pair1), std::move(middle), std::move(pair2)};
}

ArborescentLink make_l3(SlopeTuple triple, SlopeTuple tail) {
    if (triple.size() != 3)
        throw std::invalid_argument("L3 triple must contain exactly 3 slopes");
    for (const auto& s : triple)
        if (s.den() <= 1)
            throw std::invalid_argument("alpha must exceed 1 in L3 triple");
    require_pair(tail, "L3 tail");
    auto n = matches_half_pattern(tail);
    if (!n)
        throw std::invalid_argument(
            "L3 tail must be equivalent to (1/2,-n/(2n+1)) with |2n+1|>1");
    return L3Link{std::move(triple), std::move(tail)};
}

ArborescentLink make_montesinos(Int b, SlopeTuple slopes) {
    if (slopes.size() != 3)
        throw std::invalid_argument("Montesinos link must have exactly 3 tangles");
    for (const auto& s : slopes)
        if (s.den() < 2)
            throw std::invalid_argument("alpha must be >= 2 in every Montesinos tangle");
    return MontesinosLink{std::move(b), std::move(slopes)};
}

// --------------------------------------------------------------------------
// Parser: tiny recursive descent over the link-spec grammar.

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        return Int(text_.substr(start, pos_ - start));
    }

    Slope slope() {
        Int p = integer();
        expect('/');
        Int q = integer();
        return slope_normalize(p, q);
    }

    SlopeTuple tuple(size_t len) {
        expect('(');
        SlopeTuple out;
        out.push_back(slope());
        while (out.size() < len) {
            expect(',');
            out.push_back(slope());
        }
        expect(')');
        return out;
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream os;
        os << "link syntax error at position " << pos_ << ": " << what;
        throw std::invalid_argument(os.str());
    }

    bool match_keyword(const std::string& kw) {
        skip_ws();
        if (text_.compare(pos_, kw.size(), kw) == 0) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

ArborescentLink parse_link(const std::string& text) {
    Cursor cur(text);
    if (cur.match_keyword("L1")) {
        cur.expect('(');
        SlopeTuple p1 = cur.tuple(2);
        cur.expect(',');
        SlopeTuple p2 = cur.tuple(2);
        cur.expect(')');
        cur.finish();
        return make_l1(std::move(p1), std::move(p2));
    }
    if (cur.match_keyword("L2")) {
        cur.expect('(');
        SlopeTuple p1 = cur.tuple(2);
        cur.expect(',');
        cur.expect('(');
        Slope mid = cur.slope();
        cur.expect(')');
        cur.expect(',');
        SlopeTuple p2 = cur.tuple(2);
        cur.expect(')');
        cur.finish();
        return make_l2(std::move(p1), std::move(mid), std::move(p2));
    }
    if (cur.match_keyword("L3")) {
        cur.expect('(');
        SlopeTuple triple = cur.tuple(3);
        cur.expect(',');
        SlopeTuple tail = cur.tuple(2);
        cur.expect(')');
        cur.finish();
        return make_l3(std::move(triple), std::move(tail));
    }
    if (cur.match_keyword("M")) {
        cur.expect('(');
        Int b = cur.integer();
        cur.expect(';');
        SlopeTuple slopes;
        slopes.push_back(cur.slope());
        cur.expect(',');
        slopes.push_back(cur.slope());
        cur.expect(',');
        slopes.push_back(cur.slope());
        cur.expect(')');
        cur.finish();
        return make_montesinos(std::move(b), std::move(slopes));
    }
    cur.fail("expected one of L1, L2, L3, M");
}

std::string emit_link(const ArborescentLink& link) {
    std::ostringstream os;
    if (const auto* l1 = std::get_if<L1Link>(&link)) {
        os << "L1(" << tuple_str(l1->pair1) << "," << tuple_str(l1->pair2) << ")";
    } else if (const auto* l2 = std::get_if<L2Link>(&link)) {
        os << "L2(" << tuple_str(l2->pair1) << ",(" << l2->middle.str() << "),"
           << tuple_str(l2->pair2) << ")";
    } else if (const auto* l3 = std::get_if<L3Link>(&link)) {
        os << "L3(" << tuple_str(l3->triple) << "," << tuple_str(l3->tail) << ")";
    } else {
        const auto& m = std::get<MontesinosLink>(link);
        os << "M(" << m.b << ";";
        for (size_t i = 0; i < m.slopes.size(); ++i) {
            if (i) os << ",";
            os << m.slopes[i].str();
        }
        os << ")";
    }
    return os.str();
}

std::optional<Int> is_exceptional_nonsimple(const L2Link& link) {
    if (!tuples_equivalent(link.pair1, klein_pair())) return std::nullopt;
    if (!tuples_equivalent(link.pair2, klein_pair())) return std::nullopt;
    // middle = 1/n with the sign of n on the denominator side
    return link.middle.num() > 0 ? link.middle.den() : -link.middle.den();
}

bool is_elliptic_montesinos(const MontesinosLink& link) {
    std::vector<Int> d{link.slopes[0].den(), link.slopes[1].den(), link.slopes[2].den()};
    std::sort(d.begin(), d.end());
    if (d[0] == 2 && d[1] == 2) return true;  // (2,2,alpha)
    return d[0] == 2 && d[1] == 3 && (d[2] == 3 || d[2] == 4 || d[2] == 5);
}

// --------------------------------------------------------------------------
// Seifert invariants

Rational SeifertInvariants::euler() const {
    return -(Rational(b) + tuple_sum(slopes));
}

SeifertInvariants normalize_seifert(const SeifertInvariants& inv) {
    SeifertInvariants out{inv.base, inv.b, {}};
    for (const auto& s : inv.slopes) {
        if (s.den() < 2)
            throw std::invalid_argument("normalize_seifert: all alpha must be >= 2");
        Int k = s.floor();
        out.slopes.push_back(Slope(s.num() - k * s.den(), s.den()));
        out.b += k;  // beta/alpha lost k, b gains k: Euler number unchanged
    }
    return out;
}

SeifertInvariants mirror_seifert(const SeifertInvariants& inv) {
    SeifertInvariants out{inv.base, -(inv.b + Int(inv.slopes.size())), {}};
    for (const auto& s : inv.slopes)
        out.slopes.push_back(Slope(s.den() - s.num(), s.den()));
    return out;
}

namespace {

std::vector<Slope> sorted_slopes(const SeifertInvariants& inv) {
    std::vector<Slope> v = inv.slopes;
    std::sort(v.begin(), v.end());
    return v;
}

bool same_normalized(const SeifertInvariants& a, const SeifertInvariants& b) {
    return a.euler() == b.euler() && sorted_slopes(a) == sorted_slopes(b);
}

}  // namespace

bool same_seifert_space(const SeifertInvariants& a, const SeifertInvariants& b,
                        bool orientation_sensitive) {
    if (a.base != b.base)
        throw std::invalid_argument("same_seifert_space: base surface mismatch");
    if (a.base != BaseSurface::Sphere || a.slopes.size() != 3 || b.slopes.size() != 3)
        throw std::invalid_argument("same_seifert_space: expected sphere base with 3 slopes");
    SeifertInvariants na = normalize_seifert(a);
    SeifertInvariants nb = normalize_seifert(b);
    if (same_normalized(na, nb)) return true;
    if (!orientation_sensitive) return same_normalized(na, normalize_seifert(mirror_seifert(nb)));
    return false;
}

SeifertInvariants parse_seifert(const std::string& text) {
    Cursor cur(text);
    if (!cur.match_keyword("S2")) cur.fail("expected 'S2'");
    cur.expect('(');
    SeifertInvariants inv;
    inv.base = BaseSurface::Sphere;
    inv.b = cur.integer();
    cur.expect(';');
    inv.slopes.push_back(cur.slope());
    while (cur.try_consume(',')) inv.slopes.push_back(cur.slope());
    cur.expect(')');
    cur.finish();
    return inv;
}

std::string emit_seifert(const SeifertInvariants& inv) {
    std::ostringstream os;
    os << (inv.base == BaseSurface::Sphere ? "S2(" : "D(");
    if (inv.base == BaseSurface::Sphere) os << inv.b << ";";
    for (size_t i = 0; i < inv.slopes.size(); ++i) {
        if (i) os << ",";
        os << inv.slopes[i].str();
    }
    os << ")";
    return os.str();
}

// --------------------------------------------------------------------------
// Double branched cover

std::string SeifertPiece::str() const {
    std::ostringstream os;
    switch (base) {
        case Base::Disk: os << "D("; break;
        case Base::Annulus: os << "A("; break;
        case Base::Moebius: os << "Mo("; break;
        case Base::Sphere: os << "S2(" << b << ";"; break;
    }
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (i) os << ",";
        os << slopes[i].str();
    }
    os << ")";
    return os.str();
}

namespace {

SeifertPiece disk_piece(const SlopeTuple& slopes, std::string note = {}) {
    return SeifertPiece{SeifertPiece::Base::Disk, Int(0), slopes, std::move(note)};
}

const char* kFiberHorizontal = "fiber<->horizontal";

}  // namespace

BranchedCover branched_cover_invariants(const ArborescentLink& link) {
    BranchedCover out;
    if (const auto* l1 = std::get_if<L1Link>(&link)) {
        out.pieces = {disk_piece(l1->pair1), disk_piece(l1->pair2)};
        out.gluings = {kFiberHorizontal};
    } else if (const auto* l2 = std::get_if<L2Link>(&link)) {
        // A column ~ (-1/2,1/2) is the twisted I-bundle over the Klein
        // bottle; its union with the middle annulus piece re-fibers over the
        // Moebius band, giving the two-piece decomposition (M1-b).
        bool k1 = tuples_equivalent(l2->pair1, klein_pair());
        bool k2 = tuples_equivalent(l2->pair2, klein_pair());
        std::ostringstream knot;
        knot << "E(S(" << 2 * (l2->middle.num() > 0 ? l2->middle.den() : -l2->middle.den())
             << ",1))";
        if (k1 || k2) {
            const SlopeTuple& other = k2 ? l2->pair1 : l2->pair2;
            out.pieces = {disk_piece(other),
                          SeifertPiece{SeifertPiece::Base::Moebius, Int(0),
                                       SlopeTuple{l2->middle}, "E(1-bridge knot in lens space)"}};
            out.gluings = {kFiberHorizontal};
        } else {
            out.pieces = {disk_piece(l2->pair1),
                          SeifertPiece{SeifertPiece::Base::Annulus, Int(0),
                                       SlopeTuple{l2->middle}, knot.str()},
                          disk_piece(l2->pair2)};
            out.gluings = {kFiberHorizontal, kFiberHorizontal};
        }
    } else if (const auto* l3 = std::get_if<L3Link>(&link)) {
        Int n = *matches_half_pattern(l3->tail);
        std::ostringstream knot;
        knot << "E(S(" << 2 * n + 1 << ",1))";
        out.pieces = {disk_piece(l3->triple), disk_piece(l3->tail, knot.str())};
        out.gluings = {kFiberHorizontal};
    } else {
        const auto& m = std::get<MontesinosLink>(link);
        out.pieces = {SeifertPiece{SeifertPiece::Base::Sphere, m.b, m.slopes, {}}};
    }
    return out;
}

std::string abstract_word_str(const AbstractWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i].first;
        if (w[i].second != 1) os << "^" << w[i].second;
    }
    return os.str();
}

}  // namespace bridgekit

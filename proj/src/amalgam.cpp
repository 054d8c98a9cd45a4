#include "bridgekit/amalgam.hpp"

#include <sstream>

namespace bridgekit {

namespace {

int other_side(int side) { return side == 1 ? 2 : 1; }

// Left-to-right reducer.  Factors are pushed in order; edge factors are
// translated across the gluing and absorbed into the neighbouring factor.
class Reducer {
public:
    explicit Reducer(const AmalgamGroup& g) : group_(g) {}

    void push(int side, const SfsWord& w) { push_impl(side, w); }

    AmalgamWord take() {
        if (out_.empty())
            return AmalgamWord(group_, std::move(lead_p_), std::move(lead_q_), {});
        return AmalgamWord(group_, 0, 0, std::move(out_));
    }

private:
    void push_impl(int side, SfsWord w) {
        if (!out_.empty() && out_.back().side == side) {
            w = multiply(out_.back().word, w);
            out_.pop_back();
            push_impl(side, std::move(w));
            return;
        }
        auto edge = peripheral_membership(w);
        if (edge) {
            // translate (c1c2)^p h^q across the gluing: it is (c1c2)^q h^p
            // on the other side
            if (out_.empty()) {
                // accumulate into the pending edge element (side-1 coords)
                auto [p1, q1] = side == 1 ? *edge : std::make_pair(edge->second, edge->first);
                lead_p_ += p1;
                lead_q_ += q1;
                return;
            }
            int prev = out_.back().side;  // == other_side(side)
            SfsWord translated = boundary_word(group_.vertex(prev), edge->second, edge->first);
            SfsWord merged = multiply(out_.back().word, translated);
            out_.pop_back();
            push_impl(prev, std::move(merged));
            return;
        }
        if (out_.empty() && (lead_p_ != 0 || lead_q_ != 0)) {
            // fold the pending edge element into the first real factor
            auto [p, q] = side == 1 ? std::make_pair(lead_p_, lead_q_)
                                    : std::make_pair(lead_q_, lead_p_);
            lead_p_ = 0;
            lead_q_ = 0;
            w = multiply(boundary_word(group_.vertex(side), p, q), w);
            // an edge element times a non-edge factor stays non-edge
        }
        out_.push_back(AmalgamFactor{side, std::move(w)});
    }

    AmalgamGroup group_;
    Int lead_p_ = 0, lead_q_ = 0;
    std::vector<AmalgamFactor> out_;
};

}  // namespace

std::string AmalgamWord::str() const {
    std::ostringstream os;
    if (is_pure_edge()) {
        os << "edge(x^" << edge_p_ << " h^" << edge_q_ << " on side 1)";
        return os.str();
    }
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " | ";
        os << "[" << factors_[i].side << "] " << factors_[i].word.str();
    }
    return os.str();
}

AmalgamWord amalgam_reduce(const AmalgamGroup& g, const std::vector<AmalgamFactor>& raw) {
    Reducer r(g);
    for (const auto& f : raw) {
        if (f.side != 1 && f.side != 2)
            throw std::invalid_argument("amalgam factor side must be 1 or 2");
        if (f.word.group() != g.vertex(f.side))
            throw std::invalid_argument("amalgam factor word built in the wrong vertex group");
        r.push(f.side, f.word);
    }
    return r.take();
}

AmalgamWord amalgam_identity(const AmalgamGroup& g) { return AmalgamWord(g, 0, 0, {}); }

namespace {

// Flattens a reduced word back into raw factors (edge part as a side-1 factor).
void append_raw(std::vector<AmalgamFactor>& raw, const AmalgamWord& w) {
    auto [p, q] = w.edge_part();
    if (p != 0 || q != 0)
        raw.push_back(AmalgamFactor{1, boundary_word(w.group().vertex1, p, q)});
    for (const auto& f : w.factors()) raw.push_back(f);
}

}  // namespace

AmalgamWord amalgam_multiply(const AmalgamWord& u, const AmalgamWord& v) {
    if (u.group() != v.group())
        throw std::invalid_argument("amalgam_multiply: different amalgams");
    std::vector<AmalgamFactor> raw;
    append_raw(raw, u);
    append_raw(raw, v);
    return amalgam_reduce(u.group(), raw);
}

AmalgamWord amalgam_invert(const AmalgamWord& w) {
    std::vector<AmalgamFactor> raw;
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
        raw.push_back(AmalgamFactor{it->side, invert(it->word)});
    auto [p, q] = w.edge_part();
    if (p != 0 || q != 0)
        raw.push_back(AmalgamFactor{1, boundary_word(w.group().vertex1, -p, -q)});
    return amalgam_reduce(w.group(), raw);
}

AmalgamWord amalgam_conjugate(const AmalgamWord& x, const AmalgamWord& w) {
    return amalgam_multiply(amalgam_multiply(x, w), amalgam_invert(x));
}

bool amalgam_equal(const AmalgamWord& u, const AmalgamWord& v) {
    return amalgam_multiply(u, amalgam_invert(v)).is_identity();
}

AmalgamWord amalgam_factor(const AmalgamGroup& g, int side, const SfsWord& w) {
    return amalgam_reduce(g, {AmalgamFactor{side, w}});
}

AmalgamWord amalgam_edge(const AmalgamGroup& g, const Int& p, const Int& q) {
    return AmalgamWord(g, p, q, {});
}

AmalgamWord amalgam_commutator(const AmalgamWord& u, const AmalgamWord& v) {
    return amalgam_multiply(amalgam_multiply(u, v),
                            amalgam_multiply(amalgam_invert(u), amalgam_invert(v)));
}

size_t cyclic_reduced_length(const AmalgamWord& w) {
    AmalgamWord cur = w;
    while (cur.length() >= 2 && cur.factors().front().side == cur.factors().back().side) {
        // conjugate by the last factor: g_n (g_1 ... g_n) g_n^-1
        std::vector<AmalgamFactor> raw;
        raw.push_back(cur.factors().back());
        for (size_t i = 0; i + 1 < cur.factors().size(); ++i) raw.push_back(cur.factors()[i]);
        AmalgamWord next = amalgam_reduce(cur.group(), raw);
        if (next.length() >= cur.length()) break;  // no progress; already cyclically reduced
        cur = std::move(next);
    }
    return cur.length();
}

std::optional<AmalgamWord> search_conjugator(const AmalgamGroup& g, const AmalgamWord& u,
                                             const AmalgamWord& v, int depth,
                                             const Int& edge_bound) {
    // dictionary of single vertex factors: the four exceptional fibers
    std::vector<AmalgamWord> dict;
    for (int side : {1, 2})
        for (int which : {1, 2})
            for (bool inv : {false, true}) {
                SfsWord f = fiber_word(g.vertex(side), which);
                dict.push_back(amalgam_factor(g, side, inv ? invert(f) : f));
            }

    std::vector<AmalgamWord> tails{amalgam_identity(g)};
    if (depth >= 1)
        for (const auto& f : dict) tails.push_back(f);
    if (depth >= 2)
        for (const auto& f1 : dict)
            for (const auto& f2 : dict) {
                AmalgamWord prod = amalgam_multiply(f1, f2);
                if (prod.length() == 2) tails.push_back(prod);
            }

    for (Int p = -edge_bound; p <= edge_bound; ++p)
        for (Int q = -edge_bound; q <= edge_bound; ++q) {
            AmalgamWord e = amalgam_edge(g, p, q);
            for (const auto& tail : tails) {
                AmalgamWord x = amalgam_multiply(e, tail);
                if (amalgam_equal(amalgam_conjugate(x, u), v)) return x;
            }
        }
    return std::nullopt;
}

}  // namespace bridgekit

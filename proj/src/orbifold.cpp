#include "bridgekit/orbifold.hpp"

#include <algorithm>

namespace bridgekit {

namespace {

constexpr int kMaxRelatorLetters = 100000;

void append_power(AbstractWord& w, const std::string& gen, const Int& exp) {
    if (exp != 0) w.emplace_back(gen, exp);
}

}  // namespace

AbstractWord free_reduce(AbstractWord word) {
    AbstractWord out;
    for (auto& letter : word) {
        if (letter.second == 0) continue;
        if (!out.empty() && out.back().first == letter.first) {
            out.back().second += letter.second;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.push_back(std::move(letter));
        }
    }
    return out;
}

AbstractWord word_inverse(const AbstractWord& word) {
    AbstractWord out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.emplace_back(it->first, -it->second);
    return out;
}

Presentation orbifold_presentation(const MontesinosLink& link) {
    if (link.slopes.size() != 3)
        throw std::invalid_argument("orbifold_presentation: needs exactly 3 tangles");
    Presentation pres;
    pres.generators = {"c1", "c2", "c3", "c4", "f"};

    for (int i = 1; i <= 4; ++i)
        pres.relators.push_back({{"c" + std::to_string(i), 2}});
    for (int i = 1; i <= 4; ++i) {
        std::string c = "c" + std::to_string(i);
        pres.relators.push_back({{c, 1}, {"f", 1}, {c, -1}, {"f", 1}});
    }
    for (int j = 1; j <= 3; ++j) {
        const Slope& s = link.slopes[j - 1];
        if (s.den() > kMaxRelatorLetters)
            throw std::invalid_argument("orbifold_presentation: tangle index too large to expand");
        AbstractWord rel;
        long reps = static_cast<long>(s.den());
        for (long r = 0; r < reps; ++r) {
            rel.emplace_back("c" + std::to_string(j), 1);
            rel.emplace_back("c" + std::to_string(j + 1), 1);
        }
        append_power(rel, "f", s.num());
        pres.relators.push_back(std::move(rel));
    }
    AbstractWord closing{{"c1", 1}, {"c4", 1}};
    append_power(closing, "f", link.b);
    pres.relators.push_back(std::move(closing));
    return pres;
}

std::vector<Int> abelianize(const Presentation& pres, const AbstractWord& word) {
    std::vector<Int> v(pres.generators.size(), 0);
    for (const auto& [gen, exp] : word) {
        auto it = std::find(pres.generators.begin(), pres.generators.end(), gen);
        if (it == pres.generators.end())
            throw std::invalid_argument("abelianize: undeclared generator '" + gen + "'");
        v[static_cast<size_t>(it - pres.generators.begin())] += exp;
    }
    return v;
}

std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        // gcd all entries in this column below pivot_row into one row
        for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
            while (rows[r][col] != 0) {
                Int q = floor_div(rows[pivot_row][col], rows[r][col]);
                for (size_t c = 0; c < cols; ++c) rows[pivot_row][c] -= q * rows[r][c];
                std::swap(rows[pivot_row], rows[r]);
            }
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (size_t c = 0; c < cols; ++c) rows[pivot_row][c] = -rows[pivot_row][c];
        // reduce entries above the pivot into [0, pivot)
        for (size_t r = 0; r < pivot_row; ++r) {
            Int q = floor_div(rows[r][col], rows[pivot_row][col]);
            if (q != 0)
                for (size_t c = 0; c < cols; ++c) rows[r][c] -= q * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

bool in_row_span(const std::vector<std::vector<Int>>& hnf, std::vector<Int> v) {
    size_t cols = v.size();
    size_t row = 0;
    for (size_t col = 0; col < cols; ++col) {
        if (row < hnf.size() && hnf[row][col] != 0) {
            if (!divides(hnf[row][col], v[col])) return false;
            Int q = v[col] / hnf[row][col];
            for (size_t c = 0; c < cols; ++c) v[c] -= q * hnf[row][c];
            ++row;
        } else if (v[col] != 0) {
            return false;
        }
    }
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

AbstractWord substitute(const std::map<std::string, AbstractWord>& images,
                        const AbstractWord& word) {
    AbstractWord out;
    for (const auto& [gen, exp] : word) {
        auto it = images.find(gen);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for generator '" + gen + "'");
        const AbstractWord& img = it->second;
        AbstractWord inv = word_inverse(img);
        Int count = exp < 0 ? Int(-exp) : exp;
        for (Int i = 0; i < count; ++i) {
            const AbstractWord& piece = exp > 0 ? img : inv;
            out.insert(out.end(), piece.begin(), piece.end());
        }
    }
    return free_reduce(std::move(out));
}

std::map<std::string, AbstractWord> rho_automorphism_images(const MontesinosLink& link) {
    Presentation pres = orbifold_presentation(link);
    AbstractWord c1f{{"c1", 1}, {"f", 1}};
    AbstractWord c1f_inv = word_inverse(c1f);

    std::map<std::string, AbstractWord> images;
    images["c1"] = c1f;
    for (int j = 2; j <= 4; ++j) {
        std::string c = "c" + std::to_string(j);
        AbstractWord w = c1f;
        w.emplace_back(c, 1);
        w.emplace_back("f", 1);
        w.insert(w.end(), c1f_inv.begin(), c1f_inv.end());
        images[c] = free_reduce(std::move(w));
    }
    {
        AbstractWord w = c1f;
        w.emplace_back("f", 1);
        w.insert(w.end(), c1f_inv.begin(), c1f_inv.end());
        images["f"] = free_reduce(std::move(w));
    }

    // abelianized consistency check: every relator image must stay in the
    // integer span of the relator exponent-sum matrix
    std::vector<std::vector<Int>> rel_matrix;
    for (const auto& rel : pres.relators) rel_matrix.push_back(abelianize(pres, rel));
    auto hnf = hermite_normal_form(rel_matrix);
    for (const auto& rel : pres.relators) {
        AbstractWord image = substitute(images, rel);
        if (!in_row_span(hnf, abelianize(pres, image)))
            throw std::logic_error("presentation/image mismatch");
    }
    return images;
}

}  // namespace bridgekit

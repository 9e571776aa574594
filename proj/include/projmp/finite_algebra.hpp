#pragma once

// Finite-dimensional *-algebras over GF(2) given by structure constants.
//
// Elements are coefficient bit-vectors packed into a 32-bit mask (bit k is
// the coefficient of basis vector k), so dim is capped at 16 which also
// keeps exhaustive scans over all 2^dim elements cheap.

#include "projmp/fields.hpp"
#include "projmp/matrix_io.hpp"
#include "projmp/star_ring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace projmp {

struct AlgebraElement {
    std::uint32_t bits = 0;

    bool operator==(const AlgebraElement&) const = default;
};

class InvalidAlgebra : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class StructureConstantAlgebra {
public:
    using element = AlgebraElement;

    static constexpr std::size_t max_dim = 16;

    /// `mul[i][j]` is the product of basis vectors i and j, `star[i]` the
    /// image of basis vector i. Throws InvalidAlgebra unless the table is
    /// associative and unital and the involution is an anti-automorphism of
    /// order two.
    StructureConstantAlgebra(std::vector<std::string> labels, std::vector<std::vector<std::uint32_t>> mul,
                             std::vector<std::uint32_t> star, std::uint32_t one)
        : labels_(std::move(labels)), mul_(std::move(mul)), star_(std::move(star)), one_{one} {
        const std::size_t n = labels_.size();
        if (n == 0 || n > max_dim)
            throw InvalidAlgebra("algebra dimension must be in [1, 16]");
        if (mul_.size() != n || star_.size() != n)
            throw InvalidAlgebra("table sizes do not match the dimension");
        const std::uint32_t full = mask(n);
        for (const auto& row : mul_) {
            if (row.size() != n)
                throw InvalidAlgebra("multiplication table is not square");
            for (auto v : row)
                if (v & ~full)
                    throw InvalidAlgebra("product outside the basis");
        }
        for (auto v : star_)
            if (v & ~full)
                throw InvalidAlgebra("involution image outside the basis");
        if (one & ~full)
            throw InvalidAlgebra("unit outside the basis");
        self_check();
    }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<std::uint32_t>>& mul_table() const { return mul_; }
    const std::vector<std::uint32_t>& star_table() const { return star_; }

    element basis(std::size_t i) const { return {std::uint32_t{1} << i}; }

    element zero() const { return {}; }
    element one() const { return one_; }
    element add(element a, element b) const { return {a.bits ^ b.bits}; }
    element sub(element a, element b) const { return {a.bits ^ b.bits}; }
    element neg(element a) const { return a; }

    element mul(element a, element b) const {
        std::uint32_t r = 0;
        for (std::uint32_t x = a.bits; x; x &= x - 1) {
            const auto& row = mul_[static_cast<std::size_t>(std::countr_zero(x))];
            for (std::uint32_t y = b.bits; y; y &= y - 1)
                r ^= row[static_cast<std::size_t>(std::countr_zero(y))];
        }
        return {r};
    }

    element star(element a) const {
        std::uint32_t r = 0;
        for (std::uint32_t x = a.bits; x; x &= x - 1)
            r ^= star_[static_cast<std::size_t>(std::countr_zero(x))];
        return {r};
    }

    std::string id() const { return id_; }
    void set_id(std::string id) { id_ = std::move(id); }

    /// Sum of basis labels, e.g. "1+XY", or "0".
    std::string format(element a) const {
        if (a.bits == 0)
            return "0";
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i)
            if (a.bits >> i & 1u) {
                if (!s.empty())
                    s += "+";
                s += labels_[i];
            }
        return s;
    }

    /// Coefficient string, character k being the coefficient of basis k.
    std::string bitvector(element a) const {
        std::string s(dim(), '0');
        for (std::size_t i = 0; i < dim(); ++i)
            if (a.bits >> i & 1u)
                s[i] = '1';
        return s;
    }

    std::uint64_t cardinality() const { return std::uint64_t{1} << dim(); }
    element element_at(std::uint64_t index) const { return {static_cast<std::uint32_t>(index)}; }

    /// Label lookup for sums like "1+Y".
    element parse(const std::string& text) const {
        if (text == "0")
            return {};
        element r{};
        std::istringstream in(text);
        std::string term;
        while (std::getline(in, term, '+')) {
            auto it = std::find(labels_.begin(), labels_.end(), term);
            if (it == labels_.end())
                throw std::invalid_argument("unknown basis label '" + term + "'");
            r.bits ^= std::uint32_t{1} << (it - labels_.begin());
        }
        return r;
    }

    /// a*a = 0 forces a = 0, decided by scanning every element.
    bool is_star_reducing() const { return !star_reducing_witness().has_value(); }

    /// First nonzero a (in index order) with a*a = 0, if any.
    std::optional<element> star_reducing_witness() const {
        for (std::uint64_t i = 1; i < cardinality(); ++i) {
            element a = element_at(i);
            if (mul(star(a), a).bits == 0)
                return a;
        }
        return std::nullopt;
    }

private:
    static std::uint32_t mask(std::size_t n) { return n == 32 ? ~0u : (std::uint32_t{1} << n) - 1; }

    void self_check() const {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            element ei = basis(i);
            if (!(mul(one_, ei) == ei) || !(mul(ei, one_) == ei))
                throw InvalidAlgebra("unit law fails on basis " + labels_[i]);
            if (!(star(star(ei)) == ei))
                throw InvalidAlgebra("involution is not of order two on basis " + labels_[i]);
            for (std::size_t j = 0; j < n; ++j) {
                element ej = basis(j);
                if (!(star(mul(ei, ej)) == mul(star(ej), star(ei))))
                    throw InvalidAlgebra("involution is not anti-multiplicative on " + labels_[i] + ", " +
                                         labels_[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    element ek = basis(k);
                    if (!(mul(mul(ei, ej), ek) == mul(ei, mul(ej, ek))))
                        throw InvalidAlgebra("associativity fails on " + labels_[i] + ", " + labels_[j] + ", " +
                                             labels_[k]);
                }
            }
        }
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint32_t>> mul_;
    std::vector<std::uint32_t> star_;
    element one_;
    std::string id_ = "algebra";
};

namespace detail {

// Normal form of a word in X, Y modulo X^2 = X, Y^2 = Y, XYX = 0. Squares
// collapse first, leaving an alternating word; any alternating word of
// length >= 3 starting with X contains XYX, and one starting with Y of
// length >= 4 contains it too. Returns "" for the zero word and "1" for the
// empty word.
inline std::string reduce_xy_word(const std::string& w) {
    std::string alt;
    for (char c : w)
        if (alt.empty() || alt.back() != c)
            alt.push_back(c);
    if (alt.find("XYX") != std::string::npos)
        return "";
    return alt.empty() ? "1" : alt;
}

} // namespace detail

/// Z2<x, y> / (x^2 - x, y^2 - y, xyx) with the involution reversing words.
/// Basis {1, X, Y, XY, YX, YXY}.
inline StructureConstantAlgebra example26_algebra() {
    const std::vector<std::string> words = {"1", "X", "Y", "XY", "YX", "YXY"};
    auto index_of = [&](const std::string& w) -> std::uint32_t {
        if (w.empty())
            return 0;
        auto it = std::find(words.begin(), words.end(), w);
        if (it == words.end())
            throw std::logic_error("word outside the basis: " + w);
        return std::uint32_t{1} << (it - words.begin());
    };
    auto strip_one = [](const std::string& w) { return w == "1" ? std::string() : w; };
    const std::size_t n = words.size();
    std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
    std::vector<std::uint32_t> star(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = index_of(detail::reduce_xy_word(strip_one(words[i]) + strip_one(words[j])));
        std::string rev = strip_one(words[i]);
        std::reverse(rev.begin(), rev.end());
        star[i] = index_of(detail::reduce_xy_word(rev));
    }
    StructureConstantAlgebra alg(words, std::move(mul), std::move(star), 1u);
    alg.set_id("example26");
    return alg;
}

// Algebra description file:
//
//   algebra <dim> over GF(2)
//   label i = <name>          (optional, default e<i>)
//   mul i j = <bitvector>     (every pair, 0-based indices)
//   star i = <bitvector>      (every basis index)
//   one = <bitvector>
//
// A bitvector is `dim` characters of 0/1, character k being the coefficient
// of basis k. Blank lines and lines starting with '#' are ignored.

inline std::string write_algebra(const StructureConstantAlgebra& alg) {
    std::ostringstream os;
    const std::size_t n = alg.dim();
    os << "algebra " << n << " over GF(2)\n";
    for (std::size_t i = 0; i < n; ++i)
        os << "label " << i << " = " << alg.labels()[i] << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            os << "mul " << i << " " << j << " = " << alg.bitvector({alg.mul_table()[i][j]}) << "\n";
    for (std::size_t i = 0; i < n; ++i)
        os << "star " << i << " = " << alg.bitvector({alg.star_table()[i]}) << "\n";
    os << "one = " << alg.bitvector(alg.one()) << "\n";
    return os.str();
}

inline StructureConstantAlgebra read_algebra(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    bool have_header = false;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mul_set;
    std::vector<std::vector<std::uint32_t>> mul;
    std::vector<std::uint32_t> star;
    std::vector<bool> star_set;
    std::optional<std::uint32_t> one;

    auto fail = [&](std::size_t col, const std::string& what) -> ParseError { return {line_no, col, what}; };

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#')
            continue;
        auto index = [&](const detail::Token& t) {
            std::size_t v = 0;
            if (t.text.empty() || t.text.size() > 3)
                throw fail(t.column, "invalid index '" + t.text + "'");
            for (char c : t.text) {
                if (c < '0' || c > '9')
                    throw fail(t.column, "invalid index '" + t.text + "'");
                v = v * 10 + static_cast<std::size_t>(c - '0');
            }
            if (v >= dim)
                throw fail(t.column, "index " + t.text + " out of range");
            return v;
        };
        auto bitvec = [&](const detail::Token& t) {
            if (t.text.size() != dim)
                throw fail(t.column, "bitvector must have " + std::to_string(dim) + " digits");
            std::uint32_t v = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                if (t.text[k] == '1')
                    v |= std::uint32_t{1} << k;
                else if (t.text[k] != '0')
                    throw fail(t.column + k, "bitvector digit must be 0 or 1");
            }
            return v;
        };
        auto expect_eq = [&](std::size_t at) {
            if (toks.size() != at + 2 || toks[at].text != "=")
                throw fail(toks[std::min(at, toks.size() - 1)].column, "expected '= <bitvector>'");
        };
        const std::string& kw = toks[0].text;
        if (!have_header) {
            if (kw != "algebra" || toks.size() != 4 || toks[2].text != "over" || toks[3].text != "GF(2)")
                throw fail(toks[0].column, "expected 'algebra <dim> over GF(2)'");
            std::size_t v = 0;
            for (char c : toks[1].text) {
                if (c < '0' || c > '9' || v > 100)
                    throw fail(toks[1].column, "invalid dimension");
                v = v * 10 + static_cast<std::size_t>(c - '0');
            }
            if (v == 0 || v > StructureConstantAlgebra::max_dim)
                throw fail(toks[1].column, "dimension must be in [1, 16]");
            dim = v;
            have_header = true;
            labels.resize(dim);
            for (std::size_t i = 0; i < dim; ++i)
                labels[i] = "e" + std::to_string(i);
            mul.assign(dim, std::vector<std::uint32_t>(dim, 0));
            mul_set.assign(dim, std::vector<int>(dim, 0));
            star.assign(dim, 0);
            star_set.assign(dim, false);
        } else if (kw == "label") {
            if (toks.size() != 4 || toks[2].text != "=")
                throw fail(toks[0].column, "expected 'label <i> = <name>'");
            labels[index(toks[1])] = toks[3].text;
        } else if (kw == "mul") {
            if (toks.size() < 3)
                throw fail(toks[0].column, "expected 'mul <i> <j> = <bitvector>'");
            std::size_t i = index(toks[1]), j = index(toks[2]);
            expect_eq(3);
            mul[i][j] = bitvec(toks[4]);
            mul_set[i][j] = 1;
        } else if (kw == "star") {
            if (toks.size() < 2)
                throw fail(toks[0].column, "expected 'star <i> = <bitvector>'");
            std::size_t i = index(toks[1]);
            expect_eq(2);
            star[i] = bitvec(toks[3]);
            star_set[i] = true;
        } else if (kw == "one") {
            expect_eq(1);
            one = bitvec(toks[2]);
        } else {
            throw fail(toks[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!have_header)
        throw ParseError(line_no + 1, 1, "missing 'algebra' header");
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            if (!mul_set[i][j])
                throw ParseError(line_no + 1, 1, "missing 'mul " + std::to_string(i) + " " + std::to_string(j) + "'");
        if (!star_set[i])
            throw ParseError(line_no + 1, 1, "missing 'star " + std::to_string(i) + "'");
    }
    if (!one)
        throw ParseError(line_no + 1, 1, "missing 'one'");
    return StructureConstantAlgebra(std::move(labels), std::move(mul), std::move(star), *one);
}

inline StructureConstantAlgebra read_algebra(const std::string& text) {
    std::istringstream in(text);
    return read_algebra(in);
}

} // namespace projmp

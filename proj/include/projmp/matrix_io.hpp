#pragma once

// Matrix text format:
//
//   ring Q | ring QI | ring GF <p>
//   rows <m>
//   cols <n>
//   <m lines of n whitespace-separated entries>
//
// Rational entries are `a` or `a/b`; Gaussian rational entries are
// `re,im` with each part rational; GF entries are integers in [0, p).

#include "projmp/fields.hpp"
#include "projmp/matrix.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace projmp {

using AnyMatrix = std::variant<Matrix<RationalField>, Matrix<GaussianRationalField>, Matrix<PrimeField>>;

template <class Field>
std::string write_matrix(const Matrix<Field>& m) {
    std::ostringstream os;
    os << "ring " << m.field().id() << "\n";
    os << "rows " << m.rows() << "\n";
    os << "cols " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << m.field().format(m(i, j));
        }
        os << "\n";
    }
    return os.str();
}

inline std::string write_matrix(const AnyMatrix& m) {
    return std::visit([](const auto& x) { return write_matrix(x); }, m);
}

namespace detail {

struct Token {
    std::string text;
    std::size_t column = 0; // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank line, tokenized.
    std::vector<Token> next(const char* expecting) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            auto toks = tokenize(line);
            if (!toks.empty())
                return toks;
        }
        throw ParseError(line_no_ + 1, 1, std::string("unexpected end of input, expected ") + expecting);
    }

    std::size_t line() const { return line_no_; }

    void expect_end() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            auto toks = tokenize(line);
            if (!toks.empty())
                throw ParseError(line_no_, toks[0].column, "trailing content after matrix");
        }
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

inline std::size_t parse_dimension(LineReader& r, const char* keyword) {
    auto toks = r.next(keyword);
    if (toks[0].text != keyword)
        throw ParseError(r.line(), toks[0].column, std::string("expected '") + keyword + "'");
    if (toks.size() != 2)
        throw ParseError(r.line(), toks.size() > 2 ? toks[2].column : toks[0].column + toks[0].text.size(),
                         std::string("expected '") + keyword + " <count>'");
    const auto& t = toks[1];
    std::size_t v = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9')
            throw ParseError(r.line(), t.column, "invalid count '" + t.text + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
        if (v > 100000)
            throw ParseError(r.line(), t.column, "count too large");
    }
    if (v == 0)
        throw ParseError(r.line(), t.column, "count must be positive");
    return v;
}

template <class Field>
Matrix<Field> parse_body(LineReader& r, const Field& field, std::size_t rows, std::size_t cols) {
    Matrix<Field> m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto toks = r.next("matrix row");
        if (toks.size() != cols) {
            std::size_t col = toks.size() > cols ? toks[cols].column : toks.back().column;
            throw ParseError(r.line(), col,
                             "expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m(i, j) = field.parse(toks[j].text);
            } catch (const std::invalid_argument& e) {
                throw ParseError(r.line(), toks[j].column, "bad entry '" + toks[j].text + "': " + e.what());
            }
        }
    }
    r.expect_end();
    return m;
}

} // namespace detail

inline AnyMatrix read_matrix(std::istream& in) {
    detail::LineReader r(in);
    auto head = r.next("'ring' header");
    if (head[0].text != "ring")
        throw ParseError(r.line(), head[0].column, "expected 'ring'");
    if (head.size() < 2)
        throw ParseError(r.line(), head[0].column + 4, "missing ring kind");
    const auto& kind = head[1];
    enum { Q, QI, GF } which;
    std::uint32_t p = 0;
    if (kind.text == "Q" && head.size() == 2) {
        which = Q;
    } else if (kind.text == "QI" && head.size() == 2) {
        which = QI;
    } else if (kind.text == "GF") {
        if (head.size() != 3)
            throw ParseError(r.line(), kind.column, "expected 'ring GF <p>'");
        std::uint64_t v = 0;
        for (char c : head[2].text) {
            if (c < '0' || c > '9' || v > 1000000)
                throw ParseError(r.line(), head[2].column, "invalid modulus '" + head[2].text + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (!detail::is_prime(v) || v > 65521)
            throw ParseError(r.line(), head[2].column, "modulus " + head[2].text + " is not a supported prime");
        p = static_cast<std::uint32_t>(v);
        which = GF;
    } else {
        throw ParseError(r.line(), kind.column, "unknown ring '" + kind.text + "' (expected Q, QI or GF <p>)");
    }
    std::size_t rows = detail::parse_dimension(r, "rows");
    std::size_t cols = detail::parse_dimension(r, "cols");
    switch (which) {
    case Q:
        return detail::parse_body(r, RationalField{}, rows, cols);
    case QI:
        return detail::parse_body(r, GaussianRationalField{}, rows, cols);
    default:
        return detail::parse_body(r, PrimeField(p), rows, cols);
    }
}

inline AnyMatrix read_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

} // namespace projmp

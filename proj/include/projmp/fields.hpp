#pragma once

// Exact scalar fields used as matrix entries.
//
// A field object carries whatever runtime parameters it needs (the modulus of
// a prime field) and performs all scalar arithmetic. Values are plain
// canonical data, so `==` on values is exact structural equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace projmp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

// Parses `a` or `a/b` with decimal integers and an optional leading '-'.
// Throws std::invalid_argument with a short reason on failure.
inline Rational parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view t, bool allow_sign) {
        if (t.empty())
            throw std::invalid_argument("empty integer");
        std::size_t i = 0;
        if (allow_sign && t[0] == '-')
            i = 1;
        if (i == t.size())
            throw std::invalid_argument("missing digits");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw std::invalid_argument("unexpected character '" + std::string(1, t[j]) + "'");
        return BigInt(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(s, true));
    BigInt num = parse_int(s.substr(0, slash), true);
    BigInt den = parse_int(s.substr(slash + 1), false);
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

inline std::string format_rational(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace detail

/// The rationals, with trivial conjugation.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return Rational(v); }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type conj(const value_type& a) const { return a; }
    bool is_zero(const value_type& a) const { return a == 0; }

    std::string id() const { return "Q"; }
    std::string format(const value_type& a) const { return detail::format_rational(a); }
    value_type parse(std::string_view s) const { return detail::parse_rational(s); }

    bool operator==(const RationalField&) const = default;
};

struct GaussianRational {
    Rational re;
    Rational im;

    bool operator==(const GaussianRational&) const = default;
};

/// Q(i) with complex conjugation.
struct GaussianRationalField {
    using value_type = GaussianRational;

    value_type zero() const { return {0, 0}; }
    value_type one() const { return {1, 0}; }
    value_type from_int(long long v) const { return {Rational(v), 0}; }

    value_type add(const value_type& a, const value_type& b) const { return {a.re + b.re, a.im + b.im}; }
    value_type sub(const value_type& a, const value_type& b) const { return {a.re - b.re, a.im - b.im}; }
    value_type mul(const value_type& a, const value_type& b) const {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    value_type neg(const value_type& a) const { return {-a.re, -a.im}; }
    value_type inv(const value_type& a) const {
        Rational n = a.re * a.re + a.im * a.im;
        return {a.re / n, -a.im / n};
    }
    value_type conj(const value_type& a) const { return {a.re, -a.im}; }
    bool is_zero(const value_type& a) const { return a.re == 0 && a.im == 0; }

    std::string id() const { return "QI"; }
    std::string format(const value_type& a) const {
        return detail::format_rational(a.re) + "," + detail::format_rational(a.im);
    }
    value_type parse(std::string_view s) const {
        auto comma = s.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("expected 'real,imag'");
        return {detail::parse_rational(s.substr(0, comma)), detail::parse_rational(s.substr(comma + 1))};
    }

    bool operator==(const GaussianRationalField&) const = default;
};

struct Residue {
    std::uint32_t v = 0;

    bool operator==(const Residue&) const = default;
};

/// GF(p) for a runtime prime p, with trivial conjugation.
class PrimeField {
public:
    using value_type = Residue;

    explicit PrimeField(std::uint32_t p = 2) : p_(p) {
        if (!detail::is_prime(p))
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        if (p > 65521)
            throw std::invalid_argument("modulus " + std::to_string(p) + " is too large");
    }

    std::uint32_t modulus() const { return p_; }

    value_type zero() const { return {0}; }
    value_type one() const { return {1 % p_}; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0)
            r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    value_type add(value_type a, value_type b) const { return {(a.v + b.v) % p_}; }
    value_type sub(value_type a, value_type b) const { return {(a.v + p_ - b.v) % p_}; }
    value_type mul(value_type a, value_type b) const {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
    }
    value_type neg(value_type a) const { return {(p_ - a.v) % p_}; }
    value_type inv(value_type a) const {
        // a^(p-2)
        std::uint64_t result = 1, base = a.v, e = p_ - 2;
        while (e) {
            if (e & 1)
                result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return {static_cast<std::uint32_t>(result)};
    }
    value_type conj(value_type a) const { return a; }
    bool is_zero(value_type a) const { return a.v == 0; }

    std::string id() const { return "GF " + std::to_string(p_); }
    std::string format(value_type a) const { return std::to_string(a.v); }
    value_type parse(std::string_view s) const {
        if (s.empty())
            throw std::invalid_argument("empty entry");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("unexpected character '" + std::string(1, c) + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v >= p_)
                throw std::invalid_argument("residue out of range [0," + std::to_string(p_) + ")");
        }
        return {static_cast<std::uint32_t>(v)};
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

} // namespace projmp

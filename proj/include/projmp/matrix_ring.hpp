#pragma once

#include "projmp/matrix_io.hpp"
#include "projmp/solvers.hpp"
#include "projmp/star_ring.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace projmp {

/// The ring of n x n matrices over an exact field with conjugate transpose.
/// Doubles as its own inverse engine through the constructive solvers.
template <class Field>
class MatrixRing {
public:
    using element = Matrix<Field>;
    using field_type = Field;

    MatrixRing(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
        if (n == 0)
            throw std::invalid_argument("matrix size must be positive");
    }

    const Field& field() const { return field_; }
    std::size_t size_n() const { return n_; }

    element zero() const { return element(field_, n_, n_); }
    element one() const { return element::identity(field_, n_); }
    element add(const element& a, const element& b) const { return a + b; }
    element sub(const element& a, const element& b) const { return a - b; }
    element neg(const element& a) const { return -a; }
    element mul(const element& a, const element& b) const { return a * b; }
    element star(const element& a) const { return a.star(); }

    std::string id() const { return field_.id() + " " + std::to_string(n_) + "x" + std::to_string(n_); }
    std::string format(const element& a) const { return write_matrix(a); }

    std::optional<element> mp_inverse(const element& a) const { return projmp::mp_inverse(a); }

    std::optional<DrazinWitness<element>> drazin_inverse(const element& a) const {
        auto d = projmp::drazin_inverse(a);
        return DrazinWitness<element>{std::move(d.inverse), d.index};
    }

    /// a*a = 0 forces a = 0. For matrices this holds exactly when no nonzero
    /// column vector v has v*v = 0. Over Q and Q(i) that is positivity; over
    /// GF(p) a sum of n squares is isotropic for n >= 3, and for n = 2 it is
    /// isotropic iff -1 is a square, i.e. p = 2 or p = 1 mod 4.
    bool is_star_reducing() const {
        if constexpr (std::is_same_v<Field, PrimeField>) {
            std::uint32_t p = field_.modulus();
            if (n_ == 1)
                return true;
            if (n_ == 2)
                return p % 4 == 3;
            return false;
        } else {
            return true;
        }
    }

    // Finite enumeration, available over prime fields only. Element i has
    // entry (r, c) equal to base-p digit r*n + c of i.
    std::uint64_t cardinality() const
        requires std::is_same_v<Field, PrimeField>
    {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n_ * n_; ++i) {
            if (total > (std::uint64_t{1} << 40))
                return UINT64_MAX;
            total *= field_.modulus();
        }
        return total;
    }

    element element_at(std::uint64_t index) const
        requires std::is_same_v<Field, PrimeField>
    {
        element m = zero();
        for (std::size_t k = 0; k < n_ * n_; ++k) {
            m(k / n_, k % n_) = Residue{static_cast<std::uint32_t>(index % field_.modulus())};
            index /= field_.modulus();
        }
        return m;
    }

private:
    Field field_;
    std::size_t n_;
};

} // namespace projmp

#pragma once

// Constructive generalized inverses for exact matrices.

#include "projmp/matrix.hpp"

#include <optional>
#include <stdexcept>

namespace projmp {

class ZeroMatrixError : public std::invalid_argument {
public:
    ZeroMatrixError() : std::invalid_argument("full-rank factorization of a zero matrix") {}
};

template <class Field>
struct RankFactorization {
    Matrix<Field> left;  // m x r, full column rank
    Matrix<Field> right; // r x n, full row rank
    std::size_t rank = 0;
};

/// A = F G with F the pivot columns of A and G the nonzero rows of rref(A).
template <class Field>
RankFactorization<Field> full_rank_factorization(const Matrix<Field>& a) {
    auto r = rref(a);
    if (r.rank == 0)
        throw ZeroMatrixError();
    return {a.columns(r.pivots), r.reduced.top_rows(r.rank), r.rank};
}

/// Moore-Penrose inverse, or nullopt when none exists over the field.
///
/// With A = F G, the candidate is G* (G G*)^{-1} (F* F)^{-1} F*. It exists
/// exactly when both r x r Gram matrices are invertible, which over Q and
/// Q(i) always holds.
template <class Field>
std::optional<Matrix<Field>> mp_inverse(const Matrix<Field>& a) {
    if (a.is_zero())
        return Matrix<Field>(a.field(), a.cols(), a.rows());
    auto fg = full_rank_factorization(a);
    auto gs = fg.right.star();
    auto fs = fg.left.star();
    auto row_gram = inverse(fg.right * gs);
    if (!row_gram)
        return std::nullopt;
    auto col_gram = inverse(fs * fg.left);
    if (!col_gram)
        return std::nullopt;
    return gs * *row_gram * *col_gram * fs;
}

template <class Field>
struct DrazinResult {
    Matrix<Field> inverse;
    std::size_t index = 0;
};

/// Smallest k >= 0 with rank(A^k) = rank(A^{k+1}).
template <class Field>
std::size_t drazin_index(const Matrix<Field>& a) {
    if (!a.square())
        throw std::invalid_argument("Drazin index of non-square matrix");
    std::size_t k = 0;
    Matrix<Field> pk = Matrix<Field>::identity(a.field(), a.rows());
    std::size_t rk = a.rows();
    for (;;) {
        Matrix<Field> next = pk * a;
        std::size_t rn = rank(next);
        if (rn == rk)
            return k;
        pk = std::move(next);
        rk = rn;
        ++k;
    }
}

/// Drazin inverse through the core-nilpotent decomposition.
///
/// With k the index, range(A^k) and null(A^k) are complementary A-invariant
/// subspaces. In the basis S = [range | null] the matrix is block-diag(C, N)
/// with C invertible and N nilpotent, and A^D = S block-diag(C^{-1}, 0) S^{-1}.
template <class Field>
DrazinResult<Field> drazin_inverse(const Matrix<Field>& a) {
    const std::size_t k = drazin_index(a);
    const Field& f = a.field();
    const std::size_t n = a.rows();
    if (k == 0)
        return {*inverse(a), 0};
    Matrix<Field> ak = power(a, k);
    auto r = rref(ak);
    if (r.rank == 0)
        return {Matrix<Field>(f, n, n), k};
    Matrix<Field> range = ak.columns(r.pivots);
    Matrix<Field> basis = hconcat(range, null_space(ak));
    auto basis_inv = inverse(basis);
    if (!basis_inv)
        throw std::logic_error("core-nilpotent basis is singular");
    Matrix<Field> similar = *basis_inv * a * basis;
    Matrix<Field> core(f, r.rank, r.rank);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j)
            core(i, j) = similar(i, j);
    auto core_inv = inverse(core);
    if (!core_inv)
        throw std::logic_error("core block is singular");
    Matrix<Field> block(f, n, n);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j)
            block(i, j) = (*core_inv)(i, j);
    return {basis * block * *basis_inv, k};
}

/// Group inverse when the index is at most one.
template <class Field>
std::optional<Matrix<Field>> group_inverse(const Matrix<Field>& a) {
    auto d = drazin_inverse(a);
    if (d.index > 1)
        return std::nullopt;
    return std::move(d.inverse);
}

} // namespace projmp

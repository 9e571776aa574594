#pragma once

// Deterministic sources of projection pairs.
//
// Randomness comes from SplitMix64 (Steele, Lea and Flood's 64-bit mixing
// generator). Trial i of a campaign with seed s draws from the stream seeded
// by mix(s) ^ mix(i + 1), so trials are independent of each other and of
// the order in which they run.

#include "projmp/brute_force.hpp"
#include "projmp/fields.hpp"
#include "projmp/matrix.hpp"
#include "projmp/matrix_ring.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace projmp {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, bound) by rejection, free of modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("below(0)");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold)
                return x % bound;
        }
    }

    /// Uniform in [lo, hi].
    long long between(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
        return SplitMix64(mix(seed) ^ mix(trial + 1));
    }

private:
    std::uint64_t state_;
};

/// Everything needed to regenerate one trial's projection pair.
struct TrialSpec {
    std::string ring;
    std::size_t n = 0;
    std::size_t rank_p = 0;
    std::size_t rank_q = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;

    bool operator==(const TrialSpec&) const = default;
};

class GenerationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational sample_scalar(const RationalField&, SplitMix64& rng) { return rng.between(-3, 3); }

inline GaussianRational sample_scalar(const GaussianRationalField&, SplitMix64& rng) {
    Rational re = rng.between(-3, 3);
    Rational im = rng.between(-3, 3);
    return {re, im};
}

inline Residue sample_scalar(const PrimeField& f, SplitMix64& rng) {
    return {static_cast<std::uint32_t>(rng.below(f.modulus()))};
}

} // namespace detail

inline constexpr int projection_retry_budget = 64;

/// e = v (v*v)^{-1} v* for a random n x rank matrix v whose Gram matrix is
/// invertible. Rational and Gaussian entries are drawn from [-3, 3].
template <class Field>
Matrix<Field> random_projection(const Field& field, std::size_t n, std::size_t rank, SplitMix64& rng) {
    if (rank > n)
        throw std::invalid_argument("projection rank exceeds matrix size");
    if (rank == 0)
        return Matrix<Field>(field, n, n);
    if (rank == n)
        return Matrix<Field>::identity(field, n);
    for (int attempt = 0; attempt < projection_retry_budget; ++attempt) {
        Matrix<Field> v(field, n, rank);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                v(i, j) = detail::sample_scalar(field, rng);
        Matrix<Field> vs = v.star();
        if (auto g = inverse(vs * v))
            return v * *g * vs;
    }
    throw GenerationFailed("no invertible Gram matrix after " + std::to_string(projection_retry_budget) +
                           " samples over " + field.id());
}

/// Fills in the target ranks of a trial from its own stream.
inline TrialSpec make_trial_spec(std::string ring, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 rng = SplitMix64::for_trial(seed ^ 0x5bd1e995ULL, trial);
    TrialSpec spec{std::move(ring), n, 0, 0, seed, trial};
    spec.rank_p = static_cast<std::size_t>(rng.below(n + 1));
    spec.rank_q = static_cast<std::size_t>(rng.below(n + 1));
    return spec;
}

template <class Field>
std::pair<Matrix<Field>, Matrix<Field>> generate_pair(const Field& field, const TrialSpec& spec) {
    SplitMix64 rng = SplitMix64::for_trial(spec.seed, spec.trial);
    auto p = random_projection(field, spec.n, spec.rank_p, rng);
    auto q = random_projection(field, spec.n, spec.rank_q, rng);
    return {std::move(p), std::move(q)};
}

inline constexpr std::uint64_t exhaustive_matrix_limit = std::uint64_t{1} << 20;

/// Every symmetric idempotent n x n matrix over GF(p), in enumeration order.
inline std::vector<Matrix<PrimeField>> all_projections_matrix(std::size_t n, const PrimeField& field) {
    MatrixRing<PrimeField> ring(field, n);
    if (ring.cardinality() > exhaustive_matrix_limit)
        throw TooLarge("GF(" + std::to_string(field.modulus()) + ") " + std::to_string(n) + "x" + std::to_string(n) +
                       " has too many matrices to enumerate");
    std::vector<Matrix<PrimeField>> out;
    for (std::uint64_t i = 0, total = ring.cardinality(); i < total; ++i) {
        auto m = ring.element_at(i);
        if (is_projection(ring, m))
            out.push_back(std::move(m));
    }
    return out;
}

} // namespace projmp

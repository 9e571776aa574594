#pragma once

// Exhaustive inverse search in finite rings with involution.

#include "projmp/star_ring.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace projmp {

/// A star ring whose elements can be enumerated by index.
template <class R>
concept FiniteStarRing = StarRing<R> && requires(const R& r, std::uint64_t i) {
    { r.cardinality() } -> std::convertible_to<std::uint64_t>;
    { r.element_at(i) } -> std::convertible_to<typename R::element>;
};

class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t brute_force_limit = std::uint64_t{1} << 16;

template <FiniteStarRing R>
void check_enumerable(const R& ring) {
    if (ring.cardinality() > brute_force_limit)
        throw TooLarge("ring " + ring.id() + " is too large for exhaustive search");
}

/// Every candidate passing all four Penrose equations. MP uniqueness says
/// the result has at most one entry.
template <FiniteStarRing R>
std::vector<typename R::element> all_mp_witnesses(const R& ring, const typename R::element& a) {
    check_enumerable(ring);
    std::vector<typename R::element> out;
    for (std::uint64_t i = 0, n = ring.cardinality(); i < n; ++i) {
        auto c = ring.element_at(i);
        if (verify_mp(ring, a, c).all)
            out.push_back(std::move(c));
    }
    return out;
}

template <FiniteStarRing R>
std::optional<typename R::element> brute_force_mp(const R& ring, const typename R::element& a) {
    check_enumerable(ring);
    for (std::uint64_t i = 0, n = ring.cardinality(); i < n; ++i) {
        auto c = ring.element_at(i);
        if (verify_mp(ring, a, c).all)
            return c;
    }
    return std::nullopt;
}

/// Drazin inverse with the smallest index k <= max_index, scanning every
/// candidate.
template <FiniteStarRing R>
std::optional<DrazinWitness<typename R::element>> brute_force_drazin(const R& ring, const typename R::element& a,
                                                                     std::size_t max_index) {
    check_enumerable(ring);
    std::vector<typename R::element> powers{ring.one()};
    for (std::size_t k = 0; k <= max_index; ++k)
        powers.push_back(ring.mul(powers.back(), a));
    std::optional<DrazinWitness<typename R::element>> best;
    for (std::uint64_t i = 0, n = ring.cardinality(); i < n; ++i) {
        auto c = ring.element_at(i);
        auto ac = ring.mul(a, c);
        if (!(ac == ring.mul(c, a)) || !(ring.mul(c, ac) == c))
            continue;
        for (std::size_t k = 0; k <= max_index; ++k) {
            if (best && k >= best->index)
                break;
            if (ring.mul(powers[k + 1], c) == powers[k]) {
                best = DrazinWitness<typename R::element>{c, k};
                break;
            }
        }
    }
    return best;
}

/// All projections in index order.
template <FiniteStarRing R>
std::vector<typename R::element> enumerate_projections(const R& ring) {
    check_enumerable(ring);
    std::vector<typename R::element> out;
    for (std::uint64_t i = 0, n = ring.cardinality(); i < n; ++i) {
        auto e = ring.element_at(i);
        if (is_projection(ring, e))
            out.push_back(std::move(e));
    }
    return out;
}

/// Inverse engine backed by exhaustive search.
template <FiniteStarRing R>
class BruteForceEngine {
public:
    /// `max_index` bounds the Drazin index search; for a ring of dimension
    /// d over a field the index never exceeds d.
    BruteForceEngine(const R& ring, std::size_t max_index) : ring_(&ring), max_index_(max_index) {
        check_enumerable(ring);
    }

    std::optional<typename R::element> mp_inverse(const typename R::element& a) const {
        return brute_force_mp(*ring_, a);
    }

    std::optional<DrazinWitness<typename R::element>> drazin_inverse(const typename R::element& a) const {
        return brute_force_drazin(*ring_, a, max_index_);
    }

private:
    const R* ring_;
    std::size_t max_index_;
};

} // namespace projmp

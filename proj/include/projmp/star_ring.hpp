#pragma once

// Rings with involution, the Penrose and Drazin equations, and projection
// pairs. Everything here certifies witnesses; nothing computes inverses.

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace projmp {

/// A unital ring with involution. `R` is an instance object (it may carry a
/// matrix size, a modulus or a multiplication table) and `R::element` is a
/// value type whose `==` is exact.
template <class R>
concept StarRing = requires(const R& r, const typename R::element& x) {
    typename R::element;
    { r.zero() } -> std::convertible_to<typename R::element>;
    { r.one() } -> std::convertible_to<typename R::element>;
    { r.add(x, x) } -> std::convertible_to<typename R::element>;
    { r.sub(x, x) } -> std::convertible_to<typename R::element>;
    { r.neg(x) } -> std::convertible_to<typename R::element>;
    { r.mul(x, x) } -> std::convertible_to<typename R::element>;
    { r.star(x) } -> std::convertible_to<typename R::element>;
    { x == x } -> std::convertible_to<bool>;
    { r.id() } -> std::convertible_to<std::string>;
    { r.format(x) } -> std::convertible_to<std::string>;
};

template <class T>
struct DrazinWitness {
    T inverse;
    std::size_t index = 0;
};

/// Decides MP and Drazin invertibility in ring `R`, returning a witness when
/// one exists.
template <class E, class R>
concept InverseEngine = StarRing<R> && requires(const E& e, const typename R::element& x) {
    { e.mp_inverse(x) } -> std::same_as<std::optional<typename R::element>>;
    { e.drazin_inverse(x) } -> std::same_as<std::optional<DrazinWitness<typename R::element>>>;
};

class InvalidWitness : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An element bundled with its ring so that formulas read naturally.
template <StarRing R>
class Elem {
public:
    using element = typename R::element;

    Elem(const R& ring, element v) : ring_(&ring), v_(std::move(v)) {}

    const R& ring() const { return *ring_; }
    const element& value() const { return v_; }

    Elem star() const { return {*ring_, ring_->star(v_)}; }
    Elem squared() const { return *this * *this; }

    friend Elem operator+(const Elem& a, const Elem& b) { return {*a.ring_, a.ring_->add(a.v_, b.v_)}; }
    friend Elem operator-(const Elem& a, const Elem& b) { return {*a.ring_, a.ring_->sub(a.v_, b.v_)}; }
    friend Elem operator-(const Elem& a) { return {*a.ring_, a.ring_->neg(a.v_)}; }
    friend Elem operator*(const Elem& a, const Elem& b) { return {*a.ring_, a.ring_->mul(a.v_, b.v_)}; }
    friend bool operator==(const Elem& a, const Elem& b) { return a.v_ == b.v_; }

private:
    const R* ring_;
    element v_;
};

template <StarRing R>
Elem<R> power(const Elem<R>& a, std::size_t k) {
    Elem<R> r(a.ring(), a.ring().one());
    for (std::size_t i = 0; i < k; ++i)
        r = r * a;
    return r;
}

struct PenroseReport {
    bool eq1 = false; // a b a = a
    bool eq2 = false; // b a b = b
    bool eq3 = false; // (a b)* = a b
    bool eq4 = false; // (b a)* = b a
    bool all = false;
};

template <StarRing R>
PenroseReport verify_mp(const R& ring, const typename R::element& a, const typename R::element& cand) {
    PenroseReport r;
    auto ab = ring.mul(a, cand);
    auto ba = ring.mul(cand, a);
    r.eq1 = ring.mul(ab, a) == a;
    r.eq2 = ring.mul(ba, cand) == cand;
    r.eq3 = ring.star(ab) == ab;
    r.eq4 = ring.star(ba) == ba;
    r.all = r.eq1 && r.eq2 && r.eq3 && r.eq4;
    return r;
}

template <StarRing R>
PenroseReport verify_mp(const Elem<R>& a, const Elem<R>& cand) {
    return verify_mp(a.ring(), a.value(), cand.value());
}

struct DrazinReport {
    bool commutes = false; // a b = b a
    bool inner = false;    // b a b = b
    bool index_eq = false; // a^{k+1} b = a^k
    std::size_t k = 0;

    bool valid() const { return commutes && inner && index_eq; }
};

template <StarRing R>
DrazinReport verify_drazin(const R& ring, const typename R::element& a, const typename R::element& cand,
                           std::size_t k) {
    DrazinReport r;
    r.k = k;
    auto ab = ring.mul(a, cand);
    r.commutes = ab == ring.mul(cand, a);
    r.inner = ring.mul(cand, ab) == cand;
    auto ak = ring.one();
    for (std::size_t i = 0; i < k; ++i)
        ak = ring.mul(ak, a);
    r.index_eq = ring.mul(ring.mul(ak, a), cand) == ak;
    return r;
}

template <StarRing R>
bool is_projection(const R& ring, const typename R::element& e) {
    return ring.mul(e, e) == e && ring.star(e) == e;
}

/// a a† = a† a. The witness must satisfy all four Penrose equations.
template <StarRing R>
bool is_ep(const R& ring, const typename R::element& a, const typename R::element& a_dag) {
    if (!verify_mp(ring, a, a_dag).all)
        throw InvalidWitness("is_ep: candidate is not the MP inverse");
    return ring.mul(a, a_dag) == ring.mul(a_dag, a);
}

/// Two projections p, q with the derived elements a = pqp, b = pq(1-p),
/// d = (1-p)q(1-p), p̄ = 1-p, q̄ = 1-q.
template <StarRing R>
class ProjectionPair {
public:
    using element = typename R::element;

    ProjectionPair(const R& ring, const element& p, const element& q)
        : ring_(&ring), one_(ring, ring.one()), p_(ring, p), q_(ring, q), p_bar_(one_ - p_), q_bar_(one_ - q_),
          a_(p_ * q_ * p_), b_(p_ * q_ * p_bar_), d_(p_bar_ * q_ * p_bar_) {
        if (!is_projection(ring, p))
            throw std::invalid_argument("p is not a projection: " + ring.format(p));
        if (!is_projection(ring, q))
            throw std::invalid_argument("q is not a projection: " + ring.format(q));
    }

    const R& ring() const { return *ring_; }
    const Elem<R>& one() const { return one_; }
    Elem<R> zero() const { return {*ring_, ring_->zero()}; }
    const Elem<R>& p() const { return p_; }
    const Elem<R>& q() const { return q_; }
    const Elem<R>& p_bar() const { return p_bar_; }
    const Elem<R>& q_bar() const { return q_bar_; }
    const Elem<R>& a() const { return a_; }
    const Elem<R>& b() const { return b_; }
    const Elem<R>& d() const { return d_; }

    /// The pair (1-p, 1-q).
    ProjectionPair complement() const { return {*ring_, p_bar_.value(), q_bar_.value()}; }
    /// The pair (q, p).
    ProjectionPair swapped() const { return {*ring_, q_.value(), p_.value()}; }

private:
    const R* ring_;
    Elem<R> one_;
    Elem<R> p_, q_, p_bar_, q_bar_;
    Elem<R> a_, b_, d_;
};

} // namespace projmp

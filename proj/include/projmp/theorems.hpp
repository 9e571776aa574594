#pragma once

// Executable forms of the generalized-inverse identities and existence
// equivalences for two projections p, q in a ring with involution.
//
// Every battery takes its existence decisions from an inverse engine and
// certifies every engine witness and every formula output against the
// Penrose equations before trusting it.

#include "projmp/star_ring.hpp"
#include "projmp/verdict.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace projmp {

template <StarRing R>
struct ExistenceEntry {
    std::string name;
    Elem<R> element;
    std::optional<Elem<R>> witness;

    bool exists() const { return witness.has_value(); }
};

/// Named derived elements with their MP existence flag and certified
/// witness.
template <StarRing R>
class ExistenceProfile {
public:
    void push(ExistenceEntry<R> e) { entries_.push_back(std::move(e)); }

    const std::vector<ExistenceEntry<R>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const ExistenceEntry<R>& operator[](std::size_t i) const { return entries_[i]; }

    const ExistenceEntry<R>& at(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name)
                return e;
        throw std::out_of_range("no profile entry " + name);
    }

    bool all_equal() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [&](const auto& e) { return e.exists() == entries_.front().exists(); });
    }
    bool all_exist() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.exists(); });
    }

    /// Compact flag string, e.g. "1-pq:1 p-pqp:0".
    std::string flags() const {
        std::string s;
        for (const auto& e : entries_) {
            if (!s.empty())
                s += ' ';
            s += e.name + ":" + (e.exists() ? "1" : "0");
        }
        return s;
    }

private:
    std::vector<ExistenceEntry<R>> entries_;
};

namespace detail {

// Engine MP inverse, accepted only if it passes the Penrose equations. A
// rejected witness is a failed sub-check.
template <StarRing R, class E>
std::optional<Elem<R>> certified_dagger(const E& engine, const Elem<R>& x, const std::string& name,
                                        TheoremVerdict& v) {
    auto w = engine.mp_inverse(x.value());
    if (!w)
        return std::nullopt;
    if (!verify_mp(x.ring(), x.value(), *w).all) {
        v.check("engine witness for " + name + " satisfies the Penrose equations", false);
        return std::nullopt;
    }
    return Elem<R>(x.ring(), std::move(*w));
}

template <StarRing R, class E>
std::optional<DrazinWitness<Elem<R>>> certified_drazin(const E& engine, const Elem<R>& x, const std::string& name,
                                                       TheoremVerdict& v) {
    auto w = engine.drazin_inverse(x.value());
    if (!w)
        return std::nullopt;
    if (!verify_drazin(x.ring(), x.value(), w->inverse, w->index).valid()) {
        v.check("engine Drazin witness for " + name + " is valid at its index", false);
        return std::nullopt;
    }
    return DrazinWitness<Elem<R>>{Elem<R>(x.ring(), std::move(w->inverse)), w->index};
}

template <StarRing R, class E>
ExistenceProfile<R> build_profile(const E& engine, TheoremVerdict& v,
                                  std::vector<std::pair<std::string, Elem<R>>> items) {
    ExistenceProfile<R> prof;
    for (auto& [name, x] : items) {
        auto w = certified_dagger(engine, x, name, v);
        prof.push({name, std::move(x), std::move(w)});
    }
    return prof;
}

template <StarRing R>
void attach_pair(TheoremVerdict& v, const ProjectionPair<R>& ctx) {
    if (v.passed() || !v.applicable())
        return;
    v.set_counterexample(
        {ctx.ring().id(), {{"p", ctx.ring().format(ctx.p().value())}, {"q", ctx.ring().format(ctx.q().value())}}});
}

template <StarRing R>
void attach_element(TheoremVerdict& v, const Elem<R>& r) {
    if (v.passed() || !v.applicable())
        return;
    v.set_counterexample({r.ring().id(), {{"r", r.ring().format(r.value())}}});
}

// Records "name" as an asserted MP certificate of `w` for `x`.
template <StarRing R>
bool check_mp(TheoremVerdict& v, const std::string& name, const Elem<R>& x, const Elem<R>& w) {
    return v.check(name, verify_mp(x, w).all);
}

} // namespace detail

/// r† = (r*r)† r* = r*(rr*)† and the companion product rules whenever
/// r ∈ R†; in a *-reducing ring also r*r ∈ R† or rr* ∈ R† ⇒ r ∈ R†.
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict lemma21_checks(const Elem<R>& r, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("lemma21");
    const Elem<R> rs = r.star();
    const Elem<R> rsr = rs * r;
    const Elem<R> rrs = r * rs;
    auto rd = detail::certified_dagger(engine, r, "r", v);
    auto rsr_d = detail::certified_dagger(engine, rsr, "r*r", v);
    auto rrs_d = detail::certified_dagger(engine, rrs, "rr*", v);
    auto rs_d = detail::certified_dagger(engine, rs, "r*", v);
    v.record("r in R†", rd.has_value());
    v.record("r*r in R†", rsr_d.has_value());
    v.record("rr* in R†", rrs_d.has_value());
    v.check("r in R† iff r* in R†", rd.has_value() == rs_d.has_value());
    if (rd) {
        if (v.check("r*r in R†", rsr_d.has_value()) && v.check("rr* in R†", rrs_d.has_value()) && rs_d) {
            v.check("(r*)† = (r†)*", *rs_d == rd->star());
            v.check("(r*r)† = r†(r*)†", *rsr_d == *rd * *rs_d);
            v.check("(rr*)† = (r*)†r†", *rrs_d == *rs_d * *rd);
            v.check("r† = (r*r)†r*", *rd == *rsr_d * rs);
            v.check("r† = r*(rr*)†", *rd == rs * *rrs_d);
        }
        detail::check_mp(v, "(r†)† = r", *rd, r);
    }
    if (ring_is_star_reducing) {
        v.check("r*r or rr* in R† implies r in R†", !(rsr_d || rrs_d) || rd.has_value());
    } else {
        v.note("ring not *-reducing: converse implication recorded only");
        v.record("r*r or rr* in R† implies r in R†", !(rsr_d || rrs_d) || rd.has_value());
    }
    detail::attach_element(v, r);
    return v;
}

/// bb* = (p-a) - (p-a)^2, b*b = d - d^2, db* = b*(p-a). Holds for every pair.
template <StarRing R>
TheoremVerdict lemma22_identities(const ProjectionPair<R>& ctx) {
    TheoremVerdict v("lemma22");
    const auto& b = ctx.b();
    const auto& d = ctx.d();
    const auto pa = ctx.p() - ctx.a();
    v.check("bb* = (p-a)-(p-a)^2", b * b.star() == pa - pa.squared());
    v.check("b*b = d-d^2", b.star() * b == d - d.squared());
    v.check("db* = b*(p-a)", d * b.star() == b.star() * pa);
    detail::attach_pair(v, ctx);
    return v;
}

/// (p-q)† assembled as q̄(pq̄p)† - q(p̄qp̄)†, or nullopt unless pq̄ and p̄q
/// are both MP invertible. The two inner daggers come from r† through
/// (rr*)† = (r†)* r†.
template <StarRing R, class E>
    requires InverseEngine<E, R>
std::optional<Elem<R>> diff_mp_formula(const ProjectionPair<R>& ctx, const E& engine) {
    TheoremVerdict scratch("diff");
    const auto pqb = ctx.p() * ctx.q_bar();
    const auto pbq = ctx.p_bar() * ctx.q();
    auto r1 = detail::certified_dagger(engine, pqb, "pq̄", scratch);
    auto r2 = detail::certified_dagger(engine, pbq, "p̄q", scratch);
    if (!r1 || !r2)
        return std::nullopt;
    const auto pqbp_dag = r1->star() * *r1;
    const auto pbqpb_dag = r2->star() * *r2;
    return ctx.q_bar() * pqbp_dag - ctx.q() * pbqpb_dag;
}

template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict lemma23_identities(const ProjectionPair<R>& ctx, const E& engine) {
    TheoremVerdict v("lemma23");
    const auto pa = ctx.p() - ctx.a();
    const auto& b = ctx.b();
    const auto& d = ctx.d();
    auto pqb = detail::certified_dagger(engine, ctx.p() * ctx.q_bar(), "pq̄", v);
    auto pbq = detail::certified_dagger(engine, ctx.p_bar() * ctx.q(), "p̄q", v);
    if (!pqb && !pbq) {
        v.mark_not_applicable("neither pq̄ nor p̄q is MP invertible");
        return v;
    }
    std::optional<Elem<R>> pa_d, d_d;
    if (pqb) {
        pa_d = detail::certified_dagger(engine, pa, "p-a", v);
        if (v.check("(1) p-a in R†", pa_d.has_value()))
            v.check("(1) (p-a)(p-a)†b = b", pa * *pa_d * b == b);
    }
    if (pbq) {
        d_d = detail::certified_dagger(engine, d, "d", v);
        if (v.check("(2) d in R†", d_d.has_value()))
            v.check("(2) bdd† = b", b * d * *d_d == b);
    }
    if (pa_d && d_d) {
        v.check("(3) bd† = (p-a)†b", b * *d_d == *pa_d * b);
        v.check("(3) d†b* = b*(p-a)†", *d_d * b.star() == b.star() * *pa_d);
    }
    if (pqb && pbq) {
        const auto pmq = ctx.p() - ctx.q();
        auto w = diff_mp_formula(ctx, engine);
        if (v.check("(4) difference formula applicable", w.has_value())) {
            detail::check_mp(v, "(4) q̄(pq̄p)†-q(p̄qp̄)† is (p-q)†", pmq, *w);
            auto e = detail::certified_dagger(engine, pmq, "p-q", v);
            v.check("(4) formula equals engine (p-q)†", e && *e == *w);
        }
    }
    detail::attach_pair(v, ctx);
    return v;
}

/// x = [1 + b*(p-a)](p-a)†(1+b) - b* - b*b + 1 - p, the candidate for
/// (1-pq)†. Throws InvalidWitness unless `dag_p_minus_a` is (p-a)†.
template <StarRing R>
Elem<R> eq215_formula(const ProjectionPair<R>& ctx, const Elem<R>& dag_p_minus_a) {
    const auto pa = ctx.p() - ctx.a();
    if (!verify_mp(pa, dag_p_minus_a).all)
        throw InvalidWitness("eq215_formula: witness is not (p-pqp)†");
    const auto& one = ctx.one();
    const auto bs = ctx.b().star();
    return (one + bs * pa) * dag_p_minus_a * (one + ctx.b()) - bs - bs * ctx.b() + one - ctx.p();
}

/// p x p with x = (1-pq)†, the candidate for (p-pqp)†.
template <StarRing R>
Elem<R> pxp_extraction(const ProjectionPair<R>& ctx, const Elem<R>& dag_one_minus_pq) {
    if (!verify_mp(ctx.one() - ctx.p() * ctx.q(), dag_one_minus_pq).all)
        throw InvalidWitness("pxp_extraction: witness is not (1-pq)†");
    return ctx.p() * dag_one_minus_pq * ctx.p();
}

namespace detail {

// Conversion formulas among (1-pq)†, (1-pqp)†, (p-pqp)† for one ordering
// of the pair, given certified witnesses.
template <StarRing R>
void thm24_formulas(TheoremVerdict& v, const ProjectionPair<R>& ctx, const std::string& tag,
                    const std::optional<Elem<R>>& one_pq, const std::optional<Elem<R>>& one_pqp,
                    const std::optional<Elem<R>>& p_pqp) {
    const auto& p = ctx.p();
    const auto& one = ctx.one();
    const auto pq = p * ctx.q();
    const auto x_pqp = p - ctx.a();
    if (one_pq) {
        auto y = pxp_extraction(ctx, *one_pq);
        check_mp(v, tag + "p(1-pq)†p is (p-pqp)†", x_pqp, y);
        v.check(tag + "p(1-pq)†p equals engine (p-pqp)†", p_pqp && *p_pqp == y);
    }
    if (p_pqp) {
        auto x = eq215_formula(ctx, *p_pqp);
        check_mp(v, tag + "formula output is (1-pq)†", one - pq, x);
        v.check(tag + "formula output equals engine (1-pq)†", one_pq && *one_pq == x);
        check_mp(v, tag + "(p-pqp)† + 1 - p is (1-pqp)†", one - ctx.a(), *p_pqp + one - p);
    }
    if (one_pqp) {
        v.check(tag + "p(1-pqp)† = (1-pqp)†p", p * *one_pqp == *one_pqp * p);
        check_mp(v, tag + "p(1-pqp)† is (p-pqp)†", x_pqp, p * *one_pqp);
    }
}

} // namespace detail

/// The six conditions 1-pq, 1-pqp, p-pqp, 1-qp, 1-qpq, q-qpq ∈ R† are
/// equivalent in any ring with involution.
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict thm24_battery(const ProjectionPair<R>& ctx, const E& engine) {
    TheoremVerdict v("thm24");
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto& one = ctx.one();
    auto prof = detail::build_profile<R>(engine, v,
                                         {{"1-pq", one - p * q},
                                          {"1-pqp", one - p * q * p},
                                          {"p-pqp", p - p * q * p},
                                          {"1-qp", one - q * p},
                                          {"1-qpq", one - q * p * q},
                                          {"q-qpq", q - q * p * q}});
    v.check("six existence flags agree", prof.all_equal());
    if (!prof.all_equal())
        v.note("flags " + prof.flags());
    if (prof[0].witness && prof[3].witness)
        v.check("(1-qp)† = ((1-pq)†)*", *prof[3].witness == prof[0].witness->star());
    detail::thm24_formulas(v, ctx, "", prof[0].witness, prof[1].witness, prof[2].witness);
    detail::thm24_formulas(v, ctx.swapped(), "swapped: ", prof[3].witness, prof[4].witness, prof[5].witness);
    detail::attach_pair(v, ctx);
    return v;
}

/// The ten elements of the *-reducing equivalence list, in order.
template <StarRing R>
std::vector<std::pair<std::string, Elem<R>>> cor25_elements(const ProjectionPair<R>& ctx) {
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto& one = ctx.one();
    return {{"1-pq", one - p * q}, {"1-pqp", one - p * q * p}, {"p-pqp", p - p * q * p},
            {"p-pq", p - p * q},   {"p-qp", p - q * p},        {"1-qp", one - q * p},
            {"1-qpq", one - q * p * q}, {"q-qpq", q - q * p * q}, {"q-qp", q - q * p},
            {"q-pq", q - p * q}};
}

template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict cor25_battery(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("cor25");
    if (!ring_is_star_reducing) {
        v.mark_not_applicable("ring is not *-reducing");
        return v;
    }
    auto prof = detail::build_profile<R>(engine, v, cor25_elements(ctx));
    v.check("ten existence flags agree", prof.all_equal());
    if (!prof.all_equal())
        v.note("flags " + prof.flags());
    if (prof.all_exist())
        v.check("(p-pqp)† = (1-pq)†p", *prof.at("p-pqp").witness == *prof.at("1-pq").witness * ctx.p());
    detail::attach_pair(v, ctx);
    return v;
}

/// The ten-element list applied to (1-p, 1-q), cross-checked against direct
/// evaluation of the ten listed elements.
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict cor26_battery(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("cor26");
    if (!ring_is_star_reducing) {
        v.mark_not_applicable("ring is not *-reducing");
        return v;
    }
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto& pb = ctx.p_bar();
    const auto& qb = ctx.q_bar();
    const auto comp = ctx.complement();
    auto substituted = detail::build_profile<R>(engine, v, cor25_elements(comp));
    auto direct = detail::build_profile<R>(engine, v,
                                           {{"p+q-pq", p + q - p * q},
                                            {"p+p̄qp̄", p + pb * q * pb},
                                            {"p̄qp̄", pb * q * pb},
                                            {"q-pq", q - p * q},
                                            {"q-qp", q - q * p},
                                            {"p+q-qp", p + q - q * p},
                                            {"q+q̄pq̄", q + qb * p * qb},
                                            {"q̄pq̄", qb * p * qb},
                                            {"p-qp", p - q * p},
                                            {"p-pq", p - p * q}});
    for (std::size_t i = 0; i < direct.size(); ++i) {
        const std::string tag = "(" + std::to_string(i + 1) + ") ";
        v.check(tag + "substituted element equals " + direct[i].name, substituted[i].element == direct[i].element);
        v.check(tag + "substituted and direct flags agree", substituted[i].exists() == direct[i].exists());
    }
    v.check("ten existence flags agree", direct.all_equal());
    if (!direct.all_equal())
        v.note("flags " + direct.flags());
    if (direct.all_exist())
        v.check("(p̄qp̄)† = (p+q-pq)†p̄", *direct.at("p̄qp̄").witness == *direct.at("p+q-pq").witness * pb);
    detail::attach_pair(v, ctx);
    return v;
}

/// pq̄, p̄q ∈ R† ⟺ p-q ∈ R†, with (pq̄)† = (p-q)†p.
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict thm27_check(const ProjectionPair<R>& ctx, const E& engine) {
    TheoremVerdict v("thm27");
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto pqb = p * ctx.q_bar();
    const auto pbq = ctx.p_bar() * q;
    const auto pmq = p - q;
    auto pqb_d = detail::certified_dagger(engine, pqb, "pq̄", v);
    auto pbq_d = detail::certified_dagger(engine, pbq, "p̄q", v);
    auto pmq_d = detail::certified_dagger(engine, pmq, "p-q", v);
    v.check("pq̄ and p̄q in R† iff p-q in R†", (pqb_d && pbq_d) == pmq_d.has_value());
    if (pmq_d) {
        const auto x = *pmq_d * p;
        detail::check_mp(v, "(p-q)†p is (pq̄)†", pqb, x);
        v.check("(pq̄)† = (p-q)†p", pqb_d && *pqb_d == x);
        detail::check_mp(v, "-(p-q)†p̄ is (p̄q)†", pbq, -(*pmq_d * ctx.p_bar()));
        v.check("p-q is EP", pmq * *pmq_d == *pmq_d * pmq);
        detail::check_mp(v, "[(p-q)^2]† = [(p-q)†]^2", pmq.squared(), pmq_d->squared());
    }
    if (pqb_d && pbq_d) {
        auto w = diff_mp_formula(ctx, engine);
        if (v.check("difference formula applicable", w.has_value())) {
            detail::check_mp(v, "q̄(pq̄p)†-q(p̄qp̄)† is (p-q)†", pmq, *w);
            v.check("difference formula equals engine (p-q)†", pmq_d && *pmq_d == *w);
        }
    }
    detail::attach_pair(v, ctx);
    return v;
}

template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict cor28_battery(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("cor28");
    if (!ring_is_star_reducing) {
        v.mark_not_applicable("ring is not *-reducing");
        return v;
    }
    auto prof = detail::build_profile<R>(
        engine, v, {{"pq̄", ctx.p() * ctx.q_bar()}, {"p-q", ctx.p() - ctx.q()}, {"p̄q", ctx.p_bar() * ctx.q()}});
    v.check("three existence flags agree", prof.all_equal());
    if (!prof.all_equal())
        v.note("flags " + prof.flags());
    detail::attach_pair(v, ctx);
    return v;
}

/// The six expressions of the first chain, in order:
/// (1-pq)†pq̄p, pq̄(pq̄p)†, pq̄p(1-qp)†, p(pq̄)†, (q̄p)†p, p(p-q)†p.
/// Returns nullopt (and records failures) when a required dagger is missing.
template <StarRing R, class E>
    requires InverseEngine<E, R>
std::optional<std::vector<Elem<R>>> cor29_chain1(const ProjectionPair<R>& ctx, const E& engine, TheoremVerdict& v,
                                                 const std::string& tag) {
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto& qb = ctx.q_bar();
    const auto& one = ctx.one();
    const auto pqb = p * qb;
    const auto pqbp = pqb * p;
    auto d1 = detail::certified_dagger(engine, one - p * q, "1-pq", v);
    auto d2 = detail::certified_dagger(engine, pqbp, "pq̄p", v);
    auto d3 = detail::certified_dagger(engine, one - q * p, "1-qp", v);
    auto d4 = detail::certified_dagger(engine, pqb, "pq̄", v);
    auto d5 = detail::certified_dagger(engine, qb * p, "q̄p", v);
    auto d6 = detail::certified_dagger(engine, p - q, "p-q", v);
    if (!v.check(tag + "all daggers exist", d1 && d2 && d3 && d4 && d5 && d6))
        return std::nullopt;
    return std::vector<Elem<R>>{*d1 * pqbp, pqb * *d2, pqbp * *d3, p * *d4, *d5 * p, p * *d6 * p};
}

/// The eight expressions of the second chain, in order:
/// (p+p̄q)†p̄qp̄, (q+pq̄)†p̄qp̄, p̄q(p̄qp̄)†, p̄qp̄(p+qp̄)†, p̄qp̄(q+q̄p)†,
/// p̄(p̄q)†, (qp̄)†p̄, p̄(q-p)†p̄.
template <StarRing R, class E>
    requires InverseEngine<E, R>
std::optional<std::vector<Elem<R>>> cor29_chain2(const ProjectionPair<R>& ctx, const E& engine, TheoremVerdict& v,
                                                 const std::string& tag) {
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto& pb = ctx.p_bar();
    const auto& qb = ctx.q_bar();
    const auto pbq = pb * q;
    const auto pbqpb = pbq * pb;
    auto d1 = detail::certified_dagger(engine, p + pbq, "p+p̄q", v);
    auto d2 = detail::certified_dagger(engine, q + p * qb, "q+pq̄", v);
    auto d3 = detail::certified_dagger(engine, pbqpb, "p̄qp̄", v);
    auto d4 = detail::certified_dagger(engine, p + q * pb, "p+qp̄", v);
    auto d5 = detail::certified_dagger(engine, q + qb * p, "q+q̄p", v);
    auto d6 = detail::certified_dagger(engine, pbq, "p̄q", v);
    auto d7 = detail::certified_dagger(engine, q * pb, "qp̄", v);
    auto d8 = detail::certified_dagger(engine, q - p, "q-p", v);
    if (!v.check(tag + "all daggers exist", d1 && d2 && d3 && d4 && d5 && d6 && d7 && d8))
        return std::nullopt;
    return std::vector<Elem<R>>{*d1 * pbqpb, *d2 * pbqpb, pbq * *d3, pbqpb * *d4,
                                pbqpb * *d5, pb * *d6,    *d7 * pb,  pb * *d8 * pb};
}

template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict cor29_chains(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("cor29");
    if (!ring_is_star_reducing) {
        v.mark_not_applicable("ring is not *-reducing");
        return v;
    }
    if (!engine.mp_inverse((ctx.p() * ctx.q_bar()).value())) {
        v.mark_not_applicable("pq̄ is not MP invertible");
        return v;
    }
    auto all_equal = [&](const std::vector<Elem<R>>& xs, const std::string& tag) {
        for (std::size_t i = 1; i < xs.size(); ++i)
            v.check(tag + "expression " + std::to_string(i + 1) + " equals expression 1", xs[i] == xs[0]);
    };
    auto c1 = cor29_chain1(ctx, engine, v, "chain 1: ");
    if (c1)
        all_equal(*c1, "chain 1: ");
    auto c2 = cor29_chain2(ctx, engine, v, "chain 2: ");
    if (c2)
        all_equal(*c2, "chain 2: ");
    // The second chain is the first one for (1-p, 1-q).
    auto c1c = cor29_chain1(ctx.complement(), engine, v, "chain 1 on (p̄,q̄): ");
    if (c1c && c2)
        v.check("chain 2 equals chain 1 on (p̄,q̄)", (*c2)[0] == (*c1c)[0]);
    detail::attach_pair(v, ctx);
    return v;
}

template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict lemma210_battery(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("lemma210");
    if (!ring_is_star_reducing) {
        v.mark_not_applicable("ring is not *-reducing");
        return v;
    }
    auto prof = detail::build_profile<R>(engine, v,
                                         {{"(1-p)(1-q)", ctx.p_bar() * ctx.q_bar()},
                                          {"1-p-q", ctx.one() - ctx.p() - ctx.q()},
                                          {"pq", ctx.p() * ctx.q()}});
    v.check("three existence flags agree", prof.all_equal());
    if (!prof.all_equal())
        v.note("flags " + prof.flags());
    detail::attach_pair(v, ctx);
    return v;
}

/// b - b* ∈ R^d ⟺ bb* ∈ R^d, and then ind(bb*) <= max(1, ind((b-b*)^2)).
/// The unguarded inequality is recorded without being asserted: it fails
/// when (b-b*)^2 is invertible while bb* is a nonzero singular element.
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict lemma211_check(const ProjectionPair<R>& ctx, const E& engine) {
    TheoremVerdict v("lemma211");
    const auto& b = ctx.b();
    const auto skew = b - b.star();
    const auto bbs = b * b.star();
    auto skew_d = detail::certified_drazin(engine, skew, "b-b*", v);
    auto bbs_d = detail::certified_drazin(engine, bbs, "bb*", v);
    v.check("b-b* in R^d iff bb* in R^d", skew_d.has_value() == bbs_d.has_value());
    if (skew_d && bbs_d) {
        auto sq_d = detail::certified_drazin(engine, skew.squared(), "(b-b*)^2", v);
        if (v.check("(b-b*)^2 in R^d", sq_d.has_value())) {
            v.check("ind(bb*) <= max(1, ind((b-b*)^2))", bbs_d->index <= std::max<std::size_t>(1, sq_d->index));
            v.record("ind(bb*) <= ind((b-b*)^2)", bbs_d->index <= sq_d->index);
            v.note("ind(bb*) = " + std::to_string(bbs_d->index) +
                   ", ind((b-b*)^2) = " + std::to_string(sq_d->index));
        }
    }
    detail::attach_pair(v, ctx);
    return v;
}

/// r ± r^2 ∈ R^d ⇒ r ∈ R^d with ind(r) <= ind(r ± r^2).
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict lemma212_check(const Elem<R>& r, const E& engine) {
    TheoremVerdict v("lemma212");
    auto r_d = detail::certified_drazin(engine, r, "r", v);
    const auto r2 = r.squared();
    for (const auto& [tag, s] : {std::pair<std::string, Elem<R>>{"r+r^2", r + r2}, {"r-r^2", r - r2}}) {
        auto s_d = detail::certified_drazin(engine, s, tag, v);
        if (!s_d)
            continue;
        if (v.check(tag + " in R^d implies r in R^d", r_d.has_value()))
            v.check("ind(r) <= ind(" + tag + ")", r_d->index <= s_d->index);
    }
    detail::attach_element(v, r);
    return v;
}

/// pq - qp ∈ R† ⟺ pq ∈ R† and p-q ∈ R† (*-reducing rings). The
/// ring-independent facts used along the way are asserted everywhere.
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict thm213_check(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("thm213");
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto comm = p * q - q * p;
    const auto pmq = p - q;
    auto comm_d = detail::certified_dagger(engine, comm, "pq-qp", v);
    auto pq_d = detail::certified_dagger(engine, p * q, "pq", v);
    auto pmq_d = detail::certified_dagger(engine, pmq, "p-q", v);
    const bool rhs = pq_d && pmq_d;
    if (ring_is_star_reducing)
        v.check("pq-qp in R† iff (pq in R† and p-q in R†)", comm_d.has_value() == rhs);
    else
        v.record("pq-qp in R† iff (pq in R† and p-q in R†)", comm_d.has_value() == rhs);
    v.check("pq-qp = b-b*", comm == ctx.b() - ctx.b().star());
    if (comm_d) {
        v.check("(pq-qp)† = (pq-qp)# (commutes)", comm * *comm_d == *comm_d * comm);
        detail::check_mp(v, "[(pq-qp)†]^2 is [(pq-qp)^2]†", comm.squared(), comm_d->squared());
    }
    if (pmq_d) {
        detail::check_mp(v, "[(p-q)^2]† = [(p-q)†]^2", pmq.squared(), pmq_d->squared());
        v.check("bb* = pqp(p-q)^2", ctx.b() * ctx.b().star() == ctx.a() * pmq.squared());
        v.check("bb* = (p-q)^2 pqp", ctx.b() * ctx.b().star() == pmq.squared() * ctx.a());
    }
    detail::attach_pair(v, ctx);
    return v;
}

/// pq + qp ∈ R† ⟺ p+q ∈ R† and pq ∈ R† (*-reducing rings), with
/// (pq+qp)† = (p+q)†(p+q-1)† whenever both factors are MP invertible (in any
/// ring with involution).
template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict thm214_check(const ProjectionPair<R>& ctx, const E& engine, bool ring_is_star_reducing) {
    TheoremVerdict v("thm214");
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    const auto anti = p * q + q * p;
    const auto sum = p + q;
    const auto shifted = p + q - ctx.one();
    auto anti_d = detail::certified_dagger(engine, anti, "pq+qp", v);
    auto sum_d = detail::certified_dagger(engine, sum, "p+q", v);
    auto pq_d = detail::certified_dagger(engine, p * q, "pq", v);
    auto shifted_d = detail::certified_dagger(engine, shifted, "p+q-1", v);
    const bool rhs = sum_d && pq_d;
    if (ring_is_star_reducing) {
        v.check("pq+qp in R† iff (p+q in R† and pq in R†)", anti_d.has_value() == rhs);
        v.check("pq in R† iff p+q-1 in R†", pq_d.has_value() == shifted_d.has_value());
    } else {
        v.record("pq+qp in R† iff (p+q in R† and pq in R†)", anti_d.has_value() == rhs);
        v.record("pq in R† iff p+q-1 in R†", pq_d.has_value() == shifted_d.has_value());
    }
    v.check("pq+qp = (p+q)(p+q-1) = (p+q-1)(p+q)", anti == sum * shifted && anti == shifted * sum);
    if (sum_d && shifted_d) {
        const auto w = *sum_d * *shifted_d;
        detail::check_mp(v, "(p+q)†(p+q-1)† is (pq+qp)†", anti, w);
        v.check("(p+q)†(p+q-1)† equals engine (pq+qp)†", anti_d && *anti_d == w);
        v.check("(p+q)† and (p+q-1)† commute", *sum_d * *shifted_d == *shifted_d * *sum_d);
    }
    if (anti_d)
        v.check("(pq+qp)† = (pq+qp)# (commutes)", anti * *anti_d == *anti_d * anti);
    detail::attach_pair(v, ctx);
    return v;
}

} // namespace projmp

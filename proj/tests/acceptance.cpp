// Acceptance suite: one PASS/FAIL line per criterion, exact equality
// throughout. Exit status is nonzero if any criterion fails.

#include "projmp/brute_force.hpp"
#include "projmp/cli.hpp"
#include "projmp/finite_algebra.hpp"
#include "projmp/matrix_ring.hpp"
#include "projmp/projection_sources.hpp"
#include "projmp/theorems.hpp"

#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace projmp;
using namespace projmp::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds)
        o.require(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
    if (!o.ok)
        ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << secs << " s)";
    if (!o.detail.empty())
        line << ": " << o.detail;
    std::cout << line.str() << std::endl;
}

// The shared random trial sets: rational 4x4 and Gaussian 3x3 pairs.
constexpr std::uint64_t rational_trials = 200;
constexpr std::uint64_t gaussian_trials = 100;
constexpr std::uint64_t trial_seed = 2024;

template <class Field>
std::vector<std::pair<Matrix<Field>, Matrix<Field>>> trial_pairs(const Field& f, const char* ring, std::size_t n,
                                                                std::uint64_t count, std::set<std::pair<std::size_t, std::size_t>>* ranks) {
    std::vector<std::pair<Matrix<Field>, Matrix<Field>>> out;
    for (std::uint64_t t = 0; t < count; ++t) {
        auto spec = make_trial_spec(ring, n, trial_seed, t);
        if (ranks)
            ranks->insert({spec.rank_p, spec.rank_q});
        out.push_back(generate_pair(f, spec));
    }
    return out;
}

// Runs `body(ctx, ring)` on every pair of both random trial sets.
template <class Body>
void for_all_random(Body body) {
    RationalField q;
    GaussianRationalField qi;
    MatrixRing<RationalField> q4(q, 4);
    MatrixRing<GaussianRationalField> qi3(qi, 3);
    std::size_t t = 0;
    for (const auto& [p, r] : trial_pairs(q, "q", 4, rational_trials, nullptr))
        body(ProjectionPair<MatrixRing<RationalField>>(q4, p, r), q4, "q trial " + std::to_string(t++));
    t = 0;
    for (const auto& [p, r] : trial_pairs(qi, "qi", 3, gaussian_trials, nullptr))
        body(ProjectionPair<MatrixRing<GaussianRationalField>>(qi3, p, r), qi3, "qi trial " + std::to_string(t++));
}

std::string failing(const TheoremVerdict& v) {
    std::string s = v.theorem();
    for (const auto& f : v.failing_checks())
        s += " [" + f + "]";
    return s;
}

// Runs `body(ctx, engine, star_reducing, label)` on every projection pair of
// example26 and of 2x2 matrices over GF(2) and GF(3), with exhaustive-search
// engines.
template <class Body>
void for_all_finite(Body body) {
    auto alg = example26_algebra();
    BruteForceEngine<StructureConstantAlgebra> ae(alg, alg.dim() + 1);
    for (auto p : enumerate_projections(alg))
        for (auto q : enumerate_projections(alg))
            body(ProjectionPair<StructureConstantAlgebra>(alg, p, q), ae, alg.is_star_reducing(),
                 "example26 p=" + alg.format(p) + " q=" + alg.format(q));
    for (std::uint32_t prime : {2u, 3u}) {
        PrimeField f(prime);
        MatrixRing<PrimeField> ring(f, 2);
        BruteForceEngine<MatrixRing<PrimeField>> engine(ring, 3);
        auto ps = all_projections_matrix(2, f);
        for (const auto& p : ps)
            for (const auto& q : ps)
                body(ProjectionPair<MatrixRing<PrimeField>>(ring, p, q), engine, ring.is_star_reducing(),
                     ring.id() + " pair");
    }
}

} // namespace

int main() {
    criterion(1, "example26: p(1-q)p = 0 is MP invertible, p(1-q) = XY has no MP inverse among 64 elements", 1.0,
              [] {
                  Outcome o;
                  auto ev = cli::counterexample_evidence();
                  o.require(ev.candidates == 64, "candidate count");
                  o.require(ev.p_projection && ev.q_projection, "p, q projections");
                  o.require(ev.pqbp == "0" && ev.pqbp_dagger == "0", "p(1-q)p = 0 with MP inverse 0");
                  o.require(ev.pqb == "XY" && ev.pqb_witnesses == 0, "p(1-q) = XY without MP inverse");
                  std::ostringstream out;
                  o.require(cli::cmd_counterexample(false, out) == 0, "counterexample exit code");
                  o.require(out.str().find("p(1-q)p = 0: MP inverse 0; p(1-q) = XY: no MP inverse among 64 "
                                           "candidates\n") != std::string::npos,
                            "evidence line");
                  return o;
              });

    criterion(2, "six-way MP existence equivalence over all projection pairs of example26, GF(2) 2x2, GF(3) 2x2",
              10.0, [] {
                  Outcome o;
                  std::size_t pairs = 0;
                  for_all_finite([&](const auto& ctx, const auto& engine, bool, const std::string& label) {
                      ++pairs;
                      auto v = thm24_battery(ctx, engine);
                      auto flags = v.find("six existence flags agree");
                      o.require(flags && flags->ok, "flags disagree: " + label);
                      o.require(v.passed(), failing(v) + " " + label);
                  });
                  o.require(pairs == 144 + 16 + 36, "pair count " + std::to_string(pairs));
                  return o;
              });

    criterion(3, "(1-pq)† from (p-pqp)†, p(1-pq)†p = (p-pqp)†, (p-pqp)† = (1-pq)†p on 200 Q 4x4 + 100 Q(i) 3x3 pairs",
              60.0, [] {
                  Outcome o;
                  std::set<std::pair<std::size_t, std::size_t>> ranks;
                  trial_pairs(RationalField{}, "q", 4, rational_trials, &ranks);
                  o.require(ranks.size() >= 10, "rational ranks not mixed");
                  std::size_t n = 0;
                  for_all_random([&](const auto& ctx, const auto& ring, const std::string& label) {
                      ++n;
                      using E = std::decay_t<decltype(ctx.p())>;
                      auto pa = ctx.p() - ctx.a();
                      auto one_pq = ctx.one() - ctx.p() * ctx.q();
                      auto pa_d = ring.mp_inverse(pa.value());
                      auto one_pq_d = ring.mp_inverse(one_pq.value());
                      if (!pa_d || !one_pq_d) {
                          o.require(false, "missing dagger in " + label);
                          return;
                      }
                      E pa_dag(ring, *pa_d), one_pq_dag(ring, *one_pq_d);
                      auto x = eq215_formula(ctx, pa_dag);
                      o.require(verify_mp(one_pq, x).all, "formula output not (1-pq)† in " + label);
                      auto y = pxp_extraction(ctx, one_pq_dag);
                      o.require(verify_mp(pa, y).all, "p(1-pq)†p not (p-pqp)† in " + label);
                      o.require(pa_dag == one_pq_dag * ctx.p(), "(p-pqp)† != (1-pq)†p in " + label);
                  });
                  o.require(n == rational_trials + gaussian_trials, "trial count");
                  return o;
              });

    criterion(4, "q̄(pq̄p)† - q(p̄qp̄)† is the MP inverse of p-q and equals the solver's on all random pairs", 0,
              [] {
                  Outcome o;
                  for_all_random([&](const auto& ctx, const auto& ring, const std::string& label) {
                      auto w = diff_mp_formula(ctx, ring);
                      if (!w) {
                          o.require(false, "formula not applicable in " + label);
                          return;
                      }
                      auto pmq = ctx.p() - ctx.q();
                      o.require(verify_mp(pmq, *w).all, "not an MP inverse in " + label);
                      auto s = ring.mp_inverse(pmq.value());
                      o.require(s && *s == w->value(), "differs from solver in " + label);
                  });
                  return o;
              });

    criterion(5, "(pq̄)† = (p-q)†p whenever p-q is MP invertible", 0, [] {
        Outcome o;
        std::size_t applicable = 0;
        for_all_random([&](const auto& ctx, const auto& ring, const std::string& label) {
            auto pmq = ring.mp_inverse((ctx.p() - ctx.q()).value());
            if (!pmq)
                return;
            ++applicable;
            auto pqb = ring.mp_inverse((ctx.p() * ctx.q_bar()).value());
            o.require(pqb && *pqb == ring.mul(*pmq, ctx.p().value()), "mismatch in " + label);
        });
        o.require(applicable > 0, "no applicable trials");
        return o;
    });

    criterion(6, "six-term and eight-term dagger chains are pairwise equal on all applicable pairs", 0, [] {
        Outcome o;
        std::size_t applicable = 0;
        for_all_random([&](const auto& ctx, const auto& ring, const std::string& label) {
            auto v = cor29_chains(ctx, ring, true);
            if (!v.applicable())
                return;
            ++applicable;
            o.require(v.passed(), failing(v) + " in " + label);
            TheoremVerdict scratch("chains");
            auto c1 = cor29_chain1(ctx, ring, scratch, "");
            auto c2 = cor29_chain2(ctx, ring, scratch, "");
            o.require(c1 && c1->size() == 6 && c2 && c2->size() == 8, "chain sizes in " + label);
            if (c1 && c2) {
                for (const auto& x : *c1)
                    o.require(x == (*c1)[0], "chain 1 in " + label);
                for (const auto& x : *c2)
                    o.require(x == (*c2)[0], "chain 2 in " + label);
            }
        });
        o.require(applicable > 0, "no applicable trials");
        return o;
    });

    criterion(7, "(p+q)†(p+q-1)† = (pq+qp)†; commutator and anti-commutator equivalences on random and finite rings",
              0, [] {
                  Outcome o;
                  std::size_t formula = 0;
                  for_all_random([&](const auto& ctx, const auto& ring, const std::string& label) {
                      auto sum = ring.mp_inverse((ctx.p() + ctx.q()).value());
                      auto shifted = ring.mp_inverse((ctx.p() + ctx.q() - ctx.one()).value());
                      if (sum && shifted) {
                          ++formula;
                          auto anti = ctx.p() * ctx.q() + ctx.q() * ctx.p();
                          o.require(verify_mp(ring, anti.value(), ring.mul(*sum, *shifted)).all,
                                    "product formula in " + label);
                      }
                      for (const auto& v : {thm213_check(ctx, ring, true), thm214_check(ctx, ring, true)})
                          o.require(v.passed(), failing(v) + " in " + label);
                  });
                  for_all_finite([&](const auto& ctx, const auto& engine, bool sr, const std::string& label) {
                      for (const auto& v : {thm213_check(ctx, engine, sr), thm214_check(ctx, engine, sr)})
                          o.require(v.passed(), failing(v) + " in " + label);
                  });
                  o.require(formula > 0, "product formula never applicable");
                  return o;
              });

    criterion(8, "bb* = (p-a)-(p-a)^2, b*b = d-d^2, db* = b*(p-a) for every generated pair", 0, [] {
        Outcome o;
        std::size_t pairs = 0;
        for_all_random([&](const auto& ctx, const auto&, const std::string& label) {
            ++pairs;
            auto v = lemma22_identities(ctx);
            o.require(v.passed(), failing(v) + " in " + label);
        });
        for_all_finite([&](const auto& ctx, const auto&, bool, const std::string& label) {
            ++pairs;
            auto v = lemma22_identities(ctx);
            o.require(v.passed(), failing(v) + " in " + label);
        });
        o.require(pairs == 300 + 196, "pair count " + std::to_string(pairs));
        return o;
    });

    criterion(9, "GF(2) 2x2 MP solver matches exhaustive search; Drazin witnesses valid on 200 random Q 4x4", 0, [] {
        Outcome o;
        MatrixRing<PrimeField> gf2(PrimeField(2), 2);
        for (std::uint64_t i = 0; i < gf2.cardinality(); ++i) {
            auto a = gf2.element_at(i);
            o.require(gf2.mp_inverse(a) == brute_force_mp(gf2, a), "MP mismatch at matrix " + std::to_string(i));
        }
        MatrixRing<RationalField> q4(RationalField{}, 4);
        SplitMix64 rng(trial_seed);
        for (int t = 0; t < 200; ++t) {
            auto a = random_mixed_square(4, rng);
            auto d = q4.drazin_inverse(a);
            o.require(d && verify_drazin(q4, a, d->inverse, d->index).valid(),
                      "Drazin witness invalid at trial " + std::to_string(t));
        }
        return o;
    });

    criterion(10, "canonical pair: (1-pq)†, (p-pqp)†, (p-q)† match direct 2x2 inversion", 0, [] {
        Outcome o;
        RationalField f;
        MatrixRing<RationalField> q2(f, 2);
        auto p = qmat({{"1", "0"}, {"0", "0"}});
        auto q = qmat({{"1/2", "1/2"}, {"1/2", "1/2"}});
        auto one_pq = q2.one() - p * q;
        auto direct = inverse_2x2(one_pq);
        o.require(direct && q2.mp_inverse(one_pq) == *direct, "(1-pq)†");
        o.require(direct && *direct == qmat({{"2", "1"}, {"0", "1"}}), "(1-pq)† value");

        // p - pqp = diag(c, 0): invert the nonzero entry directly.
        auto pa = p - p * q * p;
        QMatrix pa_direct(f, 2, 2);
        pa_direct(0, 0) = 1 / pa(0, 0);
        o.require(pa(0, 1) == 0 && pa(1, 0) == 0 && pa(1, 1) == 0, "p-pqp not diag(c,0)");
        o.require(q2.mp_inverse(pa) == pa_direct, "(p-pqp)†");
        o.require(pa_direct == qmat({{"2", "0"}, {"0", "0"}}), "(p-pqp)† value");

        auto pmq = p - q;
        auto pmq_direct = inverse_2x2(pmq);
        o.require(pmq_direct && q2.mp_inverse(pmq) == *pmq_direct, "(p-q)†");
        o.require(pmq_direct && *pmq_direct == qmat({{"1", "-1"}, {"-1", "-1"}}), "(p-q)† value");
        return o;
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}

#include "projmp/brute_force.hpp"
#include "projmp/finite_algebra.hpp"
#include "projmp/matrix_ring.hpp"
#include "projmp/projection_sources.hpp"
#include "projmp/theorems.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace projmp;
using namespace projmp::testing;

namespace {

using QRing = MatrixRing<RationalField>;
using QPair = ProjectionPair<QRing>;

const RationalField Q;
const QRing Q2(Q, 2);

const QMatrix P = qmat({{"1", "0"}, {"0", "0"}});
const QMatrix Qh = qmat({{"1/2", "1/2"}, {"1/2", "1/2"}});

// Rank-one oracle: A† = A* / tr(A*A).
QMatrix rank_one_dagger(const QMatrix& a) {
    auto g = a.star() * a;
    Rational tr = 0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        tr += g(i, i);
    return a.star().scaled(1 / tr);
}

// Runs every pair battery and returns the verdicts.
template <StarRing R, class E>
std::vector<TheoremVerdict> all_batteries(const ProjectionPair<R>& ctx, const E& engine, bool sr) {
    return {lemma22_identities(ctx),       lemma23_identities(ctx, engine), thm24_battery(ctx, engine),
            cor25_battery(ctx, engine, sr), cor26_battery(ctx, engine, sr), thm27_check(ctx, engine),
            cor28_battery(ctx, engine, sr), cor29_chains(ctx, engine, sr),  lemma210_battery(ctx, engine, sr),
            lemma211_check(ctx, engine),    thm213_check(ctx, engine, sr),  thm214_check(ctx, engine, sr)};
}

std::string describe(const TheoremVerdict& v) {
    std::string s = v.theorem() + ":";
    for (const auto& f : v.failing_checks())
        s += " [" + f + "]";
    return s;
}

template <StarRing R, class E>
void expect_no_failures(const ProjectionPair<R>& ctx, const E& engine, bool sr) {
    for (const auto& v : all_batteries(ctx, engine, sr))
        EXPECT_NE(v.status(), VerdictStatus::failed)
            << describe(v) << "\np=" << ctx.ring().format(ctx.p().value()) << "q=" << ctx.ring().format(ctx.q().value());
}

template <StarRing R, class E>
void expect_all_passed(const ProjectionPair<R>& ctx, const E& engine, bool sr) {
    for (const auto& v : all_batteries(ctx, engine, sr))
        EXPECT_EQ(v.status(), VerdictStatus::passed) << describe(v);
}

bool has_passing(const TheoremVerdict& v, const std::string& name) {
    auto c = v.find(name);
    return c && c->asserted && c->ok;
}

} // namespace

TEST(CanonicalPair, OracleValues) {
    QPair ctx(Q2, P, Qh);
    auto one_pq = Q2.one() - P * Qh;
    auto expect_one_pq = *inverse_2x2(one_pq);
    EXPECT_EQ(expect_one_pq, qmat({{"2", "1"}, {"0", "1"}}));
    EXPECT_EQ(*Q2.mp_inverse(one_pq), expect_one_pq);

    auto p_pqp = P - P * Qh * P;
    EXPECT_EQ(rank_one_dagger(p_pqp), qmat({{"2", "0"}, {"0", "0"}}));
    EXPECT_EQ(*Q2.mp_inverse(p_pqp), rank_one_dagger(p_pqp));
    EXPECT_EQ(pxp_extraction(ctx, Elem<QRing>(Q2, expect_one_pq)).value(), rank_one_dagger(p_pqp));
    EXPECT_EQ(eq215_formula(ctx, Elem<QRing>(Q2, rank_one_dagger(p_pqp))).value(), expect_one_pq);

    auto pmq = P - Qh;
    EXPECT_EQ(*inverse_2x2(pmq), qmat({{"1", "-1"}, {"-1", "-1"}}));
    EXPECT_EQ(diff_mp_formula(ctx, Q2)->value(), *inverse_2x2(pmq));

    auto pqb = P * (Q2.one() - Qh);
    EXPECT_EQ(rank_one_dagger(pqb), qmat({{"1", "0"}, {"-1", "0"}}));
    EXPECT_EQ(*inverse_2x2(pmq) * P, rank_one_dagger(pqb));
    EXPECT_EQ(P * rank_one_dagger(pqb), qmat({{"1", "0"}, {"0", "0"}}));
}

TEST(CanonicalPair, AllBatteriesPass) {
    QPair ctx(Q2, P, Qh);
    expect_all_passed(ctx, Q2, true);
    expect_all_passed(ctx.swapped(), Q2, true);
    expect_all_passed(ctx.complement(), Q2, true);

    auto t24 = thm24_battery(ctx, Q2);
    EXPECT_TRUE(has_passing(t24, "formula output equals engine (1-pq)†"));
    EXPECT_TRUE(has_passing(t24, "p(1-pq)†p equals engine (p-pqp)†"));
    EXPECT_TRUE(has_passing(t24, "(1-qp)† = ((1-pq)†)*"));
    EXPECT_TRUE(has_passing(cor25_battery(ctx, Q2, true), "(p-pqp)† = (1-pq)†p"));
    EXPECT_TRUE(has_passing(thm27_check(ctx, Q2), "(pq̄)† = (p-q)†p"));
    EXPECT_TRUE(has_passing(cor29_chains(ctx, Q2, true), "chain 1: expression 6 equals expression 1"));
    EXPECT_TRUE(has_passing(cor29_chains(ctx, Q2, true), "chain 2: expression 8 equals expression 1"));
    EXPECT_TRUE(has_passing(thm214_check(ctx, Q2, true), "(p+q)†(p+q-1)† equals engine (pq+qp)†"));
}

TEST(CanonicalPair, Cor29CommonValue) {
    QPair ctx(Q2, P, Qh);
    TheoremVerdict v("scratch");
    auto c1 = cor29_chain1(ctx, Q2, v, "");
    ASSERT_TRUE(c1);
    ASSERT_EQ(c1->size(), 6u);
    for (const auto& x : *c1)
        EXPECT_EQ(x.value(), qmat({{"1", "0"}, {"0", "0"}}));
    auto c2 = cor29_chain2(ctx, Q2, v, "");
    ASSERT_TRUE(c2);
    EXPECT_EQ(c2->size(), 8u);
    EXPECT_EQ(v.failures(), 0u);
}

// b = [[0,1/2],[0,0]]: (b-b*)^2 = -I/4 has index 0 while bb* = diag(1/4,0)
// has index 1, so only the guarded inequality holds.
TEST(CanonicalPair, Lemma211IndexInequality) {
    QPair ctx(Q2, P, Qh);
    auto skew = ctx.b() - ctx.b().star();
    EXPECT_EQ(skew.squared().value(), qmat({{"-1/4", "0"}, {"0", "-1/4"}}));
    EXPECT_EQ(Q2.drazin_inverse(skew.squared().value())->index, 0u);
    auto bbs = ctx.b() * ctx.b().star();
    EXPECT_EQ(bbs.value(), qmat({{"1/4", "0"}, {"0", "0"}}));
    EXPECT_EQ(Q2.drazin_inverse(bbs.value())->index, 1u);

    auto v = lemma211_check(ctx, Q2);
    EXPECT_TRUE(v.passed());
    auto literal = v.find("ind(bb*) <= ind((b-b*)^2)");
    ASSERT_NE(literal, nullptr);
    EXPECT_FALSE(literal->asserted);
    EXPECT_FALSE(literal->ok);
}

TEST(DegeneratePairs, AllBatteriesPass) {
    auto I = Q2.one(), Z = Q2.zero();
    for (auto [p, q] : std::vector<std::pair<QMatrix, QMatrix>>{
             {P, P}, {Z, Qh}, {Qh, Z}, {I, Qh}, {P, I - P}, {Z, Z}, {I, I}, {Qh, Qh}})
        expect_all_passed(QPair(Q2, p, q), Q2, true);
}

TEST(WitnessGuards, RejectBadWitnesses) {
    QPair ctx(Q2, P, Qh);
    EXPECT_THROW(eq215_formula(ctx, ctx.one()), InvalidWitness);
    EXPECT_THROW(pxp_extraction(ctx, ctx.zero()), InvalidWitness);
}

TEST(RandomPairs, RationalFourByFour) {
    QRing q4(Q, 4);
    for (std::uint64_t t = 0; t < 30; ++t) {
        auto spec = make_trial_spec("q", 4, 11, t);
        auto [p, q] = generate_pair(Q, spec);
        expect_all_passed(QPair(q4, p, q), q4, true);
    }
}

TEST(RandomPairs, GaussianThreeByThree) {
    GaussianRationalField f;
    MatrixRing<GaussianRationalField> r(f, 3);
    for (std::uint64_t t = 0; t < 20; ++t) {
        auto spec = make_trial_spec("qi", 3, 5, t);
        auto [p, q] = generate_pair(f, spec);
        expect_all_passed(ProjectionPair<MatrixRing<GaussianRationalField>>(r, p, q), r, true);
    }
}

TEST(Lemma21, RandomElements) {
    QRing q4(Q, 4);
    SplitMix64 rng(3);
    for (int t = 0; t < 40; ++t) {
        auto a = random_mixed_square(4, rng);
        auto v = lemma21_checks(Elem<QRing>(q4, a), q4, true);
        EXPECT_TRUE(v.passed()) << describe(v);
    }
}

TEST(Lemma212, Examples) {
    auto nil = qmat({{"0", "1"}, {"0", "0"}});
    for (const auto& r : {nil, P, Qh, Q2.zero(), Q2.one().scaled(-1), qmat({{"2", "1"}, {"0", "-1"}})}) {
        auto v = lemma212_check(Elem<QRing>(Q2, r), Q2);
        EXPECT_TRUE(v.passed()) << describe(v);
        EXPECT_FALSE(v.checks().empty());
    }
    // r = -I: r + r^2 = 0 has index 1 and r is invertible
    auto v = lemma212_check(Elem<QRing>(Q2, Q2.one().scaled(-1)), Q2);
    EXPECT_TRUE(has_passing(v, "ind(r) <= ind(r+r^2)"));
}

TEST(Example26, AllPairsNoFailures) {
    auto alg = example26_algebra();
    BruteForceEngine<StructureConstantAlgebra> engine(alg, 7);
    auto ps = enumerate_projections(alg);
    ASSERT_FALSE(alg.is_star_reducing());
    for (auto p : ps)
        for (auto q : ps) {
            ProjectionPair<StructureConstantAlgebra> ctx(alg, p, q);
            expect_no_failures(ctx, engine, false);
            EXPECT_TRUE(thm24_battery(ctx, engine).passed());
            EXPECT_EQ(cor25_battery(ctx, engine, false).status(), VerdictStatus::not_applicable);
        }
}

// p = X, q = 1+Y: p-pqp = 0 has an MP inverse but p-pq = XY has none, so
// the ten-element equivalence needs the *-reducing hypothesis.
TEST(Example26, CounterexampleToTenElementEquivalence) {
    auto alg = example26_algebra();
    BruteForceEngine<StructureConstantAlgebra> engine(alg, 7);
    auto p = alg.parse("X"), q = alg.parse("1+Y");
    ProjectionPair<StructureConstantAlgebra> ctx(alg, p, q);

    EXPECT_EQ((ctx.p() - ctx.a()).value(), alg.zero());
    EXPECT_EQ(brute_force_mp(alg, alg.zero()), alg.zero());
    auto p_pq = (ctx.p() - ctx.p() * ctx.q()).value();
    EXPECT_EQ(p_pq, alg.parse("XY"));
    EXPECT_FALSE(brute_force_mp(alg, p_pq));

    auto forced = cor25_battery(ctx, engine, true);
    EXPECT_EQ(forced.status(), VerdictStatus::failed);
    auto flags = forced.find("ten existence flags agree");
    ASSERT_NE(flags, nullptr);
    EXPECT_FALSE(flags->ok);
    EXPECT_EQ(forced.counterexample().ring, "example26");
    EXPECT_EQ(forced.counterexample().elements,
              (std::vector<std::pair<std::string, std::string>>{{"p", "X"}, {"q", "1+Y"}}));

    EXPECT_EQ(cor25_battery(ctx, engine, false).status(), VerdictStatus::not_applicable);
    EXPECT_EQ(cor28_battery(ctx, engine, false).status(), VerdictStatus::not_applicable);
    EXPECT_TRUE(thm24_battery(ctx, engine).passed());
}

template <class Engine>
void exhaustive_gf(std::uint32_t prime, std::size_t n, bool brute) {
    PrimeField f(prime);
    MatrixRing<PrimeField> ring(f, n);
    const bool sr = ring.is_star_reducing();
    auto ps = all_projections_matrix(n, f);
    for (const auto& p : ps)
        for (const auto& q : ps) {
            ProjectionPair<MatrixRing<PrimeField>> ctx(ring, p, q);
            if constexpr (std::is_same_v<Engine, MatrixRing<PrimeField>>) {
                expect_no_failures(ctx, ring, sr);
            } else {
                ASSERT_TRUE(brute);
                BruteForceEngine<MatrixRing<PrimeField>> engine(ring, n + 1);
                expect_no_failures(ctx, engine, sr);
            }
        }
}

TEST(FiniteMatrixRings, GF2TwoByTwo) {
    exhaustive_gf<MatrixRing<PrimeField>>(2, 2, false);
    exhaustive_gf<BruteForceEngine<MatrixRing<PrimeField>>>(2, 2, true);
}

TEST(FiniteMatrixRings, GF3TwoByTwo) {
    exhaustive_gf<MatrixRing<PrimeField>>(3, 2, false);
    exhaustive_gf<BruteForceEngine<MatrixRing<PrimeField>>>(3, 2, true);
}

TEST(FiniteMatrixRings, GF2AndGF3ThreeByThree) {
    exhaustive_gf<MatrixRing<PrimeField>>(2, 3, false);
    exhaustive_gf<MatrixRing<PrimeField>>(3, 3, false);
}

#pragma once

// Verification campaigns: run a set of theorem batteries over many projection
// pairs of one ring instance and aggregate the verdicts.
//
// Pairs come from exhaustive enumeration (example26, small prime-field matrix
// rings) or from seeded random generation. Trials run on a thread pool; each
// trial's outcome depends only on its own index, so reports are identical for
// any number of workers.

#include "projmp/brute_force.hpp"
#include "projmp/finite_algebra.hpp"
#include "projmp/matrix_ring.hpp"
#include "projmp/projection_sources.hpp"
#include "projmp/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#ifndef PROJMP_VERSION
#define PROJMP_VERSION "1.0.0"
#endif

namespace projmp {

inline constexpr const char* version = PROJMP_VERSION;

/// Theorem ids in canonical order.
inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {"lemma21", "lemma22",  "lemma23",  "thm24",  "cor25",
                                                 "cor26",   "thm27",    "cor28",    "cor29",  "lemma210",
                                                 "lemma211", "lemma212", "thm213", "thm214"};
    return ids;
}

/// "all" or a comma list; ids are validated and returned in the given order
/// without duplicates.
inline std::vector<std::string> parse_theorem_list(const std::string& text) {
    if (text == "all")
        return theorem_ids();
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string id = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto& ids = theorem_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw std::invalid_argument("unknown theorem id '" + id + "'");
        if (std::find(out.begin(), out.end(), id) == out.end())
            out.push_back(id);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

struct RingChoice {
    enum class Kind { q, qi, gf, example26 };
    Kind kind = Kind::q;
    std::uint32_t prime = 0;
};

/// q | qi | gf:<p> | example26
inline RingChoice parse_ring(const std::string& s) {
    if (s == "q")
        return {RingChoice::Kind::q};
    if (s == "qi")
        return {RingChoice::Kind::qi};
    if (s == "example26")
        return {RingChoice::Kind::example26};
    if (s.rfind("gf:", 0) == 0 && s.size() > 3 && s.size() <= 8 &&
        std::all_of(s.begin() + 3, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        auto p = static_cast<std::uint32_t>(std::stoul(s.substr(3)));
        PrimeField check(p); // validates the modulus
        return {RingChoice::Kind::gf, p};
    }
    throw std::invalid_argument("unknown ring '" + s + "' (expected q, qi, gf:<p> or example26)");
}

struct CampaignConfig {
    std::string ring = "q";
    std::size_t n = 3;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<std::string> theorems = theorem_ids();
    bool exhaustive = false; // filled in by the runner

    bool operator==(const CampaignConfig&) const = default;
};

struct TheoremAggregate {
    std::string theorem;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t not_applicable = 0;

    bool operator==(const TheoremAggregate&) const = default;
};

struct FailureRecord {
    std::string theorem;
    TrialSpec spec;
    std::string ring_id;
    std::string p;
    std::string q;
    std::vector<std::string> failing_checks;

    bool operator==(const FailureRecord&) const = default;
};

struct TrialResult {
    std::string theorem;
    std::uint64_t trial = 0;
    VerdictStatus status = VerdictStatus::passed;
    std::vector<std::string> failing_checks;

    bool operator==(const TrialResult&) const = default;
};

struct CampaignReport {
    int schema = 1;
    std::string version = projmp::version;
    CampaignConfig config;
    std::vector<TheoremAggregate> aggregates;
    std::vector<FailureRecord> failures;
    std::vector<TrialResult> results;
    double duration_seconds = 0;

    bool operator==(const CampaignReport&) const = default;

    bool all_passed() const {
        return std::all_of(aggregates.begin(), aggregates.end(), [](const auto& a) { return a.failed == 0; });
    }
    const TheoremAggregate& aggregate(const std::string& theorem) const {
        for (const auto& a : aggregates)
            if (a.theorem == theorem)
                return a;
        throw std::out_of_range("no aggregate for " + theorem);
    }
};

/// Exhaustive enumeration is used when the ring has at most this many
/// projection pairs.
inline constexpr std::size_t exhaustive_pair_limit = 4096;

/// Derived elements fed to the single-element batteries.
template <StarRing R>
std::vector<std::pair<std::string, Elem<R>>> derived_elements(const ProjectionPair<R>& ctx) {
    const auto& p = ctx.p();
    const auto& q = ctx.q();
    return {{"pq", p * q},       {"pq̄", p * ctx.q_bar()}, {"p̄q", ctx.p_bar() * q},
            {"p-q", p - q},      {"p+q", p + q},          {"pq-qp", p * q - q * p}};
}

template <StarRing R, class E>
    requires InverseEngine<E, R>
TheoremVerdict run_theorem(const std::string& id, const ProjectionPair<R>& ctx, const E& engine, bool sr) {
    if (id == "lemma21" || id == "lemma212") {
        TheoremVerdict v(id);
        for (const auto& [name, r] : derived_elements(ctx))
            v.absorb(id == "lemma21" ? lemma21_checks(r, engine, sr) : lemma212_check(r, engine), "r=" + name + ": ");
        detail::attach_pair(v, ctx);
        return v;
    }
    if (id == "lemma22")
        return lemma22_identities(ctx);
    if (id == "lemma23")
        return lemma23_identities(ctx, engine);
    if (id == "thm24")
        return thm24_battery(ctx, engine);
    if (id == "cor25")
        return cor25_battery(ctx, engine, sr);
    if (id == "cor26")
        return cor26_battery(ctx, engine, sr);
    if (id == "thm27")
        return thm27_check(ctx, engine);
    if (id == "cor28")
        return cor28_battery(ctx, engine, sr);
    if (id == "cor29")
        return cor29_chains(ctx, engine, sr);
    if (id == "lemma210")
        return lemma210_battery(ctx, engine, sr);
    if (id == "lemma211")
        return lemma211_check(ctx, engine);
    if (id == "thm213")
        return thm213_check(ctx, engine, sr);
    if (id == "thm214")
        return thm214_check(ctx, engine, sr);
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

namespace detail {

struct TrialOutcome {
    TrialSpec spec;
    std::string ring_id, p, q;
    std::vector<TrialResult> results;
};

// Runs body(i) for i in [0, count) on `jobs` threads; the first exception is
// rethrown after all workers stop.
inline void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)>& body) {
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1)));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
}

// source(i) -> (TrialSpec, p, q)
template <StarRing R, class E, class Source>
std::vector<TrialOutcome> run_pairs(const R& ring, const E& engine, bool sr, std::uint64_t count,
                                    const Source& source, const std::vector<std::string>& theorems, unsigned jobs) {
    std::vector<TrialOutcome> out(count);
    parallel_for(count, jobs, [&](std::uint64_t i) {
        TrialOutcome& o = out[i];
        o.ring_id = ring.id();
        try {
            auto [spec, p, q] = source(i);
            o.spec = spec;
            o.p = ring.format(p);
            o.q = ring.format(q);
            ProjectionPair<R> ctx(ring, p, q);
            for (const auto& id : theorems) {
                auto v = run_theorem(id, ctx, engine, sr);
                o.results.push_back({id, i, v.status(), v.failing_checks()});
            }
        } catch (const GenerationFailed& e) {
            o.spec.trial = i;
            for (const auto& id : theorems)
                o.results.push_back({id, i, VerdictStatus::failed, {std::string("pair generation: ") + e.what()}});
        }
    });
    return out;
}

template <class Field>
std::vector<TrialOutcome> run_random_matrix(const Field& field, const CampaignConfig& cfg, unsigned jobs) {
    MatrixRing<Field> ring(field, cfg.n);
    auto source = [&](std::uint64_t i) {
        auto spec = make_trial_spec(cfg.ring, cfg.n, cfg.seed, i);
        auto [p, q] = generate_pair(field, spec);
        return std::tuple{spec, p, q};
    };
    return run_pairs(ring, ring, ring.is_star_reducing(), cfg.trials, source, cfg.theorems, jobs);
}

} // namespace detail

/// Runs the campaign; `jobs` = 0 uses every hardware thread.
inline CampaignReport run_campaign(CampaignConfig cfg, unsigned jobs = 0) {
    if (cfg.n == 0)
        throw std::invalid_argument("--n must be at least 1");
    if (cfg.theorems.empty())
        throw std::invalid_argument("no theorems selected");
    for (const auto& id : cfg.theorems)
        if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
            throw std::invalid_argument("unknown theorem id '" + id + "'");
    const RingChoice choice = parse_ring(cfg.ring);
    const auto start = std::chrono::steady_clock::now();

    std::vector<detail::TrialOutcome> outcomes;
    switch (choice.kind) {
    case RingChoice::Kind::q:
        outcomes = detail::run_random_matrix(RationalField{}, cfg, jobs);
        break;
    case RingChoice::Kind::qi:
        outcomes = detail::run_random_matrix(GaussianRationalField{}, cfg, jobs);
        break;
    case RingChoice::Kind::example26: {
        cfg.exhaustive = true;
        auto alg = example26_algebra();
        BruteForceEngine<StructureConstantAlgebra> engine(alg, alg.dim() + 1);
        auto ps = enumerate_projections(alg);
        auto source = [&](std::uint64_t i) {
            TrialSpec spec{cfg.ring, alg.dim(), 0, 0, cfg.seed, i};
            return std::tuple{spec, ps[i / ps.size()], ps[i % ps.size()]};
        };
        outcomes = detail::run_pairs(alg, engine, alg.is_star_reducing(), ps.size() * ps.size(), source,
                                     cfg.theorems, jobs);
        break;
    }
    case RingChoice::Kind::gf: {
        PrimeField field(choice.prime);
        MatrixRing<PrimeField> ring(field, cfg.n);
        std::vector<Matrix<PrimeField>> ps;
        if (ring.cardinality() <= exhaustive_matrix_limit)
            ps = all_projections_matrix(cfg.n, field);
        if (!ps.empty() && ps.size() * ps.size() <= exhaustive_pair_limit) {
            cfg.exhaustive = true;
            auto source = [&](std::uint64_t i) {
                const auto& p = ps[i / ps.size()];
                const auto& q = ps[i % ps.size()];
                TrialSpec spec{cfg.ring, cfg.n, rank(p), rank(q), cfg.seed, i};
                return std::tuple{spec, p, q};
            };
            outcomes = detail::run_pairs(ring, ring, ring.is_star_reducing(), ps.size() * ps.size(), source,
                                         cfg.theorems, jobs);
        } else {
            outcomes = detail::run_random_matrix(field, cfg, jobs);
        }
        break;
    }
    }

    CampaignReport report;
    report.config = cfg;
    for (const auto& id : cfg.theorems)
        report.aggregates.push_back({id});
    for (const auto& o : outcomes) {
        for (std::size_t t = 0; t < o.results.size(); ++t) {
            const auto& r = o.results[t];
            auto& agg = report.aggregates[t];
            ++agg.checked;
            switch (r.status) {
            case VerdictStatus::passed:
                ++agg.passed;
                break;
            case VerdictStatus::failed:
                ++agg.failed;
                report.failures.push_back({r.theorem, o.spec, o.ring_id, o.p, o.q, r.failing_checks});
                break;
            case VerdictStatus::not_applicable:
                ++agg.not_applicable;
                break;
            }
            report.results.push_back(r);
        }
    }
    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const auto& a, const auto& b) { return a.spec.trial < b.spec.trial; });
    report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace projmp

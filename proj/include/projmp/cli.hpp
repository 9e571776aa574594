#pragma once

// The commands behind the `projmp` executable. Each returns the process exit
// code: 0 success, 1 a negative result (failed trials, no inverse), 2 usage
// or input errors.

#include "projmp/brute_force.hpp"
#include "projmp/campaign.hpp"
#include "projmp/finite_algebra.hpp"
#include "projmp/matrix_io.hpp"
#include "projmp/report_io.hpp"
#include "projmp/solvers.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace projmp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

namespace detail {

// Writes `text` to `path`, or to `out` when the path is empty or "-".
inline bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path.empty() || path == "-") {
        out << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    f << text;
    return static_cast<bool>(f);
}

inline std::string one_line(const std::string& matrix_text) {
    std::string s;
    for (char c : matrix_text)
        s += c == '\n' ? ' ' : c;
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

} // namespace detail

struct VerifyOptions {
    std::string ring = "q";
    std::size_t n = 3;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::string theorems = "all";
    std::string out;
    std::string format = "json";
    unsigned jobs = 0;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    if (o.format != "json" && o.format != "csv") {
        err << "error: --format must be json or csv\n";
        return exit_usage;
    }
    CampaignReport report;
    try {
        CampaignConfig cfg;
        cfg.ring = o.ring;
        cfg.n = o.n;
        cfg.trials = o.trials;
        cfg.seed = o.seed;
        cfg.theorems = parse_theorem_list(o.theorems);
        report = run_campaign(cfg, o.jobs);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const std::string text = o.format == "json" ? write_report_json(report) : write_report_csv(report);
    if (!detail::emit(o.out, text, out, err))
        return exit_usage;
    for (const auto& a : report.aggregates)
        err << a.theorem << ": checked " << a.checked << ", passed " << a.passed << ", failed " << a.failed
            << ", not applicable " << a.not_applicable << "\n";
    return report.all_passed() ? exit_ok : exit_negative;
}

struct InverseOptions {
    std::string kind = "mp";
    std::string in = "-";
    std::string out;
};

inline int cmd_inverse(const InverseOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
    if (o.kind != "mp" && o.kind != "drazin" && o.kind != "group") {
        err << "error: --kind must be mp, drazin or group\n";
        return exit_usage;
    }
    AnyMatrix m;
    try {
        if (o.in.empty() || o.in == "-") {
            m = read_matrix(in);
        } else {
            std::ifstream f(o.in, std::ios::binary);
            if (!f) {
                err << "error: cannot read " << o.in << "\n";
                return exit_usage;
            }
            m = read_matrix(f);
        }
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
        return exit_usage;
    }
    return std::visit(
        [&](const auto& a) -> int {
            if (o.kind != "mp" && a.rows() != a.cols()) {
                err << "error: " << o.kind << " inverse needs a square matrix\n";
                return exit_usage;
            }
            if (o.kind == "mp") {
                if (auto b = mp_inverse(a))
                    return detail::emit(o.out, write_matrix(*b), out, err) ? exit_ok : exit_usage;
                out << "{\"status\":\"not_invertible\",\"kind\":\"mp\",\"reason\":\"NotMPInvertible\"}\n";
                return exit_negative;
            }
            if (o.kind == "group") {
                if (auto b = group_inverse(a))
                    return detail::emit(o.out, write_matrix(*b), out, err) ? exit_ok : exit_usage;
                out << "{\"status\":\"not_invertible\",\"kind\":\"group\",\"reason\":\"NoGroupInverse\"}\n";
                return exit_negative;
            }
            auto d = drazin_inverse(a);
            err << "index " << d.index << "\n";
            return detail::emit(o.out, write_matrix(d.inverse), out, err) ? exit_ok : exit_usage;
        },
        m);
}

/// Evidence that p(1-q)p is MP invertible while p(1-q) is not, for p = X
/// and q = 1+Y in the example26 algebra.
struct CounterexampleEvidence {
    std::uint64_t candidates = 0;
    bool p_projection = false;
    bool q_projection = false;
    std::string pqbp;
    std::optional<std::string> pqbp_dagger;
    std::string pqb;
    std::size_t pqb_witnesses = 0;
    std::size_t fail_eq[4] = {0, 0, 0, 0};

    bool reproduced() const {
        return p_projection && q_projection && pqbp == "0" && pqbp_dagger == "0" && pqb == "XY" && pqb_witnesses == 0;
    }
};

inline CounterexampleEvidence counterexample_evidence() {
    auto alg = example26_algebra();
    CounterexampleEvidence ev;
    const auto p = alg.parse("X");
    const auto q = alg.parse("1+Y");
    const auto pqb = alg.mul(p, alg.sub(alg.one(), q));
    const auto pqbp = alg.mul(pqb, p);
    ev.candidates = alg.cardinality();
    ev.p_projection = is_projection(alg, p);
    ev.q_projection = is_projection(alg, q);
    ev.pqbp = alg.format(pqbp);
    if (auto d = brute_force_mp(alg, pqbp))
        ev.pqbp_dagger = alg.format(*d);
    ev.pqb = alg.format(pqb);
    for (std::uint64_t i = 0; i < alg.cardinality(); ++i) {
        auto r = verify_mp(alg, pqb, alg.element_at(i));
        ev.pqb_witnesses += r.all;
        ev.fail_eq[0] += !r.eq1;
        ev.fail_eq[1] += !r.eq2;
        ev.fail_eq[2] += !r.eq3;
        ev.fail_eq[3] += !r.eq4;
    }
    return ev;
}

inline int cmd_counterexample(bool json, std::ostream& out) {
    const auto ev = counterexample_evidence();
    if (json) {
        ordered_json j;
        j["ring"] = "example26";
        j["candidates"] = ev.candidates;
        j["p"] = {{"element", "X"}, {"projection", ev.p_projection}};
        j["q"] = {{"element", "1+Y"}, {"projection", ev.q_projection}};
        j["p(1-q)p"] = {{"element", ev.pqbp}, {"mp_inverse", ev.pqbp_dagger ? ordered_json(*ev.pqbp_dagger) : nullptr}};
        j["p(1-q)"] = {{"element", ev.pqb},
                       {"mp_witnesses", ev.pqb_witnesses},
                       {"candidates_failing",
                        {{"aba=a", ev.fail_eq[0]}, {"bab=b", ev.fail_eq[1]}, {"(ab)*=ab", ev.fail_eq[2]},
                         {"(ba)*=ba", ev.fail_eq[3]}}}};
        j["reproduced"] = ev.reproduced();
        out << j.dump(2) << "\n";
    } else {
        out << "ring example26: GF(2)<X,Y>/(X^2-X, Y^2-Y, XYX), " << ev.candidates << " elements\n";
        out << "p = X: " << (ev.p_projection ? "projection" : "NOT a projection") << "\n";
        out << "q = 1+Y: " << (ev.q_projection ? "projection" : "NOT a projection") << "\n";
        out << "p(1-q)p = " << ev.pqbp << ": MP inverse " << ev.pqbp_dagger.value_or("none") << "; p(1-q) = " << ev.pqb
            << ": ";
        if (ev.pqb_witnesses == 0)
            out << "no MP inverse among " << ev.candidates << " candidates\n";
        else
            out << ev.pqb_witnesses << " MP inverse(s) among " << ev.candidates << " candidates\n";
        out << "rejected candidates c failing aba=a: " << ev.fail_eq[0] << ", bab=b: " << ev.fail_eq[1]
            << ", (ab)*=ab: " << ev.fail_eq[2] << ", (ba)*=ba: " << ev.fail_eq[3] << " (a = " << ev.pqb << ")\n";
        out << (ev.reproduced() ? "reproduced" : "NOT reproduced") << "\n";
    }
    return ev.reproduced() ? exit_ok : exit_negative;
}

struct EnumerateOptions {
    std::string ring = "example26";
    std::size_t n = 2;
    std::string what = "projections";
};

inline int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
    if (o.what != "projections" && o.what != "mp-invertible") {
        err << "error: --what must be projections or mp-invertible\n";
        return exit_usage;
    }
    try {
        const RingChoice choice = parse_ring(o.ring);
        if (choice.kind == RingChoice::Kind::example26) {
            auto alg = example26_algebra();
            if (o.what == "projections") {
                for (auto e : enumerate_projections(alg))
                    out << alg.format(e) << "\n";
            } else {
                for (std::uint64_t i = 0; i < alg.cardinality(); ++i)
                    if (brute_force_mp(alg, alg.element_at(i)))
                        out << alg.format(alg.element_at(i)) << "\n";
            }
            return exit_ok;
        }
        if (choice.kind != RingChoice::Kind::gf) {
            err << "error: enumerate needs a finite ring (example26 or gf:<p>)\n";
            return exit_usage;
        }
        if (o.n == 0) {
            err << "error: --n must be at least 1\n";
            return exit_usage;
        }
        PrimeField field(choice.prime);
        MatrixRing<PrimeField> ring(field, o.n);
        check_enumerable(ring);
        for (std::uint64_t i = 0; i < ring.cardinality(); ++i) {
            auto m = ring.element_at(i);
            bool keep = o.what == "projections" ? is_projection(ring, m) : ring.mp_inverse(m).has_value();
            if (keep)
                out << detail::one_line(write_matrix(m)) << "\n";
        }
        return exit_ok;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace projmp::cli

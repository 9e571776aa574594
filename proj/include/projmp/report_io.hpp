#pragma once

// JSON and CSV forms of a CampaignReport. Requires the vendored nlohmann/json single header.

#include "projmp/campaign.hpp"

#include <json.hpp> // vendored nlohmann/json

#include <sstream>
#include <string>

namespace projmp {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline VerdictStatus status_from_string(const std::string& s) {
    if (s == "passed")
        return VerdictStatus::passed;
    if (s == "failed")
        return VerdictStatus::failed;
    if (s == "not_applicable")
        return VerdictStatus::not_applicable;
    throw std::invalid_argument("unknown status '" + s + "'");
}

inline ordered_json spec_to_json(const TrialSpec& s) {
    return {{"ring", s.ring}, {"n", s.n},         {"rank_p", s.rank_p},
            {"rank_q", s.rank_q}, {"seed", s.seed}, {"trial", s.trial}};
}

inline TrialSpec spec_from_json(const ordered_json& j) {
    return {j.at("ring").get<std::string>(),      j.at("n").get<std::size_t>(),
            j.at("rank_p").get<std::size_t>(),    j.at("rank_q").get<std::size_t>(),
            j.at("seed").get<std::uint64_t>(),    j.at("trial").get<std::uint64_t>()};
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline ordered_json report_to_json(const CampaignReport& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["version"] = r.version;
    j["config"] = {{"ring", r.config.ring},         {"n", r.config.n},
                   {"trials", r.config.trials},     {"seed", r.config.seed},
                   {"theorems", r.config.theorems}, {"exhaustive", r.config.exhaustive}};
    j["aggregates"] = ordered_json::array();
    for (const auto& a : r.aggregates)
        j["aggregates"].push_back({{"theorem", a.theorem},
                                   {"checked", a.checked},
                                   {"passed", a.passed},
                                   {"failed", a.failed},
                                   {"not_applicable", a.not_applicable}});
    j["failures"] = ordered_json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"theorem", f.theorem},
                                 {"spec", detail::spec_to_json(f.spec)},
                                 {"ring_id", f.ring_id},
                                 {"p", f.p},
                                 {"q", f.q},
                                 {"failing_checks", f.failing_checks}});
    j["results"] = ordered_json::array();
    for (const auto& t : r.results)
        j["results"].push_back({{"theorem", t.theorem},
                                {"trial", t.trial},
                                {"status", to_string(t.status)},
                                {"failing_checks", t.failing_checks}});
    j["duration_seconds"] = r.duration_seconds;
    return j;
}

inline CampaignReport report_from_json(const ordered_json& j) {
    CampaignReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1)
        throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
    r.version = j.at("version").get<std::string>();
    const auto& c = j.at("config");
    r.config.ring = c.at("ring").get<std::string>();
    r.config.n = c.at("n").get<std::size_t>();
    r.config.trials = c.at("trials").get<std::uint64_t>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.theorems = c.at("theorems").get<std::vector<std::string>>();
    r.config.exhaustive = c.at("exhaustive").get<bool>();
    for (const auto& a : j.at("aggregates"))
        r.aggregates.push_back({a.at("theorem").get<std::string>(), a.at("checked").get<std::uint64_t>(),
                                a.at("passed").get<std::uint64_t>(), a.at("failed").get<std::uint64_t>(),
                                a.at("not_applicable").get<std::uint64_t>()});
    for (const auto& f : j.at("failures"))
        r.failures.push_back({f.at("theorem").get<std::string>(), detail::spec_from_json(f.at("spec")),
                              f.at("ring_id").get<std::string>(), f.at("p").get<std::string>(),
                              f.at("q").get<std::string>(), f.at("failing_checks").get<std::vector<std::string>>()});
    for (const auto& t : j.at("results"))
        r.results.push_back({t.at("theorem").get<std::string>(), t.at("trial").get<std::uint64_t>(),
                             detail::status_from_string(t.at("status").get<std::string>()),
                             t.at("failing_checks").get<std::vector<std::string>>()});
    r.duration_seconds = j.at("duration_seconds").get<double>();
    return r;
}

inline std::string write_report_json(const CampaignReport& r) { return report_to_json(r).dump(2) + "\n"; }

inline CampaignReport read_report_json(const std::string& text) {
    return report_from_json(ordered_json::parse(text));
}

/// One row per (theorem, trial); failing checks joined with "; ".
inline std::string write_report_csv(const CampaignReport& r) {
    std::ostringstream os;
    os << "theorem,trial,status,failing_checks\n";
    for (const auto& t : r.results) {
        std::string checks;
        for (const auto& c : t.failing_checks)
            checks += (checks.empty() ? "" : "; ") + c;
        os << detail::csv_field(t.theorem) << ',' << t.trial << ',' << to_string(t.status) << ','
           << detail::csv_field(checks) << '\n';
    }
    return os.str();
}

} // namespace projmp

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace projmp {

struct SubCheck {
    std::string name;
    bool ok = true;
    // Informational checks are recorded but never fail a verdict.
    bool asserted = true;

    bool operator==(const SubCheck&) const = default;
};

/// Serialized inputs that reproduce a failing trial.
struct Counterexample {
    std::string ring;
    std::vector<std::pair<std::string, std::string>> elements;

    bool operator==(const Counterexample&) const = default;
};

enum class VerdictStatus { passed, failed, not_applicable };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::passed:
        return "passed";
    case VerdictStatus::failed:
        return "failed";
    default:
        return "not_applicable";
    }
}

class TheoremVerdict {
public:
    explicit TheoremVerdict(std::string theorem) : theorem_(std::move(theorem)) {}

    const std::string& theorem() const { return theorem_; }
    bool applicable() const { return applicable_; }
    bool passed() const { return applicable_ && failures() == 0; }
    VerdictStatus status() const {
        if (!applicable_)
            return VerdictStatus::not_applicable;
        return failures() == 0 ? VerdictStatus::passed : VerdictStatus::failed;
    }
    const std::vector<SubCheck>& checks() const { return checks_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const Counterexample& counterexample() const { return counterexample_; }

    void mark_not_applicable(std::string reason) {
        applicable_ = false;
        notes_.push_back(std::move(reason));
    }

    bool check(std::string name, bool ok) {
        checks_.push_back({std::move(name), ok, true});
        return ok;
    }

    void record(std::string name, bool value) { checks_.push_back({std::move(name), value, false}); }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    void set_counterexample(Counterexample c) { counterexample_ = std::move(c); }

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks_)
            if (c.asserted && !c.ok)
                ++n;
        return n;
    }

    std::vector<std::string> failing_checks() const {
        std::vector<std::string> out;
        for (const auto& c : checks_)
            if (c.asserted && !c.ok)
                out.push_back(c.name);
        return out;
    }

    /// Looks up a sub-check by name; nullptr when absent.
    const SubCheck* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    /// Appends the sub-checks of `other` under `prefix`. An inapplicable
    /// part contributes only a note.
    void absorb(const TheoremVerdict& other, const std::string& prefix) {
        if (!other.applicable_) {
            notes_.push_back(prefix + "not applicable");
            return;
        }
        for (const auto& c : other.checks_)
            checks_.push_back({prefix + c.name, c.ok, c.asserted});
        for (const auto& n : other.notes_)
            notes_.push_back(prefix + n);
        if (!other.counterexample_.elements.empty() && counterexample_.elements.empty())
            counterexample_ = other.counterexample_;
    }

private:
    std::string theorem_;
    bool applicable_ = true;
    std::vector<SubCheck> checks_;
    std::vector<std::string> notes_;
    Counterexample counterexample_;
};

} // namespace projmp

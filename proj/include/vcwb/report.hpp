#pragma once

/**
 * @file report.hpp
 * @brief Law-check reports. Verifiers return these instead of throwing:
 *        a failed law is data, carrying the offending tuple as a witness.
 */

#include <string>
#include <vector>

namespace vcwb {

struct LawCheck {
    std::string law;     // stable identifier, e.g. "vcat-assoc"
    bool passed = false;
    std::string witness; // offending tuple / matrices, empty on pass
};

struct Report {
    std::vector<LawCheck> checks;

    void add(std::string law, bool ok, std::string witness = "") {
        checks.push_back({std::move(law), ok, std::move(witness)});
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix.empty() ? c.law : prefix + "/" + c.law, c.passed, c.witness});
    }

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const LawCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }

    std::string summary() const {
        size_t ok = 0;
        for (const auto& c : checks) ok += c.passed;
        std::string s = std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks passed";
        if (const LawCheck* f = first_failure())
            s += "; first failure: " + f->law + (f->witness.empty() ? "" : " [" + f->witness + "]");
        return s;
    }
};

} // namespace vcwb

#pragma once

// Check/suite report structures shared by the verification suites and the CLI.

#include <string>
#include <vector>

namespace qdg {

struct Check {
    std::string name;
    std::string status;   // "pass", "fail", "warn"
    std::string witness;  // optional counterexample / detail
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    long elapsed_ms = 0;

    bool passed() const {
        for (auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
    void add(const std::string& check, bool ok, const std::string& witness = "") {
        checks.push_back({check, ok ? "pass" : "fail", ok ? "" : witness});
    }
    void warn(const std::string& check, const std::string& witness) {
        checks.push_back({check, "warn", witness});
    }
};

}  // namespace qdg

#pragma once
// Check/report plumbing shared by the verification suites and the CLI.
// A Check names the law it tested; failures may attach the offending
// matrices for diagnosis.

#include "sia/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sia {

struct Check {
    std::string law;   // stable law identifier, aggregated across a corpus run
    std::string name;  // instance label (which algebra/module/cell)
    bool pass = false;
    std::string details;
    std::vector<std::pair<std::string, Mat>> mats;  // offending matrices on failure
};

struct Report {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void add(const std::string& law, const std::string& name, bool pass,
             const std::string& details = "") {
        checks.push_back({law, name, pass, details, {}});
    }
    void add_mats(const std::string& law, const std::string& name, bool pass,
                  const std::string& details,
                  std::vector<std::pair<std::string, Mat>> mats) {
        checks.push_back({law, name, pass, details, std::move(mats)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace sia

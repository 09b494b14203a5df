#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eigengap/checks.hpp"

// Deterministic report serialization: fixed key order, no timestamps,
// every numeric printed with 12 significant digits.

namespace eigengap {

struct Report {
    std::string suite;
    // Echoed inputs, in insertion order.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void param(const std::string& key, double value);
    void param(const std::string& key, int value);
};

// 12-significant-digit rendering used everywhere numbers are printed.
std::string format_number(double v);

std::string to_json(const Report& r);
Report report_from_json(const std::string& text);

// CSV with header row; columns[i].second has one value per row.
std::string to_csv(
    const std::vector<std::pair<std::string, std::vector<double>>>& columns);

}  // namespace eigengap

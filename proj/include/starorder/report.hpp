#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace starorder {

struct Violation {
    std::string check;
    std::vector<std::string> digests;
    double residual = 0.0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;  // reproducer: replaying this trial seed reproduces the violation
    std::string detail;
};

struct CheckTally {
    std::size_t evaluated = 0;
    std::size_t passed = 0;
};

/// Outcome of a property run. Violations are collected, never thrown.
struct VerificationReport {
    std::string name;
    std::size_t trials = 0;
    std::vector<Violation> violations;
    std::map<std::string, CheckTally> checks;
    std::map<std::string, double> metrics;
    std::vector<std::string> notes;
    std::chrono::duration<double> elapsed{0.0};

    bool passed() const noexcept { return violations.empty(); }

    void tally(const std::string& check, bool ok);
    /// Keeps the largest value seen for a metric.
    void track_max(const std::string& metric, double value);
    void merge(const VerificationReport& other);
};

/// Deterministic plain-text rendering; timing is only included on request.
std::string render(const VerificationReport& report, bool include_timing = false);

}  // namespace starorder

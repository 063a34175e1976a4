#include "starorder/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace starorder {

namespace {

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

}  // namespace

void VerificationReport::tally(const std::string& check, bool ok) {
    auto& t = checks[check];
    ++t.evaluated;
    if (ok) {
        ++t.passed;
    }
}

void VerificationReport::track_max(const std::string& metric, double value) {
    auto [it, inserted] = metrics.try_emplace(metric, value);
    if (!inserted) {
        it->second = std::max(it->second, value);
    }
}

void VerificationReport::merge(const VerificationReport& other) {
    trials += other.trials;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [name, t] : other.checks) {
        checks[name].evaluated += t.evaluated;
        checks[name].passed += t.passed;
    }
    for (const auto& [name, value] : other.metrics) {
        track_max(name, value);
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    elapsed += other.elapsed;
}

std::string render(const VerificationReport& report, bool include_timing) {
    std::ostringstream out;
    out << "report " << report.name << "\n";
    out << "trials " << report.trials << "\n";
    for (const auto& [name, t] : report.checks) {
        out << "check " << name << " " << t.passed << "/" << t.evaluated << "\n";
    }
    for (const auto& [name, value] : report.metrics) {
        out << "metric " << name << " " << sci(value) << "\n";
    }
    for (const auto& note : report.notes) {
        out << "note " << note << "\n";
    }
    out << "violations " << report.violations.size() << "\n";
    for (const auto& v : report.violations) {
        out << "violation " << v.check << " trial=" << v.trial << " seed=" << v.seed
            << " residual=" << sci(v.residual);
        for (const auto& d : v.digests) {
            out << " " << d;
        }
        if (!v.detail.empty()) {
            out << " :: " << v.detail;
        }
        out << "\n";
    }
    if (include_timing) {
        out << "elapsed " << sci(report.elapsed.count()) << "s\n";
    }
    out << "status " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace starorder

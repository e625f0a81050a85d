#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "qlorentz/matrix.hpp"

namespace qlorentz {

/// One verified identity: stable id, human-readable anchor naming the
/// identity, mode, outcome and numeric residual (0 for symbolic passes).
struct CheckEntry {
    std::string id;
    std::string anchor;
    enum class Mode { symbolic, numeric } mode = Mode::symbolic;
    enum class Status { pass, fail, numeric_only } status = Status::pass;
    double residual = 0.0;
    long elapsed_ms = 0;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;

    bool all_pass() const {
        for (auto& e : entries)
            if (e.status == CheckEntry::Status::fail) return false;
        return true;
    }
    void merge(const VerificationReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
    void sort_by_id();
    std::string summary() const;
};

/// Collector used by the verification suites.
class Suite {
public:
    explicit Suite(std::string prefix) : prefix_(std::move(prefix)) {}

    void check(const std::string& id, const std::string& anchor, bool ok);
    /// Exact check that a value vanishes (anything with is_zero()).
    template <class T>
    void check_zero(const std::string& id, const std::string& anchor, const T& v) {
        check(id, anchor, v.is_zero());
    }
    template <class T>
    void check_equal(const std::string& id, const std::string& anchor, const T& a, const T& b) {
        check(id, anchor, a == b);
    }
    /// Numeric check with residual.
    void check_residual(const std::string& id, const std::string& anchor, double residual,
                        double tol);
    /// Symbolic check with numeric fallback: symbolic failure plus numeric pass
    /// is recorded as numeric_only.
    void check_zero_fallback(const std::string& id, const std::string& anchor, const QMatrix& m,
                             const std::vector<NumericContext>& ctxs, double tol);

    VerificationReport take() { return std::move(report_); }
    const VerificationReport& report() const { return report_; }

private:
    std::string prefix_;
    VerificationReport report_;
    std::chrono::steady_clock::time_point mark_ = std::chrono::steady_clock::now();
    long lap_ms();
    void push(const std::string& id, const std::string& anchor, CheckEntry::Mode mode,
              CheckEntry::Status status, double residual);
};

} // namespace qlorentz

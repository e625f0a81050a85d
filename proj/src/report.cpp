#include "qlorentz/report.hpp"

#include <algorithm>
#include <sstream>

namespace qlorentz {

void VerificationReport::sort_by_id() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
}

std::string VerificationReport::summary() const {
    int pass = 0, fail = 0, numeric_only = 0;
    for (auto& e : entries) {
        switch (e.status) {
            case CheckEntry::Status::pass: ++pass; break;
            case CheckEntry::Status::fail: ++fail; break;
            case CheckEntry::Status::numeric_only: ++numeric_only; break;
        }
    }
    std::ostringstream os;
    os << entries.size() << " checks: " << pass << " pass, " << fail << " fail";
    if (numeric_only) os << ", " << numeric_only << " numeric-only";
    return os.str();
}

long Suite::lap_ms() {
    auto now = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark_).count();
    mark_ = now;
    return ms;
}

void Suite::push(const std::string& id, const std::string& anchor, CheckEntry::Mode mode,
                 CheckEntry::Status status, double residual) {
    CheckEntry e;
    e.id = prefix_ + "." + id;
    e.anchor = anchor;
    e.mode = mode;
    e.status = status;
    e.residual = residual;
    e.elapsed_ms = lap_ms();
    report_.entries.push_back(std::move(e));
}

void Suite::check(const std::string& id, const std::string& anchor, bool ok) {
    push(id, anchor, CheckEntry::Mode::symbolic,
         ok ? CheckEntry::Status::pass : CheckEntry::Status::fail, 0.0);
}

void Suite::check_residual(const std::string& id, const std::string& anchor, double residual,
                           double tol) {
    push(id, anchor, CheckEntry::Mode::numeric,
         residual <= tol ? CheckEntry::Status::pass : CheckEntry::Status::fail, residual);
}

void Suite::check_zero_fallback(const std::string& id, const std::string& anchor, const QMatrix& m,
                                const std::vector<NumericContext>& ctxs, double tol) {
    if (m.is_zero()) {
        push(id, anchor, CheckEntry::Mode::symbolic, CheckEntry::Status::pass, 0.0);
        return;
    }
    double res = 0;
    for (auto& ctx : ctxs) res = std::max(res, m.max_abs(ctx));
    push(id, anchor, CheckEntry::Mode::numeric,
         res <= tol ? CheckEntry::Status::numeric_only : CheckEntry::Status::fail, res);
}

} // namespace qlorentz

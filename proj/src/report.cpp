#include "simplexforge/report.hpp"

namespace simplexforge {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

namespace {
int severity(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Degenerate: return 1;
        case Verdict::Fail: return 2;
    }
    return 0;
}
}  // namespace

void PropertyReport::absorb(ReportItem item) {
    const bool worse = severity(item.verdict) > severity(verdict) ||
                       (severity(item.verdict) == severity(verdict) &&
                        item.residual > worst_residual);
    if (worse) {
        worst_residual = item.residual;
        witness = item.label;
    }
    if (severity(item.verdict) > severity(verdict)) verdict = item.verdict;
    details.push_back(std::move(item));
}

}  // namespace simplexforge

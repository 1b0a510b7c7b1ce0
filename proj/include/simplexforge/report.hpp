#pragma once

#include <optional>
#include <string>
#include <vector>

namespace simplexforge {

enum class Verdict { Pass, Fail, Degenerate };

const char* verdict_name(Verdict v);

/// One verified item inside a report.
struct ReportItem {
    std::string label;
    double residual = 0.0;
    Verdict verdict = Verdict::Pass;
};

/// Outcome of a property verification: overall verdict, the worst residual
/// seen, and a description of the worst-violating item.
struct PropertyReport {
    Verdict verdict = Verdict::Pass;
    double worst_residual = 0.0;
    std::string witness;
    std::vector<ReportItem> details;
    std::optional<double> value;  ///< op-specific scalar (e.g. common distance)

    bool passed() const { return verdict == Verdict::Pass; }

    /// Folds an item into the report, keeping the worst witness on top.
    void absorb(ReportItem item);
};

}  // namespace simplexforge

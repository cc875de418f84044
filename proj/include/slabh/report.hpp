#pragma once

#include "slabh/poly.hpp"

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace slabh {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

struct NamedPoly {
    std::string name;
    MultiPoly value;
};

/// Outcome of one exact identity check. `residuals` must all vanish for a
/// pass; `values` carry informational results (e.g. a recovered r(y)) that
/// do not affect the status.
struct VerificationReport {
    std::string check;
    CheckStatus status = CheckStatus::not_applicable;
    std::vector<NamedPoly> residuals;
    std::vector<NamedPoly> values;
    std::string note;
    std::chrono::microseconds elapsed{0};

    bool passed() const { return status == CheckStatus::pass; }

    /// Status is pass iff every residual is the zero polynomial.
    static VerificationReport from_residuals(std::string check, std::vector<NamedPoly> residuals);
    static VerificationReport not_applicable(std::string check, std::string why);
};

nlohmann::json report_to_json(const VerificationReport& r);
/// Multi-line text: status line followed by one line per nonzero residual.
std::string format_report(const VerificationReport& r);

/// Measures the wall time of building a report.
template <typename Fn>
VerificationReport timed(Fn&& build)
{
    auto start = std::chrono::steady_clock::now();
    VerificationReport r = build();
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

} // namespace slabh

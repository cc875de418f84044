#include "slabh/report.hpp"

#include "slabh/poly_io.hpp"

#include <algorithm>
#include <sstream>

namespace slabh {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    }
    return "unknown";
}

VerificationReport VerificationReport::from_residuals(std::string check, std::vector<NamedPoly> residuals)
{
    VerificationReport r;
    r.check = std::move(check);
    bool clean = std::all_of(residuals.begin(), residuals.end(), [](const NamedPoly& n) { return n.value.is_zero(); });
    r.status = clean ? CheckStatus::pass : CheckStatus::fail;
    r.residuals = std::move(residuals);
    return r;
}

VerificationReport VerificationReport::not_applicable(std::string check, std::string why)
{
    VerificationReport r;
    r.check = std::move(check);
    r.status = CheckStatus::not_applicable;
    r.note = std::move(why);
    return r;
}

nlohmann::json report_to_json(const VerificationReport& r)
{
    auto named = [](const std::vector<NamedPoly>& list) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& n : list) out.push_back({{"name", n.name}, {"poly", poly_to_json(n.value)}});
        return out;
    };
    nlohmann::json j{{"check", r.check},
                     {"status", to_string(r.status)},
                     {"residuals", named(r.residuals)},
                     {"elapsed_us", r.elapsed.count()}};
    if (!r.values.empty()) j["values"] = named(r.values);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string format_report(const VerificationReport& r)
{
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << r.check;
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << '\n';
    for (const auto& n : r.residuals)
        if (!n.value.is_zero()) os << "  residual " << n.name << ": " << n.value << '\n';
    for (const auto& n : r.values) os << "  " << n.name << " = " << n.value << '\n';
    return os.str();
}

} // namespace slabh

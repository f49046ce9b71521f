#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace nadslab {

// nlohmann's default object storage is a sorted map, so serialized
// reports are byte-for-byte deterministic for equal content.
using Json = nlohmann::json;

inline constexpr int report_version = 1;

// The one schema every checker and the CLI speak. Measured values are
// exact rationals serialized "p/q"; no decimal ever appears. The body
// carries no timestamps, so identical runs serialize identically.
struct Report {
    std::string claim;
    std::map<std::string, std::string> parameters;
    bool pass = false;
    std::vector<Json> witnesses;     // concrete objects backing the verdict
    std::vector<Json> checked_items; // individual verified facts
    std::vector<std::string> notes;  // caveats, tail arguments, vacuity flags
    std::vector<Report> sections;    // sub-reports of consolidated runs
};

// Structured form; the top level carries report_version, nested sections
// do not.
Json to_json(const Report& r);

// Human-readable rendering, derived from the same data as to_json.
std::string to_text(const Report& r);

// Throws Error when j does not satisfy the report schema.
void validate_report_json(const Json& j);

// 0 for a passing report, 1 otherwise; the CLI's contract.
int exit_code_for(const Report& r);

} // namespace nadslab

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "giuga/exact.hpp"

namespace giuga::cli {

using Json = nlohmann::ordered_json;

enum class Format { plain, json };

/// Exit codes: 0 no anomaly, 1 usage or I/O error, 2 a checked statement failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Raised for malformed arguments; maps to kExitUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunReport {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::array();
    std::vector<Int> counterexamples;
    std::int64_t elapsed_ms = 0;

    // Plain-format rendering, one value per line; not part of the JSON record.
    std::vector<std::string> plain_lines;

    int exit_code() const { return counterexamples.empty() ? kExitOk : kExitFailure; }

    /// Keys in fixed order; big integers are decimal strings.
    Json to_json(bool include_elapsed = true) const;
};

std::string render(const RunReport& report, Format format);

Json int_list(const std::vector<Int>& values);

}  // namespace giuga::cli

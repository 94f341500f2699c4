#include "giuga/cli/report.hpp"

#include <sstream>

namespace giuga::cli {

Json int_list(const std::vector<Int>& values)
{
    Json out = Json::array();
    for (const Int& v : values) out.push_back(v.get_str());
    return out;
}

Json RunReport::to_json(bool include_elapsed) const
{
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    j["counterexamples"] = int_list(counterexamples);
    if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string render(const RunReport& report, Format format)
{
    if (format == Format::json) return report.to_json().dump() + "\n";
    std::ostringstream out;
    for (const auto& line : report.plain_lines) out << line << '\n';
    return out.str();
}

}  // namespace giuga::cli

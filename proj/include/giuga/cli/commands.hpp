#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "giuga/bernoulli.hpp"
#include "giuga/cli/report.hpp"

namespace giuga::cli {

/// Strict decimal parse; throws UsageError on anything else.
Int parse_int(const std::string& text, const std::string& what);

/// With no method both routes run and must agree.
RunReport cmd_bernoulli(const std::string& n, std::optional<BernoulliMethod> method);

struct VerifyBounds {
    std::optional<unsigned> n_max;
    std::optional<unsigned> m_max;
};

/// target: theorem2 | theorem4 | staudt | numerator | stirling-lemma
RunReport cmd_verify(const std::string& target, const VerifyBounds& bounds);

struct ScanArgs {
    std::string from;
    std::string to;
    std::optional<std::filesystem::path> checkpoint;
    unsigned blocks = 1;
    unsigned threads = 1;
    std::optional<unsigned> max_blocks;
};

RunReport cmd_scan(const ScanArgs& args);

/// target: giuga | carmichael | butske-plus | butske-minus
RunReport cmd_find(const std::string& target, const std::string& max);

RunReport cmd_check(const std::string& n);

}  // namespace giuga::cli

#pragma once

// Checkpoint file: one JSON object
//   {"from": "...", "to": "...", "next_unscanned": "...",
//    "counterexamples": ["...", ...], "scanned_count": "..."}
// Integers are written as decimal strings; plain JSON numbers are accepted on read.

#include <filesystem>
#include <optional>
#include <string>

#include "giuga/cli/report.hpp"
#include "giuga/scan.hpp"

namespace giuga::cli {

Json checkpoint_to_json(const ScanCheckpoint& cp);

/// Throws std::invalid_argument on missing or malformed fields.
ScanCheckpoint checkpoint_from_json(const Json& j);

/// std::nullopt when the file does not exist; throws std::runtime_error when
/// it exists but cannot be read or parsed.
std::optional<ScanCheckpoint> read_checkpoint(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames, so readers never see a torn file.
void write_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp);

}  // namespace giuga::cli

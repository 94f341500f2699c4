#pragma once

// Resumable range scan for composite solutions of the Giuga-Agoh criterion.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "giuga/exact.hpp"

namespace giuga {

struct ScanCheckpoint {
    std::uint64_t from = 2;
    std::uint64_t to = 2;
    std::uint64_t next_unscanned = 2;
    std::vector<Int> counterexamples;
    std::uint64_t scanned_count = 0;

    bool complete() const { return next_unscanned == to + 1; }

    /// Throws std::invalid_argument when the fields are mutually inconsistent.
    void validate() const;

    friend bool operator==(const ScanCheckpoint&, const ScanCheckpoint&) = default;
};

struct ScanOptions {
    /// Number of fixed-width blocks the remaining range is cut into.
    unsigned blocks = 1;
    /// Blocks classified concurrently.
    unsigned threads = 1;
    /// Stop after this many blocks; the returned checkpoint is then partial.
    std::optional<unsigned> max_blocks;
    /// Called with the advanced checkpoint after each block, in ascending order.
    std::function<void(const ScanCheckpoint&)> on_block;
};

// Scans above this bound factor each n individually instead of building a
// smallest-prime-factor table.
inline constexpr std::uint64_t kMaxScanSpfLimit = 50'000'000;

/// Classifies every n in [from, to] not yet covered by resume. The result is
/// independent of blocks/threads and of how often the scan was interrupted.
ScanCheckpoint scan_range(std::uint64_t from, std::uint64_t to, const std::optional<ScanCheckpoint>& resume = {},
                          const ScanOptions& options = {});

}  // namespace giuga

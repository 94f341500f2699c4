#include "giuga/scan.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "giuga/conjecture.hpp"

namespace giuga {

namespace {

struct BlockResult {
    std::vector<Int> counterexamples;
    std::uint64_t scanned = 0;
};

BlockResult scan_block(std::uint64_t lo, std::uint64_t hi, const SpfTable* table)
{
    BlockResult out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const Int value = from_u64(n);
        const GiugaAgohVerdict v = table ? classify(value, *table) : classify(value);
        if (v.classification == Classification::counterexample) out.counterexamples.push_back(value);
        ++out.scanned;
    }
    return out;
}

}  // namespace

void ScanCheckpoint::validate() const
{
    auto fail = [](const std::string& why) { throw std::invalid_argument("invalid scan checkpoint: " + why); };
    if (from < 2) fail("from must be at least 2");
    if (from > to) fail("from exceeds to");
    if (next_unscanned < from || next_unscanned > to + 1) fail("next_unscanned outside [from, to+1]");
    if (scanned_count != next_unscanned - from) fail("scanned_count disagrees with next_unscanned");
    for (std::size_t i = 0; i < counterexamples.size(); ++i) {
        const Int& c = counterexamples[i];
        if (c < from_u64(from) || c >= from_u64(next_unscanned)) fail("counterexample outside scanned range");
        if (i > 0 && counterexamples[i - 1] >= c) fail("counterexamples not strictly ascending");
    }
}

ScanCheckpoint scan_range(std::uint64_t from, std::uint64_t to, const std::optional<ScanCheckpoint>& resume,
                          const ScanOptions& options)
{
    if (from < 2) throw std::invalid_argument("scan_range needs from >= 2");
    if (from > to) throw std::invalid_argument("scan_range needs from <= to");
    if (to == UINT64_MAX) throw std::invalid_argument("scan_range upper bound too large");

    ScanCheckpoint state{from, to, from, {}, 0};
    if (resume) {
        resume->validate();
        if (resume->from != from || resume->to != to) {
            throw std::invalid_argument("checkpoint covers [" + std::to_string(resume->from) + ", " +
                                        std::to_string(resume->to) + "], not the requested range");
        }
        state = *resume;
    }
    if (state.complete()) return state;

    const unsigned blocks = std::max(1u, options.blocks);
    const unsigned threads = std::max(1u, options.threads);
    const std::uint64_t remaining = to - state.next_unscanned + 1;
    const std::uint64_t width = std::max<std::uint64_t>(1, (remaining + blocks - 1) / blocks);

    std::optional<SpfTable> table;
    if (to <= kMaxScanSpfLimit) table = build_spf(std::max<std::uint64_t>(to, 2));
    const SpfTable* hint = table ? &*table : nullptr;

    unsigned done = 0;
    while (!state.complete()) {
        if (options.max_blocks && done >= *options.max_blocks) break;
        unsigned wave = threads;
        if (options.max_blocks) wave = std::min(wave, *options.max_blocks - done);

        std::vector<std::future<BlockResult>> pending;
        std::uint64_t lo = state.next_unscanned;
        for (unsigned i = 0; i < wave && lo <= to; ++i) {
            const std::uint64_t hi = std::min(to, lo + width - 1);
            if (threads == 1) {
                std::promise<BlockResult> ready;
                ready.set_value(scan_block(lo, hi, hint));
                pending.push_back(ready.get_future());
            } else {
                pending.push_back(std::async(std::launch::async, scan_block, lo, hi, hint));
            }
            lo = hi + 1;
        }
        // Merge strictly in block order so the checkpoint only ever covers a
        // contiguous prefix of the range.
        for (auto& f : pending) {
            BlockResult r = f.get();
            state.counterexamples.insert(state.counterexamples.end(), r.counterexamples.begin(),
                                         r.counterexamples.end());
            state.next_unscanned += r.scanned;
            state.scanned_count += r.scanned;
            ++done;
            if (options.on_block) options.on_block(state);
        }
    }
    return state;
}

}  // namespace giuga

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "collatz/codec.hpp"
#include "collatz/gridgraph.hpp"
#include "collatz/walk.hpp"

namespace collatz {

// Classification of one curve by its shortest cycle.
struct CurveClass {
    enum Kind : std::uint8_t {
        Acyclic,  // no cycle at all
        Girth4,   // shortest cycle is the unit square
        Exotic,   // finite girth greater than 4
    };

    Kind kind = Acyclic;
    int girth = 0;  // set when kind != Acyclic

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// encode -> walk under `rule` -> graph -> girth, mapped to the three
// classes. `rule` must be one of the bit-driven rules (not Dragon).
CurveClass classify(std::uint64_t n, Rule rule, std::uint64_t step_cap = kDefaultStepCap);

struct CensusConfig {
    std::uint64_t range_start = 2;
    std::uint64_t range_end = 2;
    Rule rule = Rule::Reverse;
    unsigned worker_count = 0;  // 0 = hardware concurrency
    std::uint64_t chunk_size = 1024;
    std::string checkpoint_path;  // empty = no checkpointing
    std::uint64_t step_cap = kDefaultStepCap;

    // Stop after this many chunks in this run (0 = run to completion).
    // Models an interruption at a chunk boundary; paired with a checkpoint
    // path, a subsequent run resumes where this one stopped.
    std::uint64_t max_chunks_per_run = 0;
};

struct CensusReport {
    CensusConfig config;
    std::vector<std::uint64_t> acyclic_ns;                    // sorted
    std::vector<std::pair<std::uint64_t, int>> exotic_ns;     // sorted by n
    std::vector<std::uint64_t> cap_exceeded_ns;               // sorted
    std::uint64_t count_girth4 = 0;
    std::uint64_t completed_through = 0;  // highest fully processed n
    std::chrono::milliseconds elapsed{0};

    std::uint64_t count_acyclic() const noexcept { return acyclic_ns.size(); }
    std::uint64_t count_exotic() const noexcept { return exotic_ns.size(); }
    std::uint64_t count_cap_exceeded() const noexcept { return cap_exceeded_ns.size(); }
    std::uint64_t count_total() const noexcept {
        return count_acyclic() + count_girth4 + count_exotic() + count_cap_exceeded();
    }
};

// Classifies every n in [range_start, range_end] exactly once. The result
// is deterministic for a given range and rule regardless of worker count
// and chunk order. With a checkpoint path set, progress is persisted
// atomically at chunk granularity and an interrupted sweep resumes at
// completed_through + 1.
CensusReport run_census(const CensusConfig& config);

// Canonical report text: key/value header then one record line per
// acyclic / exotic / cap-exceeded n, sorted. UTF-8, LF endings, fields in
// fixed order, no timing — byte-identical for identical findings.
std::string serialize_report(const CensusReport& report);

// serialize_report to a file. Throws IoError on failure.
void write_report_file(const CensusReport& report, const std::filesystem::path& path);

}  // namespace collatz

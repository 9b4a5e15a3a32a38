#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nsg/checks.hpp"

namespace nsg {

/// Which semigroups a scan visits. Exhaustive mode enumerates every minimal
/// generating set with 2 <= m <= m_max and generators in [2, d_max],
/// deduplicated as sets; random mode draws `sample_count` distinct members
/// reproducibly from `seed`. Explicit mode carries a user-supplied list.
struct CorpusSpec {
    enum class Mode { explicit_list, exhaustive, random };
    Mode mode = Mode::exhaustive;
    std::vector<std::vector<std::int64_t>> explicit_sets;
    unsigned m_max = 3;
    std::int64_t d_max = 12;
    std::optional<Int> max_genus;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
};

/// Validated generator lists in canonical order (by embedding dimension,
/// then lexicographic). Every emitted set passes Semigroup::build.
std::vector<std::vector<std::int64_t>> enumerate_corpus(const CorpusSpec& spec);

struct ScanSummary {
    std::size_t semigroups = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t skipped = 0;
};

struct ScanResult {
    std::vector<SemigroupReport> reports;  // canonical corpus order
    ScanSummary summary;
    bool any_failure() const { return summary.fails > 0; }
};

/// Runs the selected checks over the corpus. With parallel = true the work
/// pool (OpenMP, when compiled in) distributes semigroups across threads;
/// reports are merged back in canonical order, so the result is identical
/// to the serial reference run regardless of scheduling. The serial path is
/// kept as the reference implementation for tests and benchmarks.
ScanResult scan_corpus(const std::vector<std::vector<std::int64_t>>& corpus,
                       const std::set<std::string>& groups,
                       const CheckOptions& opts, bool parallel);

/// One JSON object per line: {"semigroup":[...],"class":...,"check":...,
/// "status":...,"lhs":...,"rhs":...} plus optional "note"; "elapsed_us" is
/// attached per record only when with_timings is set (off by default so
/// identical runs produce byte-identical files).
void write_jsonl(std::ostream& os, const ScanResult& result, bool with_timings);

/// Flat CSV table of the same records.
void write_csv(std::ostream& os, const ScanResult& result);

}  // namespace nsg

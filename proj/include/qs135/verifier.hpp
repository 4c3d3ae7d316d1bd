#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qs135/quat.hpp"
#include "qs135/solver.hpp"
#include "qs135/squares.hpp"

namespace qs135 {

/// Exhaustive search for a solution of m = x^2+..+t^2 with
/// a*x+b*y+c*z+d*t = n^2, independent of the constructive pipeline.
/// Scans n descending from floor((N(weights) m)^(1/4)); two coordinates are
/// enumerated, one is derived from the linear equation and the last is
/// settled by a perfect-square test. Returns the first hit in deterministic
/// order, or nullopt. Desk scale: m <= 10^9.
std::optional<Solution> oracle_solve(int64_t m, const Quat& weights, bool natural,
                                     const SquareTable* table = nullptr);

/// Like oracle_solve but restricted to a single n.
std::optional<Solution> oracle_solve_at_n(int64_t m, int64_t n, const Quat& weights, bool natural,
                                          const SquareTable* table = nullptr);

struct ChunkStatus {
    int64_t lo = 0;
    int64_t hi = 0;
    bool resumed = false;  // loaded from a checkpoint instead of recomputed
    friend bool operator==(const ChunkStatus&, const ChunkStatus&) = default;
};

/// Outcome of a range scan over [lo, hi).
struct VerifyReport {
    int64_t lo = 0;
    int64_t hi = 0;
    Quat weights = consts::alpha;
    bool natural = true;
    int64_t verified_count = 0;
    std::vector<int64_t> failures;  // exactly the m in range with no representation
    std::chrono::duration<double> elapsed{0};
    std::vector<ChunkStatus> chunks;
};

inline constexpr int64_t kVerifyChunk = 4096;

/// Data-parallel verification of every m in [lo, hi). Chunks of 4096 values
/// are distributed over `jobs` workers and merged deterministically, so the
/// report does not depend on the job count. A checkpoint file records
/// completed chunks; a rerun with the same header resumes without rework.
VerifyReport verify_range(int64_t lo, int64_t hi, const Quat& weights, bool natural,
                          int jobs = 1, const std::string& checkpoint = {});

/// The failures of verify_range(1, bound). Desk scale: bound <= 10^7.
std::vector<int64_t> find_exceptions(int64_t bound, const Quat& weights, bool natural,
                                     int jobs = 1);

/// JSON Lines: one record per failure, then a trailing summary record.
void write_report_jsonl(const VerifyReport& report, std::ostream& out);

}  // namespace qs135

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuboid/cuboid_poly.hpp"
#include "cuboid/report.hpp"

namespace cuboid {

/// Every coprime ordered pair p != q within the bounds, in the deterministic
/// scan order: ascending p + q, ties broken by ascending p.
std::vector<Params> scan_pairs(std::int64_t p_max, std::int64_t q_max);

/// One pair decided and timed; the oracle cross-check is optional.
Record compute_record(const Params& params, bool with_oracle);

struct ScanOptions {
    std::int64_t p_max = 1;
    std::int64_t q_max = 1;
    unsigned jobs = 1;
    bool with_oracle = false;
    ReportFormat format = ReportFormat::json;
    std::string out_path;  // empty: write to stdout
    bool resume = false;   // requires out_path
};

struct ScanSummary {
    std::uint64_t pairs_total = 0;
    std::uint64_t pairs_visited = 0;
    std::uint64_t pairs_skipped = 0;
    std::uint64_t roots_found = 0;
    std::vector<Params> pairs_with_roots;
    bool oracle_disagreement = false;
};

/// Scan failure tied to a specific log line (corrupt record on resume).
class ScanError : public std::runtime_error {
  public:
    ScanError(std::string message, std::size_t line_number)
        : std::runtime_error(std::move(message)), line_number_(line_number) {}
    std::size_t line_number() const { return line_number_; }

  private:
    std::size_t line_number_;
};

/// Runs the scan. Workers decide pairs in parallel; a single writer emits
/// records in the deterministic scan order, so the log bytes do not depend
/// on the jobs setting. With resume, pairs already present in the log are
/// skipped and the header of the existing log must match.
ScanSummary run_scan(const ScanOptions& options);

/// Same, but writing to a caller-supplied stream (no resume support).
ScanSummary run_scan_to_stream(const ScanOptions& options, std::ostream& out);

/// Normalized command string recorded in the log header. Excludes the
/// jobs/out/resume settings, which do not affect log content.
std::string scan_command_line(const ScanOptions& options);

/// Default worker count: the CUBOIDCHECK_JOBS environment variable when set,
/// otherwise the hardware concurrency.
unsigned default_jobs();

}  // namespace cuboid

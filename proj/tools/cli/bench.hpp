#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irregular/partition.hpp"

namespace irrseq {

using irregular::i64;

struct BenchRow {
  std::string method;  // "oracle" or "closed"
  double median_ns = 0; // per locate call
  double mean_ns = 0;
  double cv = 0;        // stddev / mean over repetitions
  int reps = 0;
  std::size_t ops = 0;  // locate calls per repetition
};

struct BenchReport {
  bool equal = true;          // closed and oracle agree on every point
  std::optional<i64> mismatch; // first n where they do not
  std::vector<BenchRow> rows;  // empty when !equal
};

/// At most `max_points` evenly spaced n in [lo, hi].
std::vector<i64> bench_points(i64 lo, i64 hi, std::size_t max_points);

/// Checks closed == oracle on every point whenever a closed form exists, then
/// times the requested methods. UsageError when a closed timing is requested
/// for a spec without one.
BenchReport run_bench(const irregular::PartitionSpec &spec,
                      const std::vector<i64> &points, bool oracle, bool closed,
                      int reps);

} // namespace irrseq

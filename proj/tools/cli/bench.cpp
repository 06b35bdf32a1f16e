#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "irregular/closed_forms.hpp"
#include "irregular/prefix_sums.hpp"
#include "syntax.hpp"

namespace irrseq {
namespace {

template <class Locate>
BenchRow time_method(std::string name, const std::vector<i64> &points,
                     int reps, Locate &&locate) {
  using clock = std::chrono::steady_clock;
  std::vector<double> per_op;
  volatile i64 sink = 0;
  for (int r = 0; r < reps; ++r) {
    i64 acc = 0;
    const auto start = clock::now();
    for (i64 n : points)
      acc += locate(n);
    const auto elapsed = std::chrono::duration<double, std::nano>(clock::now() - start);
    sink = sink + acc;
    per_op.push_back(elapsed.count() / static_cast<double>(points.size()));
  }
  BenchRow row;
  row.method = std::move(name);
  row.reps = reps;
  row.ops = points.size();
  row.mean_ns = std::accumulate(per_op.begin(), per_op.end(), 0.0) / reps;
  double var = 0;
  for (double x : per_op)
    var += (x - row.mean_ns) * (x - row.mean_ns);
  row.cv = row.mean_ns > 0 ? std::sqrt(var / reps) / row.mean_ns : 0;
  std::sort(per_op.begin(), per_op.end());
  row.median_ns = reps % 2 ? per_op[reps / 2]
                           : (per_op[reps / 2 - 1] + per_op[reps / 2]) / 2;
  return row;
}

} // namespace

std::vector<i64> bench_points(i64 lo, i64 hi, std::size_t max_points) {
  if (lo < 1 || hi < lo)
    throw UsageError("range must satisfy 1 <= lo <= hi");
  if (max_points == 0)
    throw UsageError("need at least one sample point");
  const auto span = static_cast<irregular::i128>(hi) - lo + 1;
  const std::size_t count =
      span < static_cast<irregular::i128>(max_points) ? static_cast<std::size_t>(span) : max_points;
  std::vector<i64> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    points.push_back(lo + static_cast<i64>(span * static_cast<irregular::i128>(k) / static_cast<irregular::i128>(count)));
  return points;
}

BenchReport run_bench(const irregular::PartitionSpec &spec,
                      const std::vector<i64> &points, bool oracle, bool closed,
                      int reps) {
  if (reps < 1)
    throw UsageError("repetitions must be >= 1");
  const irregular::PartialSumTable table(spec);
  const auto locator = irregular::prepare_closed_form(spec);
  if (closed && !locator)
    throw UsageError(
        "no closed form for " + format_spec(spec) + "; use the oracle method");

  BenchReport report;
  if (locator) {
    for (i64 n : points) {
      if ((*locator)(n).block != table.locate(n).block) {
        report.equal = false;
        report.mismatch = n;
        return report;
      }
    }
  }
  if (oracle)
    report.rows.push_back(time_method("oracle", points, reps, [&](i64 n) {
      return table.locate(n).block;
    }));
  if (closed)
    report.rows.push_back(time_method("closed", points, reps, [&](i64 n) {
      return (*locator)(n).block;
    }));
  return report;
}

} // namespace irrseq

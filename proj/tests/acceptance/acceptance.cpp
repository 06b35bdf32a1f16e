#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "catalog.hpp"
#include "commands.hpp"
#include "irregular/closed_forms.hpp"
#include "irregular/diagonals.hpp"
#include "irregular/errors.hpp"
#include "irregular/intrablock.hpp"
#include "irregular/oeis.hpp"
#include "irregular/prefix_sums.hpp"

using namespace irregular;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

void report(int id, const char *title, const Outcome &o) {
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

using Rows = std::vector<std::vector<i64>>;

std::string render(const Rows &rows) {
  std::ostringstream out;
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

Rows constant_rows(std::initializer_list<i64> lengths) {
  Rows rows;
  i64 label = 1;
  for (i64 len : lengths)
    rows.emplace_back(static_cast<std::size_t>(len), label++);
  return rows;
}

std::vector<i64> range(i64 lo, i64 hi) {
  std::vector<i64> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<i64> reversed(std::vector<i64> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<i64> repeated(const std::vector<i64> &v, int times) {
  std::vector<i64> out;
  for (int t = 0; t < times; ++t)
    out.insert(out.end(), v.begin(), v.end());
  return out;
}

Rows reluctant_rows(std::initializer_list<i64> prefixes, bool rev) {
  Rows rows;
  for (i64 p : prefixes)
    rows.push_back(repeated(rev ? reversed(range(1, p)) : range(1, p), 3));
  return rows;
}

i64 total(const Rows &rows) {
  i64 n = 0;
  for (const auto &r : rows)
    n += static_cast<i64>(r.size());
  return n;
}

Outcome golden_arrays() {
  struct Case {
    std::string spec, what;
    Rows rows;
  };
  const std::vector<Case> cases = {
      {"linear:2,5", "L", constant_rows({7, 9, 11})},
      {"linear:4,-1", "L", constant_rows({3, 7, 11})},
      {"diag:3,first", "L", constant_rows({6, 15, 24})},
      {"diag:3,second", "L", constant_rows({1, 9, 18})},
      {"quad:1,0,1", "L", constant_rows({2, 5, 10})},
      {"poly:5", "L", constant_rows({1, 5, 12})},
      {"cpoly:5", "L", constant_rows({1, 6, 16})},
      {"cubic:1,0,0,1", "L", constant_rows({2, 9, 28})},
      {"pyr:5", "L", constant_rows({1, 6, 18})},
      {"linear:4,-1", "perm:reversal", {{3, 2, 1}, reversed(range(4, 10)), reversed(range(11, 21))}},
      {"linear:4,-1", "perm:halfshuffle",
       {{3, 1, 2}, {10, 9, 8, 4, 5, 6, 7}, {21, 20, 19, 18, 17, 11, 12, 13, 14, 15, 16}}},
      {"linear:4,-1", "perm:rotation",
       {{3, 1, 2}, {8, 9, 10, 4, 5, 6, 7}, {17, 18, 19, 20, 21, 11, 12, 13, 14, 15, 16}}},
      {"const:2", "reluctant:3", reluctant_rows({2, 4, 6}, false)},
      {"const:2", "reluctant:3,rev", reluctant_rows({2, 4, 6}, true)},
      {"linear:2,0", "reluctant:3", reluctant_rows({2, 6, 12}, false)},
      {"linear:2,0", "reluctant:3,rev", reluctant_rows({2, 6, 12}, true)},
      {"pow:2", "reluctant:3", reluctant_rows({2, 4, 8}, false)},
      {"pow:2", "reluctant:3,rev", reluctant_rows({2, 4, 8}, true)},
  };
  const auto start = Clock::now();
  Outcome o;
  int matched = 0;
  for (const auto &c : cases) {
    std::ostringstream out, err;
    const int code = irrseq::run(
        {"gen", c.spec, c.what, std::to_string(total(c.rows))}, out, err);
    if (code == 0 && out.str() == render(c.rows)) {
      ++matched;
    } else if (o.pass) {
      o.pass = false;
      o.detail = "first mismatch: " + c.spec + " " + c.what + "; ";
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0)
    o.pass = false;
  o.detail += std::to_string(matched) + "/" + std::to_string(cases.size()) +
              " arrays verbatim in " + std::to_string(elapsed) + " s (limit 1 s)";
  return o;
}

// Randomized parameter sets per parametric family; invalid draws are redrawn.
std::vector<std::pair<std::string, std::vector<PartitionSpec>>>
random_families(std::mt19937_64 &rng, int per_family) {
  const auto uni = [&rng](i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng);
  };
  std::vector<std::pair<std::string, std::function<Family()>>> makers = {
      {"constant", [&] { return Family(Constant{uni(1, 1000)}); }},
      {"linear", [&] {
         const i64 p1 = uni(1, 1000);
         return Family(Linear{p1, uni(1 - p1, 1000)});
       }},
      {"quadratic", [&] { return Family(Quadratic{uni(1, 100), uni(-200, 200), uni(-200, 500)}); }},
      {"cubic", [&] { return Family(Cubic{uni(1, 30), uni(-60, 60), uni(-60, 60), uni(-100, 200)}); }},
      {"geometric", [&] { return Family(Geometric{uni(2, 1000)}); }},
      {"powers", [&] { return Family(Powers{uni(2, 1000)}); }},
      {"polygonal", [&] { return Family(Polygonal{uni(3, 1000)}); }},
      {"centered polygonal", [&] { return Family(CenteredPolygonal{uni(1, 1000)}); }},
      {"pyramidal", [&] { return Family(Pyramidal{uni(3, 1000)}); }},
      {"merged diagonals (first)", [&] { return Family(MergedDiagonals{uni(1, 200), true}); }},
      {"merged diagonals (second)", [&] { return Family(MergedDiagonals{uni(2, 200), false}); }},
  };
  std::vector<std::pair<std::string, std::vector<PartitionSpec>>> out;
  for (auto &[name, make] : makers) {
    std::vector<PartitionSpec> specs;
    while (static_cast<int>(specs.size()) < per_family) {
      try {
        specs.emplace_back(make());
      } catch (const DomainError &) {
      }
    }
    out.emplace_back(name, std::move(specs));
  }
  return out;
}

i64 diagonal_route(const PartitionSpec &spec, i64 n) {
  const auto &md = std::get<MergedDiagonals>(spec.family());
  return (md.start_first ? locate_merged_first(md.d, n) : locate_merged_second(md.d, n))
      .via_diagonal;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240501);
  const auto families = random_families(rng, 20);
  std::uniform_int_distribution<i64> big(1, 1'000'000'000'000);
  i64 checked = 0, mismatches = 0, sets = 0;
  std::string first;
  for (const auto &[name, specs] : families) {
    for (const auto &spec : specs) {
      ++sets;
      const PartialSumTable oracle(spec);
      const auto closed = prepare_closed_form(spec);
      const bool diagonal = std::holds_alternative<MergedDiagonals>(spec.family());
      const auto check = [&](i64 n) {
        const i64 want = oracle.locate(n).block;
        bool ok = (*closed)(n).block == want;
        if (diagonal)
          ok = ok && diagonal_route(spec, n) == want;
        ++checked;
        if (!ok && mismatches++ == 0)
          first = name + " at n=" + std::to_string(n);
      };
      for (i64 n = 1; n <= 100'000; ++n)
        check(n);
      for (int k = 0; k < 1000; ++k)
        check(big(rng));
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = mismatches == 0 && elapsed < 60.0;
  o.detail = std::to_string(families.size()) + " families, " + std::to_string(sets) +
             " parameter sets, " + std::to_string(checked) + " indices, " +
             std::to_string(mismatches) + " mismatches" +
             (first.empty() ? "" : " (first: " + first + ")") + " in " +
             std::to_string(elapsed) + " s (limit 60 s)";
  return o;
}

Outcome oeis_fixtures() {
  Outcome o;
  int matched = 0;
  const auto &mappings = irrseq::builtin_mappings();
  for (const auto &m : mappings) {
    try {
      const auto fixture = oeis::load_fixture(IRRSEQ_DEFAULT_FIXTURES, m.a_number);
      const i64 first = std::max(fixture.offset, m.from.value_or(fixture.offset));
      const i64 count = std::min<i64>(100, fixture.last_index() - first + 1);
      const auto r = oeis::compare(irrseq::make_generator(m), fixture, count, m.from);
      if (r.matched) {
        ++matched;
        continue;
      }
      if (o.pass)
        o.detail = m.a_number + " differs at index " + std::to_string(*r.mismatch_index) + "; ";
    } catch (const std::exception &e) {
      if (o.pass)
        o.detail = m.a_number + ": " + e.what() + "; ";
    }
    o.pass = false;
  }
  o.detail += std::to_string(matched) + "/" + std::to_string(mappings.size()) +
              " mappings match their fixtures";
  return o;
}

Outcome permutation_algebra() {
  const PartitionSpec beta(Linear{4, -1});
  const IntraBlockPermutation rev(beta, rules::Reversal{});
  const IntraBlockPermutation half(beta, rules::HalfShuffle{});
  const IntraBlockPermutation rot(beta, rules::Rotation{});
  std::vector<std::string> failures;

  const auto rev2 = power(rev, 2);
  for (i64 n = 1; n <= 10'000; ++n)
    if (rev2.term(n) != n) {
      failures.push_back("reversal^2 at " + std::to_string(n));
      break;
    }

  if (block_order(half, 1) != 3)
    failures.push_back("half-shuffle block 1 order");
  for (i64 k = 2; k <= 50; ++k)
    if (block_order(half, k) != 12) {
      failures.push_back("half-shuffle block " + std::to_string(k) + " order");
      break;
    }
  const auto half12 = power(half, 12);
  const i64 end50 = exact_partial_sum(beta, 50);
  for (i64 n = 1; n <= end50; ++n)
    if (half12.term(n) != n) {
      failures.push_back("half-shuffle^12 at " + std::to_string(n));
      break;
    }
  const auto seq = sequence_order(half, 50);
  if (seq.lcm != 12)
    failures.push_back("half-shuffle sequence order");

  for (i64 k = 1; k <= 10; ++k)
    if (block_order(rot, k) != 4 * k - 1) {
      failures.push_back("rotation block " + std::to_string(k) + " order");
      break;
    }
  for (i64 n = 1; n <= 10'000; ++n)
    if (rotation_closed_form(n) != rot.term(n)) {
      failures.push_back("rotation closed form at " + std::to_string(n));
      break;
    }

  Outcome o;
  o.pass = failures.empty();
  o.detail = o.pass ? "reversal^2 = id on 1e4 indices; half-shuffle orders 3, 12 "
                      "and ^12 = id on blocks 1..50; rotation orders 3,7,...,39; "
                      "rotation closed form on 1e4 indices"
                    : failures.front();
  return o;
}

Outcome structural_identities() {
  std::mt19937_64 rng(7);
  auto families = random_families(rng, 20);
  std::vector<PartitionSpec> pool;
  for (auto &[name, specs] : families)
    for (auto &s : specs)
      pool.push_back(std::move(s));
  for (int k = 0; k < 20; ++k) {
    std::vector<i64> lengths(200);
    for (auto &len : lengths)
      len = std::uniform_int_distribution<i64>(1, 50)(rng);
    pool.emplace_back(Explicit{lengths});
  }
  std::vector<PartialSumTable> tables;
  tables.reserve(pool.size());
  for (const auto &s : pool)
    tables.emplace_back(s);

  std::uniform_int_distribution<std::size_t> pick(0, tables.size() - 1);
  i64 failures = 0;
  std::string first;
  for (int trial = 0; trial < 100'000; ++trial) {
    const auto &t = tables[pick(rng)];
    const i64 hi = t.spec().is_explicit() ? t.partial_sum(*t.spec().block_count())
                                          : 1'000'000'000'000;
    const i64 n = std::uniform_int_distribution<i64>(1, hi)(rng);
    const Position p = t.locate(n);
    const bool ok = p.offset + p.offset_from_right == t.block_length(p.block) + 1 &&
                    t.position_to_index(p.block, p.offset) == n &&
                    t.partial_sum(p.block - 1) < n && n <= t.partial_sum(p.block);
    if (!ok && failures++ == 0)
      first = " (first at n=" + std::to_string(n) + ")";
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = "1e5 random (spec, n) pairs over " + std::to_string(pool.size()) +
             " specs, " + std::to_string(failures) + " violations" + first;
  return o;
}

Outcome branch_coverage() {
  i64 mismatches = 0, trig = 0, cardano = 0;
  std::string first;
  const auto tally = [&](const ClosedFormResult &r, i64 want, const std::string &what) {
    if (r.method == RootMethod::Trigonometric)
      ++trig;
    else if (r.method == RootMethod::Cardano)
      ++cardano;
    if (r.block != want && mismatches++ == 0)
      first = " (first: " + what + ")";
  };
  for (i64 m = 3; m <= 30; ++m) {
    const PartialSumTable oracle(PartitionSpec(Polygonal{m}));
    for (i64 n = 1; n <= 10'000; ++n)
      tally(locate_polygonal(m, n), oracle.locate(n).block,
            "polygonal m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  for (i64 m = 1; m <= 30; ++m) {
    const PartialSumTable oracle(PartitionSpec(CenteredPolygonal{m}));
    for (i64 n = 1; n <= 10'000; ++n)
      tally(locate_centered_polygonal(m, n), oracle.locate(n).block,
            "centered m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  Outcome o;
  o.pass = mismatches == 0 && trig > 0 && cardano > 0;
  o.detail = std::to_string(cardano) + " Cardano and " + std::to_string(trig) +
             " trigonometric evaluations, " + std::to_string(mismatches) +
             " mismatches against the oracle" + first;
  return o;
}

Outcome performance() {
  const auto points = irrseq::bench_points(500'000'000, 2'000'000'000, 100'000);
  Outcome o;
  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed;
  for (const auto &[name, spec] :
       {std::pair{std::string("linear"), PartitionSpec(Linear{1, 0})},
        std::pair{std::string("geometric"), PartitionSpec(Geometric{2})}}) {
    const auto r = irrseq::run_bench(spec, points, true, true, 9);
    if (!r.equal) {
      o.pass = false;
      detail << name << " closed form differs at n=" << *r.mismatch << "; ";
      continue;
    }
    double oracle_ns = 0, closed_ns = 0;
    for (const auto &row : r.rows)
      (row.method == "oracle" ? oracle_ns : closed_ns) = row.median_ns;
    const double speedup = oracle_ns / closed_ns;
    if (speedup < 2.0)
      o.pass = false;
    detail << name << " " << closed_ns << " ns vs " << oracle_ns << " ns (" << speedup
           << "x); ";
  }
  o.detail = detail.str() + "results equal before timing, required >= 2x";
  return o;
}

} // namespace

int main() {
  int failed = 0;
  const auto run = [&failed](int id, const char *title, Outcome (*fn)()) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(id, title, o);
    failed += o.pass ? 0 : 1;
  };
  run(1, "golden arrays", golden_arrays);
  run(2, "oracle equivalence", oracle_equivalence);
  run(3, "OEIS fixtures", oeis_fixtures);
  run(4, "permutation algebra", permutation_algebra);
  run(5, "structural identities", structural_identities);
  run(6, "branch coverage", branch_coverage);
  run(7, "performance sanity", performance);
  return failed == 0 ? 0 : 1;
}

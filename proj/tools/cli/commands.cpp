#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "bench.hpp"
#include "catalog.hpp"
#include "irregular/closed_forms.hpp"
#include "irregular/errors.hpp"
#include "irregular/oeis.hpp"
#include "irregular/prefix_sums.hpp"
#include "syntax.hpp"

#ifndef IRRSEQ_DEFAULT_FIXTURES
#define IRRSEQ_DEFAULT_FIXTURES "fixtures"
#endif

namespace irrseq {
namespace {

namespace fs = std::filesystem;
using namespace irregular;

struct Globals {
  std::string endpoint;
  std::string fixtures = IRRSEQ_DEFAULT_FIXTURES;
  i64 cap = 1'000'000;
};

/// Runs fn(i) for i in [0, count) over `threads` workers in contiguous shards.
template <class Fn> void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i)
          fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &th : pool)
    th.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

int cmd_locate(const std::string &spec_text, i64 n, std::ostream &out) {
  if (n < 1)
    throw UsageError("N must be >= 1");
  const PartitionSpec spec = parse_spec(spec_text);
  const PartialSumTable table(spec);
  const Position pos = table.locate(n);
  out << "L=" << pos.block << " R=" << pos.offset
      << " R'=" << pos.offset_from_right << '\n';
  const auto closed = closed_form_locate(spec, n);
  if (!closed) {
    out << "closed: none\n";
    return kExitOk;
  }
  out << "closed: L=" << closed->block << " method=" << to_string(closed->method)
      << " corrected=" << (closed->corrected ? "yes" : "no");
  if (closed->block != pos.block) {
    out << " MISMATCH\n";
    return kExitMismatch;
  }
  out << '\n';
  return kExitOk;
}

int cmd_gen(const std::string &spec_text, const std::string &what, i64 count,
            const std::string &format, unsigned threads, const Globals &g,
            std::ostream &out) {
  if (count < 1)
    throw UsageError("COUNT must be >= 1");
  if (count > g.cap)
    throw ResourceError("COUNT " + std::to_string(count) +
                        " exceeds the cap of " + std::to_string(g.cap) +
                        " elements (raise it with --cap)");
  const Sequence seq = make_sequence(parse_spec(spec_text), what);
  const auto size = static_cast<std::size_t>(count);
  const bool rows = format == "rows" && seq.row_of;
  std::vector<i64> values(size), row(rows ? size : 0);
  parallel_for(size, threads, [&](std::size_t i) {
    const i64 n = static_cast<i64>(i) + 1;
    values[i] = seq.term(n);
    if (rows)
      row[i] = seq.row_of(n);
  });

  std::ostringstream buf;
  if (format == "csv") {
    buf << "n,value\n";
    for (std::size_t i = 0; i < size; ++i)
      buf << i + 1 << ',' << values[i] << '\n';
  } else if (format == "flat") {
    for (std::size_t i = 0; i < size; ++i)
      buf << (i ? " " : "") << values[i];
    buf << '\n';
  } else {
    for (std::size_t i = 0; i < size; ++i) {
      const bool new_row = i == 0 || !rows || row[i] != row[i - 1];
      if (i > 0)
        buf << (new_row ? "\n" : " ");
      buf << values[i];
    }
    buf << '\n';
  }
  out << buf.str();
  return kExitOk;
}

struct VerifyOutcome {
  enum Kind { Ok, Mismatch, Missing } kind = Ok;
  std::string line;
};

VerifyOutcome verify_one(const Mapping &m, const fs::path &dir, i64 count) {
  oeis::SequenceFixture fixture;
  try {
    fixture = oeis::load_fixture(dir, m.a_number);
  } catch (const DomainError &e) {
    return {VerifyOutcome::Missing, m.a_number + " missing: " + e.what()};
  } catch (const FormatError &e) {
    return {VerifyOutcome::Missing, m.a_number + " unreadable fixture: " + e.what()};
  }
  const i64 first = std::max(fixture.offset, m.from.value_or(fixture.offset));
  const i64 n = std::min(count, fixture.last_index() - first + 1);
  if (n < 1)
    return {VerifyOutcome::Missing,
            m.a_number + " fixture has no terms from index " + std::to_string(first)};
  const auto report = oeis::compare(make_generator(m), fixture, n, first);
  std::ostringstream line;
  line << m.a_number << ' ' << m.spec << ' ' << m.what << ' ';
  if (report.matched) {
    line << "ok " << report.compared << " terms";
    return {VerifyOutcome::Ok, line.str()};
  }
  line << "MISMATCH at index " << *report.mismatch_index << ": expected "
       << report.expected;
  if (report.error.empty())
    line << ", got " << report.actual;
  else
    line << ", generator failed: " << report.error;
  return {VerifyOutcome::Mismatch, line.str()};
}

int cmd_verify(const std::optional<std::string> &mapping_file, i64 count,
               unsigned threads, const Globals &g, std::ostream &out) {
  if (count < 1)
    throw UsageError("--count must be >= 1");
  std::vector<Mapping> mappings;
  if (mapping_file) {
    std::ifstream in(*mapping_file);
    if (!in)
      throw ResourceError("cannot open mapping file " + *mapping_file);
    mappings = parse_mappings(in);
  } else {
    mappings = builtin_mappings();
  }
  std::vector<VerifyOutcome> outcomes(mappings.size());
  parallel_for(mappings.size(), threads, [&](std::size_t i) {
    outcomes[i] = verify_one(mappings[i], g.fixtures, count);
  });
  int ok = 0, missing = 0, mismatched = 0;
  for (const auto &o : outcomes) {
    out << o.line << '\n';
    ok += o.kind == VerifyOutcome::Ok;
    missing += o.kind == VerifyOutcome::Missing;
    mismatched += o.kind == VerifyOutcome::Mismatch;
  }
  out << ok << '/' << outcomes.size() << " mappings match\n";
  if (missing)
    return kExitEnvironment;
  return mismatched ? kExitMismatch : kExitOk;
}

std::pair<i64, i64> parse_range(const std::string &text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw UsageError("range must look like LO..HI");
  return {parse_i64(std::string_view(text).substr(0, dots), "range start"),
          parse_i64(std::string_view(text).substr(dots + 2), "range end")};
}

int cmd_bench(const std::string &spec_text, const std::string &range,
              const std::string &method, int reps, std::size_t samples,
              std::ostream &out, std::ostream &err) {
  if (method != "oracle" && method != "closed" && method != "both")
    throw UsageError("method must be oracle, closed or both");
  const PartitionSpec spec = parse_spec(spec_text);
  const auto [lo, hi] = parse_range(range);
  const auto points = bench_points(lo, hi, samples);
  const auto report =
      run_bench(spec, points, method != "closed", method != "oracle", reps);
  if (!report.equal) {
    err << "closed form disagrees with the oracle at n=" << *report.mismatch
        << '\n';
    return kExitMismatch;
  }
  out << "method  median_ns  mean_ns  reps  ops\n";
  for (const auto &row : report.rows) {
    out << std::left << std::setw(8) << row.method << std::fixed
        << std::setprecision(1) << row.median_ns << "  " << row.mean_ns << "  "
        << row.reps << "  " << row.ops << '\n';
    if (row.cv > 0.2)
      err << "warning: " << row.method << " timings vary by " << std::fixed
          << std::setprecision(0) << row.cv * 100 << "% across repetitions\n";
  }
  return kExitOk;
}

int cmd_fetch(const std::string &a_number, double timeout, bool write,
              const Globals &g, std::ostream &out) {
  if (!oeis::is_a_number(a_number))
    throw UsageError("not an A-number: " + a_number);
  const std::string body = oeis::fetch_bfile(
      a_number, oeis::resolve_endpoint(g.endpoint.empty()
                                           ? std::nullopt
                                           : std::optional(g.endpoint)),
      timeout);
  const auto fixture = oeis::parse_bfile(body, a_number);
  if (!write) {
    out << body;
    return kExitOk;
  }
  fs::create_directories(g.fixtures);
  const fs::path path = fs::path(g.fixtures) / (a_number + ".txt");
  std::ofstream file(path);
  if (!(file << body))
    throw ResourceError("cannot write " + path.string());
  out << "wrote " << fixture.terms.size() << " terms to " << path.string()
      << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Irregular-array sequence tool: locate indices, generate "
               "sequences, permutations and reluctant sequences, verify "
               "against OEIS fixtures, and benchmark closed forms.",
               "irrseq"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--oeis-endpoint", g.endpoint,
                 std::string("OEIS base URL (default: $") +
                     oeis::kEndpointEnvVar + " or " + oeis::kDefaultEndpoint + ")");
  app.add_option("--fixtures", g.fixtures, "fixture directory")
      ->capture_default_str();
  app.add_option("--cap", g.cap, "maximum number of elements to materialize")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string spec, what, format = "rows", range, method, a_number;
  std::optional<std::string> mapping;
  i64 n = 0, count = 0, verify_count = 100;
  int reps = 0;
  unsigned threads = 1;
  std::size_t samples = 100'000;
  double timeout = 10;
  bool write = false;

  auto *locate = app.add_subcommand("locate", "print L, R, R' of index N");
  locate->add_option("SPEC", spec)->required();
  locate->add_option("N", n)->required();

  auto *gen = app.add_subcommand("gen", "print terms 1..COUNT");
  gen->add_option("SPEC", spec)->required();
  gen->add_option("WHAT", what,
                  "L, R, R', B, b, perm:reversal|halfshuffle|rotation, "
                  "reluctant:Q[,rev]")
      ->required();
  gen->add_option("COUNT", count)->required();
  gen->add_option("--format", format)
      ->check(CLI::IsMember({"rows", "flat", "csv"}))
      ->capture_default_str();
  gen->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto *verify = app.add_subcommand("verify", "compare generators to OEIS fixtures");
  verify->add_option("--mapping", mapping, "mapping file (default: built-in list)");
  verify->add_option("--count", verify_count, "terms per sequence")
      ->capture_default_str();
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto *bench = app.add_subcommand("bench", "time closed form against the oracle");
  bench->add_option("SPEC", spec)->required();
  bench->add_option("RANGE", range, "LO..HI")->required();
  bench->add_option("METHOD", method, "oracle, closed or both")->required();
  bench->add_option("REPS", reps)->required()->check(CLI::PositiveNumber);
  bench->add_option("--samples", samples, "maximum sample points in the range")
      ->capture_default_str();

  auto *fetch = app.add_subcommand("fetch", "download a b-file from the OEIS");
  fetch->add_option("A_NUMBER", a_number)->required();
  fetch->add_option("--timeout", timeout, "seconds")->capture_default_str();
  fetch->add_flag("--write", write, "store it in the fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*locate)
      return cmd_locate(spec, n, out);
    if (*gen)
      return cmd_gen(spec, what, count, format, threads, g, out);
    if (*verify)
      return cmd_verify(mapping, verify_count, threads, g, out);
    if (*bench)
      return cmd_bench(spec, range, method, reps, samples, out, err);
    if (*fetch)
      return cmd_fetch(a_number, timeout, write, g, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError &e) {
    err << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const NetworkError &e) {
    err << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const HttpStatusError &e) {
    err << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const FormatError &e) {
    err << "error: " << e.what() << '\n';
    return kExitEnvironment;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

} // namespace irrseq

#include "syntax.hpp"

#include <charconv>
#include <memory>
#include <sstream>
#include <vector>

#include "irregular/errors.hpp"
#include "irregular/intrablock.hpp"
#include "irregular/reluctant.hpp"

namespace irrseq {
namespace {

using namespace irregular;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

std::vector<i64> parse_args(std::string_view family, std::string_view body,
                            std::size_t expected) {
  const auto parts = split(body, ',');
  if (parts.size() != expected)
    throw UsageError(std::string(family) + " takes " + std::to_string(expected) +
                     " argument(s), got " + std::to_string(parts.size()));
  std::vector<i64> values;
  for (auto p : parts)
    values.push_back(parse_i64(p, family));
  return values;
}

std::vector<i64> parse_lengths(std::string_view body) {
  constexpr i64 kMaxRun = 10'000'000;
  std::vector<i64> lengths;
  for (auto item : split(body, ',')) {
    const auto star = item.find('*');
    if (star == std::string_view::npos) {
      lengths.push_back(parse_i64(item, "explicit"));
      continue;
    }
    const i64 value = parse_i64(item.substr(0, star), "explicit");
    const i64 count = parse_i64(item.substr(star + 1), "explicit run");
    if (count < 1 || count > kMaxRun)
      throw UsageError("explicit run count must be in 1.." +
                       std::to_string(kMaxRun));
    lengths.insert(lengths.end(), static_cast<std::size_t>(count), value);
  }
  return lengths;
}

std::string join(std::initializer_list<i64> values) {
  std::string out;
  for (i64 v : values) {
    if (!out.empty())
      out += ',';
    out += std::to_string(v);
  }
  return out;
}

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

i64 block_len(const PartitionSpec &spec, std::size_t k) {
  try {
    return block_length(spec, static_cast<i64>(k));
  } catch (const DomainError &) {
    throw UsageError("more permutation blocks than the partition has");
  }
}

} // namespace

std::vector<std::vector<i64>> parse_block_images(const PartitionSpec &spec,
                                                 std::string_view text) {
  std::vector<std::vector<i64>> images;
  for (auto block : split(text, '/')) {
    std::vector<i64> img;
    for (auto v : split(block, ','))
      img.push_back(parse_i64(v, "image"));
    images.push_back(std::move(img));
  }
  for (std::size_t k = 1; k <= images.size(); ++k)
    block_len(spec, k);
  return images;
}

std::vector<std::vector<i64>> parse_block_cycles(const PartitionSpec &spec,
                                                 std::string_view text) {
  std::vector<std::vector<i64>> images;
  for (auto block : split(text, '/')) {
    const i64 len = block_len(spec, images.size() + 1);
    if (len > 10'000'000)
      throw UsageError("block too long for cycle notation");
    std::vector<i64> img(static_cast<std::size_t>(len));
    for (i64 r = 1; r <= len; ++r)
      img[static_cast<std::size_t>(r - 1)] = r;
    std::vector<bool> used(img.size() + 1, false);
    std::size_t pos = 0;
    while (pos < block.size()) {
      if (block[pos] != '(')
        throw UsageError("cycle notation expects '(', got \"" +
                         std::string(block.substr(pos)) + "\"");
      const auto close = block.find(')', pos);
      if (close == std::string_view::npos)
        throw UsageError("unterminated cycle");
      std::vector<i64> cycle;
      std::istringstream items{std::string(block.substr(pos + 1, close - pos - 1))};
      for (std::string item; items >> item;) {
        const i64 v = parse_i64(item, "cycle element");
        if (v < 1 || v > len || used[static_cast<std::size_t>(v)])
          throw UsageError("cycle element " + item + " is out of range or repeated");
        used[static_cast<std::size_t>(v)] = true;
        cycle.push_back(v);
      }
      for (std::size_t c = 0; c < cycle.size(); ++c)
        img[static_cast<std::size_t>(cycle[c] - 1)] = cycle[(c + 1) % cycle.size()];
      pos = close + 1;
    }
    images.push_back(std::move(img));
  }
  return images;
}

i64 parse_i64(std::string_view text, std::string_view what) {
  i64 value = 0;
  const auto *first = text.data();
  const auto *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw UsageError("expected an integer for " + std::string(what) + ", got \"" +
                     std::string(text) + "\"");
  return value;
}

PartitionSpec parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("partition spec needs the form family:args, got \"" +
                     std::string(text) + "\"");
  const auto name = text.substr(0, colon);
  const auto body = text.substr(colon + 1);

  if (name == "const") {
    const auto a = parse_args(name, body, 1);
    return PartitionSpec(Constant{a[0]});
  }
  if (name == "linear") {
    const auto a = parse_args(name, body, 2);
    return PartitionSpec(Linear{a[0], a[1]});
  }
  if (name == "quad") {
    const auto a = parse_args(name, body, 3);
    return PartitionSpec(Quadratic{a[0], a[1], a[2]});
  }
  if (name == "cubic") {
    const auto a = parse_args(name, body, 4);
    return PartitionSpec(Cubic{a[0], a[1], a[2], a[3]});
  }
  if (name == "geom")
    return PartitionSpec(Geometric{parse_args(name, body, 1)[0]});
  if (name == "pow")
    return PartitionSpec(Powers{parse_args(name, body, 1)[0]});
  if (name == "poly")
    return PartitionSpec(Polygonal{parse_args(name, body, 1)[0]});
  if (name == "cpoly")
    return PartitionSpec(CenteredPolygonal{parse_args(name, body, 1)[0]});
  if (name == "pyr")
    return PartitionSpec(Pyramidal{parse_args(name, body, 1)[0]});
  if (name == "diag") {
    const auto parts = split(body, ',');
    if (parts.size() != 2 || (parts[1] != "first" && parts[1] != "second"))
      throw UsageError("diag takes D,first or D,second");
    return PartitionSpec(
        MergedDiagonals{parse_i64(parts[0], "diag"), parts[1] == "first"});
  }
  if (name == "explicit")
    return PartitionSpec(Explicit{parse_lengths(body)});
  throw UsageError("unknown partition family \"" + std::string(name) + "\"");
}

std::string format_spec(const PartitionSpec &spec) {
  return std::visit(
      overloaded{
          [](const Constant &f) { return "const:" + join({f.p0}); },
          [](const Linear &f) { return "linear:" + join({f.p1, f.p0}); },
          [](const Quadratic &f) { return "quad:" + join({f.p2, f.p1, f.p0}); },
          [](const Cubic &f) {
            return "cubic:" + join({f.p3, f.p2, f.p1, f.p0});
          },
          [](const Geometric &f) { return "geom:" + join({f.m}); },
          [](const Powers &f) { return "pow:" + join({f.m}); },
          [](const Polygonal &f) { return "poly:" + join({f.m}); },
          [](const CenteredPolygonal &f) { return "cpoly:" + join({f.m}); },
          [](const Pyramidal &f) { return "pyr:" + join({f.m}); },
          [](const MergedDiagonals &f) {
            return "diag:" + std::to_string(f.d) +
                   (f.start_first ? ",first" : ",second");
          },
          [](const Explicit &f) {
            std::string out = "explicit:";
            const auto &v = f.lengths;
            for (std::size_t i = 0; i < v.size();) {
              std::size_t j = i;
              while (j < v.size() && v[j] == v[i])
                ++j;
              if (i > 0)
                out += ',';
              const std::size_t run = j - i;
              if (run >= 3) {
                out += std::to_string(v[i]) + '*' + std::to_string(run);
              } else {
                out += std::to_string(v[i]);
                if (run == 2)
                  out += ',' + std::to_string(v[i]);
              }
              i = j;
            }
            return out;
          },
      },
      spec.family());
}

Sequence make_sequence(const PartitionSpec &spec, std::string_view what) {
  auto table = std::make_shared<const PartialSumTable>(spec);
  const auto block_of = [table](i64 n) { return table->locate(n).block; };

  if (what == "L")
    return {block_of, block_of};
  if (what == "R")
    return {[table](i64 n) { return table->locate(n).offset; }, block_of};
  if (what == "R'")
    return {[table](i64 n) { return table->locate(n).offset_from_right; },
            block_of};
  if (what == "B")
    return {[table](i64 s) { return table->partial_sum(s); }, {}};
  if (what == "b")
    return {[table](i64 s) { return table->block_length(s); }, {}};

  if (what.starts_with("perm:")) {
    const auto rule_name = what.substr(5);
    IntraBlockPermutation::Rule rule;
    if (rule_name.starts_with("images:"))
      rule = rules::ExplicitBlocks{parse_block_images(spec, rule_name.substr(7))};
    else if (rule_name.starts_with("cycles:"))
      rule = rules::ExplicitBlocks{parse_block_cycles(spec, rule_name.substr(7))};
    else if (rule_name == "reversal")
      rule = rules::Reversal{};
    else if (rule_name == "halfshuffle")
      rule = rules::HalfShuffle{};
    else if (rule_name == "rotation")
      rule = rules::Rotation{};
    else
      throw UsageError("unknown permutation rule \"" + std::string(rule_name) +
                       "\"");
    auto perm = std::make_shared<const IntraBlockPermutation>(spec, rule);
    return {[perm](i64 n) { return perm->term(n); }, block_of};
  }

  if (what.starts_with("reluctant:")) {
    const auto parts = split(what.substr(10), ',');
    if (parts.empty() || parts.size() > 2 ||
        (parts.size() == 2 && parts[1] != "rev"))
      throw UsageError("reluctant takes Q or Q,rev");
    const i64 q = parse_i64(parts[0], "reluctant repetitions");
    auto seq = std::make_shared<const ReluctantSequence>(
        ReluctantSpec{sequences::naturals(), spec, q, parts.size() == 2});
    return {[seq](i64 n) { return seq->term(n); },
            [seq](i64 n) { return seq->zeta().locate(n).block; }};
  }
  throw UsageError("unknown sequence \"" + std::string(what) +
                   "\" (expected L, R, R', B, b, perm:RULE or reluctant:Q[,rev])");
}

} // namespace irrseq

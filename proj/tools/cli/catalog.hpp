#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irregular/oeis.hpp"
#include "syntax.hpp"

namespace irrseq {

/// One generator <-> A-number pairing. The generator is make_sequence(spec,
/// what) evaluated at (OEIS index + shift); comparison starts at OEIS index
/// max(offset, from).
struct Mapping {
  std::string a_number;
  std::string spec;
  std::string what;
  i64 shift = 0;
  std::optional<i64> from;
  std::size_t line = 0;
};

/// Line format: `A-number SPEC WHAT [shift=K] [from=I]`; '#' starts a comment.
/// irregular::FormatError with the line number on malformed lines.
std::vector<Mapping> parse_mappings(std::istream &in);
std::vector<Mapping> parse_mappings(std::string_view text);

/// The A-numbers cited alongside the closed forms and reluctant sequences.
const std::vector<Mapping> &builtin_mappings();

irregular::oeis::IndexedGenerator make_generator(const Mapping &m);

} // namespace irrseq

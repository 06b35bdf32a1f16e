#pragma once

#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irregular/checked_math.hpp"

namespace irregular::oeis {

/// Terms of an OEIS sequence with contiguous indices starting at `offset`.
struct SequenceFixture {
  std::string a_number;
  i64 offset = 0;
  std::vector<i64> terms;

  i64 last_index() const { return offset + static_cast<i64>(terms.size()) - 1; }
  i64 at(i64 index) const;
};

/// 'A' followed by six digits.
bool is_a_number(std::string_view id);

/// Parses b-file text: "index value" per line, '#' comments and blank lines
/// ignored. FormatError (with line number) on malformed lines, GapError on
/// non-contiguous indices.
SequenceFixture parse_bfile(std::istream &in, std::string a_number = {});
SequenceFixture parse_bfile(std::string_view text, std::string a_number = {});

/// Loads `<dir>/<a_number>.txt`. DomainError if the file is missing.
SequenceFixture load_fixture(const std::filesystem::path &dir,
                             const std::string &a_number);

/// Generator over OEIS indices.
using IndexedGenerator = std::function<i64(i64)>;

struct MatchReport {
  bool matched = true;
  i64 compared = 0;
  std::optional<i64> mismatch_index;
  i64 expected = 0;
  i64 actual = 0;
  std::string error; // set when the generator threw
};

/// Compares `count` terms starting at max(fixture.offset, from_index),
/// aligning by OEIS index. DomainError when the fixture is too short.
MatchReport compare(const IndexedGenerator &generator,
                    const SequenceFixture &fixture, i64 count,
                    std::optional<i64> from_index = std::nullopt);

inline constexpr const char *kDefaultEndpoint = "https://oeis.org";
inline constexpr const char *kEndpointEnvVar = "IRREGULAR_OEIS_ENDPOINT";

/// Flag value if given, else the environment override, else the default.
std::string resolve_endpoint(const std::optional<std::string> &flag);

/// GET <endpoint>/Annnnnn/bnnnnnn.txt. NetworkError when the server cannot be
/// reached within the timeout, HttpStatusError on a non-200 reply.
std::string fetch_bfile(const std::string &a_number,
                        const std::string &endpoint, double timeout_seconds);

} // namespace irregular::oeis

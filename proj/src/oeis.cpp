#include "irregular/oeis.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "irregular/errors.hpp"

namespace irregular::oeis {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::optional<i64> parse_int(std::string_view s) {
  i64 value = 0;
  const auto *first = s.data();
  const auto *last = s.data() + s.size();
  if (!s.empty() && s.front() == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    return std::nullopt;
  return value;
}

} // namespace

i64 SequenceFixture::at(i64 index) const {
  if (index < offset || index > last_index())
    throw DomainError(a_number + " has no term at index " +
                      std::to_string(index));
  return terms[static_cast<std::size_t>(index - offset)];
}

bool is_a_number(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A')
    return false;
  for (char c : id.substr(1))
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

SequenceFixture parse_bfile(std::istream &in, std::string a_number) {
  SequenceFixture fixture;
  fixture.a_number = std::move(a_number);
  std::string line;
  std::size_t line_no = 0;
  std::optional<i64> expected_index;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#')
      continue;
    const auto split = body.find_first_of(" \t");
    if (split == std::string_view::npos)
      throw FormatError(line_no, "expected \"index value\"");
    const auto index = parse_int(body.substr(0, split));
    const auto value = parse_int(trim(body.substr(split)));
    if (!index || !value)
      throw FormatError(line_no, "expected two integers");
    if (expected_index && *index != *expected_index)
      throw GapError(line_no, "index " + std::to_string(*index) +
                                  " follows " +
                                  std::to_string(*expected_index - 1));
    if (!expected_index)
      fixture.offset = *index;
    expected_index = *index + 1;
    fixture.terms.push_back(*value);
  }
  if (fixture.terms.empty())
    throw FormatError(line_no, "no terms");
  return fixture;
}

SequenceFixture parse_bfile(std::string_view text, std::string a_number) {
  std::istringstream in{std::string(text)};
  return parse_bfile(in, std::move(a_number));
}

SequenceFixture load_fixture(const std::filesystem::path &dir,
                             const std::string &a_number) {
  const auto path = dir / (a_number + ".txt");
  std::ifstream in(path);
  if (!in)
    throw DomainError("missing fixture " + path.string());
  return parse_bfile(in, a_number);
}

MatchReport compare(const IndexedGenerator &generator,
                    const SequenceFixture &fixture, i64 count,
                    std::optional<i64> from_index) {
  if (count < 1)
    throw DomainError("count must be >= 1");
  const i64 first = std::max(fixture.offset, from_index.value_or(fixture.offset));
  if (first + count - 1 > fixture.last_index())
    throw DomainError(fixture.a_number + " has only " +
                      std::to_string(fixture.last_index() - first + 1) +
                      " terms from index " + std::to_string(first));
  MatchReport report;
  for (i64 k = first; k < first + count; ++k) {
    const i64 expected = fixture.at(k);
    i64 actual = 0;
    try {
      actual = generator(k);
    } catch (const Error &e) {
      report.matched = false;
      report.mismatch_index = k;
      report.expected = expected;
      report.error = e.what();
      return report;
    }
    ++report.compared;
    if (actual != expected) {
      report.matched = false;
      report.mismatch_index = k;
      report.expected = expected;
      report.actual = actual;
      return report;
    }
  }
  return report;
}

std::string resolve_endpoint(const std::optional<std::string> &flag) {
  if (flag && !flag->empty())
    return *flag;
  if (const char *env = std::getenv(kEndpointEnvVar); env && *env)
    return env;
  return kDefaultEndpoint;
}

} // namespace irregular::oeis

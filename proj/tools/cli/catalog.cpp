#include "catalog.hpp"

#include <sstream>

#include "irregular/errors.hpp"

namespace irrseq {
namespace {

constexpr std::string_view kBuiltin = R"(# all ones; the minimal partitioning sequence
A000012 const:1 b shift=1
# n appears n times
A002024 linear:1,0 L
# n appears 2n times (the term at index 0 is outside the array)
A000194 linear:2,0 L from=1
# n appears n^2 times
A074279 quad:1,0,0 L
# ceil(log2 n) = ceil(log2((n-1)+1))
A029837 geom:2 L shift=-1 from=2
# number of base-3 digits of n
A081604 geom:3 L from=1
# second hexagonal numbers, B(s) = 2s^2 + s
A014105 linear:4,-1 B
# reluctant sequence and its reverse
A002260 const:1 reluctant:1
A004736 const:1 reluctant:1,rev
# beta = 1, 2, 2, 2, ...
A071797 explicit:1,2*1000 reluctant:1
A080883 explicit:1,2*1000 reluctant:1,rev shift=1
# beta = 1, 3, 5, 7, ...
A064866 linear:2,-1 reluctant:1
# beta = 1, 1, 2, 4, 8, ...
A062050 explicit:1,1,2,4,8,16,32,64,128,256,512,1024,2048,4096,8192,16384,32768,65536,131072,262144,524288,1048576 reluctant:1
# beta = 1, 1, 1, ... repeated twice
A122197 const:1 reluctant:2
)";

std::optional<i64> keyword(std::string_view token, std::string_view key) {
  if (!token.starts_with(key) || token.size() <= key.size() ||
      token[key.size()] != '=')
    return std::nullopt;
  return parse_i64(token.substr(key.size() + 1), key);
}

} // namespace

std::vector<Mapping> parse_mappings(std::istream &in) {
  std::vector<Mapping> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;)
      tokens.push_back(t);
    if (tokens.empty())
      continue;
    if (tokens.size() < 3 || tokens.size() > 5)
      throw irregular::FormatError(line_no,
                                   "expected A-number SPEC WHAT [shift=K] [from=I]");
    Mapping m{tokens[0], tokens[1], tokens[2], 0, std::nullopt, line_no};
    if (!irregular::oeis::is_a_number(m.a_number))
      throw irregular::FormatError(line_no, "bad A-number " + m.a_number);
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      try {
        if (const auto v = keyword(tokens[i], "shift"))
          m.shift = *v;
        else if (const auto f = keyword(tokens[i], "from"))
          m.from = *f;
        else
          throw irregular::FormatError(line_no, "unknown field " + tokens[i]);
      } catch (const UsageError &e) {
        throw irregular::FormatError(line_no, e.what());
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mapping> parse_mappings(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_mappings(in);
}

const std::vector<Mapping> &builtin_mappings() {
  static const std::vector<Mapping> mappings = parse_mappings(kBuiltin);
  return mappings;
}

irregular::oeis::IndexedGenerator make_generator(const Mapping &m) {
  const Sequence seq = make_sequence(parse_spec(m.spec), m.what);
  return [term = seq.term, shift = m.shift](i64 k) {
    return term(irregular::checked_add(k, shift));
  };
}

} // namespace irrseq

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irregular/partition.hpp"

namespace irrseq {

using irregular::i64;

/// Malformed command-line input. Maps to exit code 64.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses the textual partition syntax:
///   const:P0  linear:P1,P0  quad:P2,P1,P0  cubic:P3,P2,P1,P0
///   geom:M  pow:M  poly:M  cpoly:M  pyr:M  diag:D,first|second
///   explicit:V,V,...   (a run may be written V*COUNT)
/// UsageError on bad syntax; DomainError when the family fails validation.
irregular::PartitionSpec parse_spec(std::string_view text);

/// Canonical text: no spaces, explicit runs of three or more as V*COUNT.
std::string format_spec(const irregular::PartitionSpec &spec);

/// Per-block in-block images for an explicit permutation. Blocks are
/// separated by '/'. Image notation lists b_k values ("3,1,2/7,6,5,1,2,3,4");
/// cycle notation lists disjoint cycles ("(1 3 2)/(1 7)(2 6)(3 5)"), with
/// "()" for a fixed block. Block lengths come from `spec`.
std::vector<std::vector<i64>> parse_block_images(const irregular::PartitionSpec &spec,
                                                 std::string_view text);
std::vector<std::vector<i64>> parse_block_cycles(const irregular::PartitionSpec &spec,
                                                 std::string_view text);

/// A generated integer sequence indexed from 1 (B also accepts 0).
struct Sequence {
  std::function<i64(i64)> term;
  /// Row of index n in the underlying array, for grouping by rows; unset when
  /// each term stands on its own row.
  std::function<i64(i64)> row_of;
};

/// WHAT is one of L, R, R', B, b, perm:reversal|halfshuffle|rotation,
/// perm:images:..., perm:cycles:... or reluctant:Q[,rev] (source sequence
/// 1, 2, 3, ...).
Sequence make_sequence(const irregular::PartitionSpec &spec,
                       std::string_view what);

/// Parses an integer, UsageError naming `what` otherwise.
i64 parse_i64(std::string_view text, std::string_view what);

} // namespace irrseq

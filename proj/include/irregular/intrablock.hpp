#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "irregular/prefix_sums.hpp"

namespace irregular {

class IntraBlockPermutation;

namespace rules {
/// Each block read right to left: value B(L-1) + R'.
struct Reversal {};
/// Left part reversed to the front, remaining values ascending after it
/// (3,1,2 / 7,6,5,1,2,3,4 inside blocks).
struct HalfShuffle {};
/// Blocks of length 4L-1 rotated by 2L places (3,1,2 / 5,6,7,1,2,3,4).
struct Rotation {};
/// In-block images per block, 1-based. Blocks past the list are fixed.
struct ExplicitBlocks {
  std::vector<std::vector<i64>> images;
};
/// outer(inner(n)).
struct Composition {
  std::shared_ptr<const IntraBlockPermutation> outer;
  std::shared_ptr<const IntraBlockPermutation> inner;
};
} // namespace rules

/// A permutation of the positive integers that maps every block of its
/// partitioning sequence onto itself.
class IntraBlockPermutation {
public:
  using Rule = std::variant<rules::Reversal, rules::HalfShuffle,
                            rules::Rotation, rules::ExplicitBlocks,
                            rules::Composition>;

  /// DomainError if the rule does not fit the partition (Rotation needs
  /// blocks of length 4s-1; explicit images must be permutations of the
  /// right length).
  IntraBlockPermutation(PartitionSpec beta, Rule rule);

  static IntraBlockPermutation identity(PartitionSpec beta);

  const PartitionSpec &beta() const { return table_->spec(); }
  const PartialSumTable &table() const { return *table_; }
  const Rule &rule() const { return rule_; }

  /// a(n) for n >= 1, without materializing the block.
  i64 term(i64 n) const;

private:
  IntraBlockPermutation(std::shared_ptr<const PartialSumTable> table, Rule rule);

  std::shared_ptr<const PartialSumTable> table_;
  Rule rule_;

  friend IntraBlockPermutation compose(const IntraBlockPermutation &,
                                       const IntraBlockPermutation &, i64);
};

/// Closed form of the rotation sequence through the Cantor pair (i, j):
/// ((i+j-1)^2 + i - j + 3 + 2(i+j-1)(-1)^(i+j)) / 2.
i64 rotation_closed_form(i64 n);

/// True when every partial sum B_beta(k), k <= horizon, is also a partial sum
/// of gamma (each block of beta is a union of consecutive blocks of gamma).
/// Explicit specs are checked up to their length.
bool refines(const PartitionSpec &gamma, const PartitionSpec &beta,
             i64 horizon);

inline constexpr i64 kCompatibilityHorizon = 256;

/// (f o g)(n) = f(g(n)) over f's partition. g's partition must equal or
/// refine f's (checked over kCompatibilityHorizon blocks), else DomainError.
IntraBlockPermutation compose(const IntraBlockPermutation &f,
                              const IntraBlockPermutation &g,
                              i64 horizon = kCompatibilityHorizon);

/// f composed with itself k times; k = 0 gives the identity.
IntraBlockPermutation power(const IntraBlockPermutation &f, i64 k);

inline constexpr i64 kDefaultMaterializationCap = 1'000'000;

/// In-block images (1-based) of block k. ResourceError above the cap;
/// DomainError if a value leaves the block.
std::vector<i64> materialize_block(const IntraBlockPermutation &perm, i64 k,
                                   i64 cap = kDefaultMaterializationCap);

/// Order of the permutation restricted to block k: LCM of its cycle lengths.
i64 block_order(const IntraBlockPermutation &perm, i64 k,
                i64 cap = kDefaultMaterializationCap);

struct OrderReport {
  i64 horizon_blocks = 0;
  std::optional<i64> lcm; // nullopt once the LCM overflowed
  bool overflow = false;
  /// LCM unchanged over the trailing ceil(horizon/2) blocks. Not stabilizing
  /// is evidence of infinite order, not a proof.
  bool stabilized = false;
  std::vector<i64> per_block_orders;
};

OrderReport sequence_order(const IntraBlockPermutation &perm, i64 horizon,
                           i64 cap = kDefaultMaterializationCap);

} // namespace irregular

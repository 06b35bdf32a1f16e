#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "irregular/closed_forms.hpp"
#include "irregular/prefix_sums.hpp"

namespace irregular {

/// Term accessor: index >= 1 to value. Must be reentrant.
using SequenceAccessor = std::function<i64(i64)>;

namespace sequences {
SequenceAccessor naturals();
SequenceAccessor constant(i64 value);
/// DomainError past the end of the list.
SequenceAccessor from_list(std::vector<i64> terms);
} // namespace sequences

/// Partitioning sequence of a generalized reluctant array: row s holds the
/// first B(s) terms of the source repeated q times, so c_s = q B(s) and
/// C(s) = c_1 + ... + c_s.
class ZetaTable {
public:
  ZetaTable(PartitionSpec beta, i64 q);

  const PartialSumTable &beta() const { return *beta_; }
  i64 repetitions() const { return q_; }

  /// c_s = q B(s).
  i64 row_length(i64 s) const;
  /// C(s), C(0) = 0.
  i64 partial_sum(i64 s) const { return sums_.sum(s); }
  Position locate(i64 n) const { return sums_.locate(n); }

  /// Closed form of C(s) where one is known (constant, b_s = p1 s, powers).
  std::optional<i128> closed_partial_sum(i64 s) const;

private:
  std::shared_ptr<const PartialSumTable> beta_;
  i64 q_;
  LazyPrefixSums sums_;
};

struct ReluctantSpec {
  SequenceAccessor alpha;
  PartitionSpec beta;
  i64 q = 1;
  bool reversed = false;
};

/// Oracle position in the reluctant array plus, for constant, b_s = p1 s and
/// powers partitions, the corrected closed-form block number.
struct ZetaLocation {
  Position position;
  std::optional<ClosedFormResult> closed;
};

class ReluctantSequence {
public:
  /// DomainError unless q >= 1 and alpha is set.
  explicit ReluctantSequence(ReluctantSpec spec);

  const ReluctantSpec &spec() const { return spec_; }
  const ZetaTable &zeta() const { return zeta_; }

  /// Index into the source: 1 + (R-1) mod B(L), or with R' when reversed.
  i64 source_index(i64 n) const;

  /// omega(n) = alpha(source_index(n)).
  i64 term(i64 n) const { return spec_.alpha(source_index(n)); }

  ZetaLocation locate(i64 n) const;

  /// Row k: the first B(k) source terms (reversed when requested) repeated q
  /// times. ResourceError when q B(k) exceeds the cap.
  std::vector<i64> row(i64 k, i64 cap = 1'000'000) const;

private:
  ReluctantSpec spec_;
  ZetaTable zeta_;
};

} // namespace irregular

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "irregular/partition.hpp"

namespace irregular {

/// Location of index n inside an irregular array.
struct Position {
  i64 n = 0;
  i64 block = 0;             // L(n)
  i64 offset = 0;            // R(n), counted from the left end, 1-based
  i64 offset_from_right = 0; // R'(n), counted from the right end, 1-based

  i64 block_length() const { return offset + offset_from_right - 1; }
  i64 block_start() const { return n - offset; } // B(L-1)
  bool operator==(const Position &) const = default;
};

/// Partial sums S(0..k) of a positive term sequence, extended on demand by
/// the recurrence S(s) = S(s-1) + term(s) and cached.
///
/// The cache is append-only and guarded by a shared mutex, so concurrent
/// readers are safe. When a closed form is supplied the cache stops growing at
/// `cache_limit` entries and larger arguments are served by the closed form.
class LazyPrefixSums {
public:
  using Term = std::function<i64(i64)>;

  static constexpr std::size_t kDefaultCacheLimit = std::size_t{1} << 22;

  /// `term_count` bounds finite sequences; locating past their total is a
  /// DomainError.
  LazyPrefixSums(Term term, Term closed_form,
                 std::optional<i64> term_count = std::nullopt,
                 std::size_t cache_limit = kDefaultCacheLimit);
  LazyPrefixSums(const LazyPrefixSums &other);
  LazyPrefixSums &operator=(const LazyPrefixSums &) = delete;

  /// S(s), s >= 0.
  i64 sum(i64 s) const;

  /// Smallest s with S(s) >= n, n >= 1, as a Position.
  Position locate(i64 n) const;

  /// Number of cached entries (S(0) included).
  std::size_t cached() const;

private:
  i64 extend_to(std::size_t size) const; // returns S(size-1)

  Term term_;
  Term closed_;
  std::optional<i64> count_;
  std::size_t limit_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<i64> sums_;
  // set once the next partial sum no longer fits in 64 bits
  mutable bool saturated_ = false;
};

/// Exact partial sums B(s) of a partitioning sequence plus the search-based
/// locator that every closed form is checked against.
class PartialSumTable {
public:
  explicit PartialSumTable(
      PartitionSpec spec,
      std::size_t cache_limit = LazyPrefixSums::kDefaultCacheLimit);

  const PartitionSpec &spec() const noexcept { return spec_; }

  i64 block_length(i64 s) const { return irregular::block_length(spec_, s); }

  /// B(s): closed form for parametric families, cached sums for explicit.
  i64 partial_sum(i64 s) const;

  /// B(s) from the cached recurrence (closed form past the cache limit).
  i64 recurrence_sum(i64 s) const { return sums_.sum(s); }

  /// Position of n by exponential doubling and binary search over the cached
  /// sums. OverflowError if B leaves 64 bits before bracketing n.
  Position locate(i64 n) const { return sums_.locate(n); }

  /// n = B(L-1) + R. DomainError unless 1 <= R <= b_L.
  i64 position_to_index(i64 block, i64 offset) const;

  std::size_t cached() const { return sums_.cached(); }

private:
  PartitionSpec spec_;
  LazyPrefixSums sums_;
};

} // namespace irregular

#include "irregular/prefix_sums.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <mutex>

namespace irregular {

LazyPrefixSums::LazyPrefixSums(Term term, Term closed_form,
                               std::optional<i64> term_count,
                               std::size_t cache_limit)
    : term_(std::move(term)), closed_(std::move(closed_form)),
      count_(term_count), limit_(std::max<std::size_t>(cache_limit, 2)), sums_{0} {}

LazyPrefixSums::LazyPrefixSums(const LazyPrefixSums &other)
    : term_(other.term_), closed_(other.closed_), count_(other.count_),
      limit_(other.limit_) {
  std::shared_lock lock(other.mutex_);
  sums_ = other.sums_;
  saturated_ = other.saturated_;
}

std::size_t LazyPrefixSums::cached() const {
  std::shared_lock lock(mutex_);
  return sums_.size();
}

i64 LazyPrefixSums::extend_to(std::size_t size) const {
  std::unique_lock lock(mutex_);
  if (sums_.size() < size) {
    sums_.reserve(size);
    while (sums_.size() < size && !saturated_) {
      const auto s = static_cast<i64>(sums_.size());
      i64 next;
      try {
        next = checked_add(sums_.back(), term_(s));
      } catch (const OverflowError &) {
        saturated_ = true;
        break;
      }
      assert(!closed_ || closed_(s) == next);
      sums_.push_back(next);
    }
  }
  return sums_[std::min(size, sums_.size()) - 1];
}

i64 LazyPrefixSums::sum(i64 s) const {
  if (s < 0)
    throw DomainError("partial sum index must be >= 0");
  const auto idx = static_cast<std::size_t>(s);
  {
    std::shared_lock lock(mutex_);
    if (idx < sums_.size())
      return sums_[idx];
  }
  if (closed_ && idx >= limit_)
    return closed_(s);
  extend_to(idx + 1);
  std::shared_lock lock(mutex_);
  if (idx >= sums_.size())
    throw OverflowError("partial sum B(" + std::to_string(s) +
                        ") does not fit in 64 bits");
  return sums_[idx];
}

Position LazyPrefixSums::locate(i64 n) const {
  if (n < 1)
    throw DomainError("index must be >= 1");

  const auto from_cache = [n](const std::vector<i64> &sums) {
    const auto it = std::lower_bound(sums.begin(), sums.end(), n);
    const auto block = static_cast<i64>(it - sums.begin());
    return Position{n, block, n - *(it - 1), *it + 1 - n};
  };

  {
    std::shared_lock lock(mutex_);
    if (sums_.back() >= n)
      return from_cache(sums_);
  }

  // Double the cached range until it brackets n or reaches the cache limit.
  for (;;) {
    std::size_t size;
    {
      std::shared_lock lock(mutex_);
      if (sums_.back() >= n)
        return from_cache(sums_);
      if (saturated_)
        throw OverflowError("block containing index " + std::to_string(n) +
                            " ends past 2^63");
      size = sums_.size();
    }
    if (closed_ && size >= limit_)
      break;
    std::size_t target = size * 2;
    if (closed_)
      target = std::min(target, limit_);
    if (count_) {
      const auto full = static_cast<std::size_t>(*count_) + 1;
      if (size >= full)
        throw DomainError("index " + std::to_string(n) +
                          " lies past the end of a finite sequence");
      target = std::min(target, full);
    }
    extend_to(target);
  }

  // Past the cache: exponential doubling then binary search on the closed
  // form. Invariant: sum(lo) < n <= sum(hi), where a sum that overflows
  // counts as >= n.
  const auto reaches = [this, n](i64 s) {
    try {
      return closed_(s) >= n;
    } catch (const OverflowError &) {
      return true;
    }
  };
  i64 lo = static_cast<i64>(limit_) - 1;
  i64 step = 1;
  i64 hi = lo + step;
  while (!reaches(hi)) {
    lo = hi;
    step = step > std::numeric_limits<i64>::max() / 2
               ? std::numeric_limits<i64>::max()
               : step * 2;
    hi = lo > std::numeric_limits<i64>::max() - step
             ? std::numeric_limits<i64>::max()
             : lo + step;
  }
  while (hi - lo > 1) {
    const i64 mid = lo + (hi - lo) / 2;
    if (!reaches(mid))
      lo = mid;
    else
      hi = mid;
  }
  const i64 prev = closed_(hi - 1);
  return Position{n, hi, n - prev, closed_(hi) + 1 - n};
}

PartialSumTable::PartialSumTable(PartitionSpec spec, std::size_t cache_limit)
    : spec_(std::move(spec)),
      sums_([spec = spec_](i64 s) { return irregular::block_length(spec, s); },
            spec_.is_explicit()
                ? LazyPrefixSums::Term{}
                : LazyPrefixSums::Term{[spec = spec_](i64 s) {
                    return exact_partial_sum(spec, s);
                  }},
            spec_.block_count(), cache_limit) {}

i64 PartialSumTable::partial_sum(i64 s) const {
  if (spec_.is_explicit())
    return sums_.sum(s);
  return exact_partial_sum(spec_, s);
}

i64 PartialSumTable::position_to_index(i64 block, i64 offset) const {
  if (block < 1 || offset < 1)
    throw DomainError("block and offset must be >= 1");
  const i64 length = block_length(block);
  if (offset > length)
    throw DomainError("offset " + std::to_string(offset) +
                      " exceeds block length " + std::to_string(length));
  return checked_add(sums_.sum(block - 1), offset);
}

} // namespace irregular

#include "irregular/intrablock.hpp"

#include <algorithm>

#include "irregular/diagonals.hpp"

namespace irregular {
namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

bool has_rotation_shape(const PartitionSpec &spec) {
  if (const auto poly = spec.polynomial())
    return poly->degree() <= 1 && block_length(spec, 1) == 3 &&
           block_length(spec, 2) == 7;
  if (const auto *e = std::get_if<Explicit>(&spec.family())) {
    for (std::size_t s = 1; s <= e->lengths.size(); ++s)
      if (e->lengths[s - 1] != 4 * static_cast<i64>(s) - 1)
        return false;
    return true;
  }
  return false;
}

void check_images(const PartitionSpec &beta,
                  const std::vector<std::vector<i64>> &images) {
  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto &img = images[k];
    const i64 len = block_length(beta, static_cast<i64>(k + 1));
    if (static_cast<i64>(img.size()) != len)
      throw DomainError("block " + std::to_string(k + 1) + " has length " +
                        std::to_string(len) + " but " +
                        std::to_string(img.size()) + " images were given");
    std::vector<bool> seen(img.size() + 1, false);
    for (i64 v : img) {
      if (v < 1 || v > len || seen[static_cast<std::size_t>(v)])
        throw DomainError("block " + std::to_string(k + 1) +
                          " images are not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

} // namespace

IntraBlockPermutation::IntraBlockPermutation(PartitionSpec beta, Rule rule)
    : IntraBlockPermutation(std::make_shared<const PartialSumTable>(std::move(beta)),
                            std::move(rule)) {}

IntraBlockPermutation::IntraBlockPermutation(
    std::shared_ptr<const PartialSumTable> table, Rule rule)
    : table_(std::move(table)), rule_(std::move(rule)) {
  const PartitionSpec &beta = table_->spec();
  std::visit(overloaded{
                 [&](const rules::Rotation &) {
                   if (!has_rotation_shape(beta))
                     throw DomainError(
                         "rotation requires block lengths 4s-1");
                 },
                 [&](const rules::ExplicitBlocks &r) { check_images(beta, r.images); },
                 [](const rules::Composition &c) {
                   if (!c.outer || !c.inner)
                     throw DomainError("composition of a null permutation");
                 },
                 [](const auto &) {},
             },
             rule_);
}

IntraBlockPermutation IntraBlockPermutation::identity(PartitionSpec beta) {
  return {std::move(beta), rules::ExplicitBlocks{}};
}

i64 IntraBlockPermutation::term(i64 n) const {
  if (const auto *c = std::get_if<rules::Composition>(&rule_))
    return c->outer->term(c->inner->term(n));

  const Position pos = table_->locate(n);
  const i64 r = pos.offset;
  const i64 rr = pos.offset_from_right;
  const i64 in_block = std::visit(
      overloaded{
          [&](const rules::Reversal &) { return rr; },
          [&](const rules::HalfShuffle &) {
            if (rr >= r + 1)
              return rr;
            return r - (r + rr - 1) / 2;
          },
          [&](const rules::Rotation &) {
            const i64 half = (4 * pos.block - 1) / 2;
            if (r < rr)
              return half + r + 1;
            return r - half;
          },
          [&](const rules::ExplicitBlocks &e) {
            if (pos.block > static_cast<i64>(e.images.size()))
              return r;
            return e.images[static_cast<std::size_t>(pos.block - 1)]
                           [static_cast<std::size_t>(r - 1)];
          },
          [](const rules::Composition &) -> i64 { return 0; },
      },
      rule_);
  return pos.block_start() + in_block;
}

i64 rotation_closed_form(i64 n) {
  const DiagonalPair p = index_to_pair(n);
  const i128 s = static_cast<i128>(p.i) + p.j - 1;
  const i128 sign = ((p.i + p.j) % 2 == 0) ? 1 : -1;
  const i128 num = s * s + p.i - p.j + 3 + 2 * s * sign;
  return narrow(num / 2);
}

bool refines(const PartitionSpec &gamma, const PartitionSpec &beta,
             i64 horizon) {
  const PartialSumTable fine(gamma);
  const PartialSumTable coarse(beta);
  i64 limit = horizon;
  if (const auto count = beta.block_count())
    limit = std::min(limit, *count);
  for (i64 k = 1; k <= limit; ++k) {
    const i64 boundary = coarse.partial_sum(k);
    try {
      if (fine.locate(boundary).offset_from_right != 1)
        return false;
    } catch (const DomainError &) {
      return false; // gamma ends before this block of beta
    }
  }
  return true;
}

IntraBlockPermutation compose(const IntraBlockPermutation &f,
                              const IntraBlockPermutation &g, i64 horizon) {
  if (!(f.beta() == g.beta()) && !refines(g.beta(), f.beta(), horizon))
    throw DomainError("composition needs the inner partition to equal or "
                      "refine the outer one");
  return IntraBlockPermutation(
      f.table_, rules::Composition{std::make_shared<const IntraBlockPermutation>(f),
                                   std::make_shared<const IntraBlockPermutation>(g)});
}

IntraBlockPermutation power(const IntraBlockPermutation &f, i64 k) {
  if (k < 0)
    throw DomainError("power must be >= 0");
  IntraBlockPermutation result = IntraBlockPermutation::identity(f.beta());
  for (i64 i = 0; i < k; ++i)
    result = (i == 0) ? f : compose(f, result);
  return result;
}

std::vector<i64> materialize_block(const IntraBlockPermutation &perm, i64 k,
                                   i64 cap) {
  if (k < 1)
    throw DomainError("block index must be >= 1");
  const i64 len = perm.table().block_length(k);
  if (len > cap)
    throw ResourceError("block " + std::to_string(k) + " has " +
                        std::to_string(len) + " elements, above the cap of " +
                        std::to_string(cap));
  const i64 start = perm.table().partial_sum(k - 1);
  std::vector<i64> images(static_cast<std::size_t>(len));
  for (i64 r = 1; r <= len; ++r) {
    const i64 v = perm.term(start + r) - start;
    if (v < 1 || v > len)
      throw DomainError("index " + std::to_string(start + r) +
                        " is mapped outside its block");
    images[static_cast<std::size_t>(r - 1)] = v;
  }
  return images;
}

i64 block_order(const IntraBlockPermutation &perm, i64 k, i64 cap) {
  const std::vector<i64> images = materialize_block(perm, k, cap);
  std::vector<bool> seen(images.size(), false);
  i64 order = 1;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start])
      continue;
    i64 cycle = 0;
    for (std::size_t x = start; !seen[x];
         x = static_cast<std::size_t>(images[x] - 1)) {
      seen[x] = true;
      ++cycle;
    }
    order = checked_lcm(order, cycle);
  }
  return order;
}

OrderReport sequence_order(const IntraBlockPermutation &perm, i64 horizon,
                           i64 cap) {
  if (horizon < 1)
    throw DomainError("horizon must be >= 1");
  OrderReport report;
  report.horizon_blocks = horizon;
  const i64 window = (horizon + 1) / 2;
  i64 lcm = 1;
  i64 lcm_before_window = 1;
  for (i64 k = 1; k <= horizon; ++k) {
    if (k == horizon - window + 1)
      lcm_before_window = lcm;
    const i64 order = block_order(perm, k, cap);
    report.per_block_orders.push_back(order);
    if (!report.overflow) {
      try {
        lcm = checked_lcm(lcm, order);
      } catch (const OverflowError &) {
        report.overflow = true;
      }
    }
  }
  if (!report.overflow) {
    report.lcm = lcm;
    report.stabilized = lcm == lcm_before_window;
  }
  return report;
}

} // namespace irregular

#include "irregular/reluctant.hpp"

#include <stdexcept>

namespace irregular {
namespace {

i128 pow_i128(i64 base, i64 exp) {
  i128 r = 1;
  for (i64 k = 0; k < exp; ++k)
    r = checked_mul(r, static_cast<i128>(base));
  return r;
}

std::optional<i128> closed_zeta_sum(const Family &family, i64 q_in, i64 s) {
  const i128 q = q_in;
  const i128 ss = s;
  if (const auto *c = std::get_if<Constant>(&family))
    return checked_mul(checked_mul(q, static_cast<i128>(c->p0)),
                       checked_mul(ss, ss + 1) / 2);
  if (const auto *l = std::get_if<Linear>(&family); l && l->p0 == 0)
    return checked_mul(checked_mul(q, static_cast<i128>(l->p1)),
                       checked_mul(checked_mul(ss, ss + 1), ss + 2) / 6);
  if (const auto *p = std::get_if<Powers>(&family))
    return checked_mul(q * p->m, pow_i128(p->m, s) - 1) / (p->m - 1);
  return std::nullopt;
}

LazyPrefixSums::Term closed_zeta_term(const PartitionSpec &beta, i64 q) {
  if (!closed_zeta_sum(beta.family(), q, 1))
    return {};
  return [family = beta.family(), q](i64 s) {
    return narrow(*closed_zeta_sum(family, q, s));
  };
}

} // namespace

namespace sequences {

SequenceAccessor naturals() {
  return [](i64 n) { return n; };
}

SequenceAccessor constant(i64 value) {
  return [value](i64) { return value; };
}

SequenceAccessor from_list(std::vector<i64> terms) {
  auto shared = std::make_shared<const std::vector<i64>>(std::move(terms));
  return [shared](i64 n) {
    if (n < 1 || n > static_cast<i64>(shared->size()))
      throw DomainError("source sequence has only " +
                        std::to_string(shared->size()) + " terms");
    return (*shared)[static_cast<std::size_t>(n - 1)];
  };
}

} // namespace sequences

ZetaTable::ZetaTable(PartitionSpec beta, i64 q)
    : beta_(std::make_shared<const PartialSumTable>(std::move(beta))), q_(q),
      sums_(
          [table = beta_, q](i64 s) {
            return checked_mul(q, table->partial_sum(s));
          },
          closed_zeta_term(beta_->spec(), q), beta_->spec().block_count()) {
  if (q < 1)
    throw DomainError("repetition count must be >= 1");
}

i64 ZetaTable::row_length(i64 s) const {
  if (s < 1)
    throw DomainError("row index must be >= 1");
  return checked_mul(q_, beta_->partial_sum(s));
}

std::optional<i128> ZetaTable::closed_partial_sum(i64 s) const {
  return closed_zeta_sum(beta_->spec().family(), q_, s);
}

ReluctantSequence::ReluctantSequence(ReluctantSpec spec)
    : spec_(std::move(spec)), zeta_(spec_.beta, spec_.q) {
  if (!spec_.alpha)
    throw DomainError("reluctant sequence needs a source accessor");
}

i64 ReluctantSequence::source_index(i64 n) const {
  const Position pos = zeta_.locate(n);
  const i64 prefix = zeta_.beta().partial_sum(pos.block);
  const i64 along = spec_.reversed ? pos.offset_from_right : pos.offset;
  return 1 + (along - 1) % prefix;
}

ZetaLocation ReluctantSequence::locate(i64 n) const {
  ZetaLocation out{zeta_.locate(n), std::nullopt};
  const auto &family = spec_.beta.family();
  const auto q = static_cast<double>(spec_.q);
  const auto dn = static_cast<double>(n);
  const auto sum_at = [this](i64 s) { return *zeta_.closed_partial_sum(s); };

  if (const auto *c = std::get_if<Constant>(&family)) {
    const double pq = static_cast<double>(c->p0) * q;
    const double raw = (-pq + std::sqrt(8 * dn * pq + pq * pq)) / (2 * pq);
    out.closed = correct_ceiling(raw, RootMethod::Radical, n, sum_at);
  } else if (const auto *l = std::get_if<Linear>(&family); l && l->p0 == 0) {
    // C(x) = k x (x+1)(x+2) / 6 with k = p1 q
    const double k = static_cast<double>(l->p1) * q;
    const double radicand = 243 * dn * dn * k * k * k * k - std::pow(k, 6);
    double raw;
    RootMethod method;
    if (radicand >= 0) {
      const double u =
          std::cbrt(27 * dn * k * k + std::sqrt(3.0) * std::sqrt(radicand));
      raw = -1 + k / (std::cbrt(3.0) * u) + u / (std::cbrt(9.0) * k);
      method = RootMethod::Cardano;
    } else {
      raw = largest_real_root(1, 3, 2, -6 * dn / k, &method);
    }
    out.closed = correct_ceiling(raw, method, n, sum_at);
  } else if (const auto *p = std::get_if<Powers>(&family)) {
    const auto pp = static_cast<double>(p->m);
    const double raw =
        std::log(dn * (pp - 1) / (pp * q) + 1) / std::log(pp);
    out.closed = correct_ceiling(raw, RootMethod::Radical, n, sum_at);
  }
  if (out.closed && out.closed->block != out.position.block)
    throw std::logic_error("closed-form block disagrees with the oracle at n=" +
                           std::to_string(n));
  return out;
}

std::vector<i64> ReluctantSequence::row(i64 k, i64 cap) const {
  const i64 length = zeta_.row_length(k);
  if (length > cap)
    throw ResourceError("row " + std::to_string(k) + " has " +
                        std::to_string(length) + " elements, above the cap of " +
                        std::to_string(cap));
  const i64 prefix = zeta_.beta().partial_sum(k);
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(length));
  for (i64 rep = 0; rep < spec_.q; ++rep)
    for (i64 i = 1; i <= prefix; ++i)
      out.push_back(spec_.alpha(spec_.reversed ? prefix + 1 - i : i));
  return out;
}

} // namespace irregular

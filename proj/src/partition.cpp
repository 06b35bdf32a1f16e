#include "irregular/partition.hpp"

#include <algorithm>
#include <cmath>

namespace irregular {
namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

i128 eval_numerator(const ScaledPolynomial &p, i64 s) {
  i128 acc = 0;
  for (int k = 3; k >= 0; --k)
    acc = checked_add(checked_mul(acc, static_cast<i128>(s)),
                      static_cast<i128>(p.coeff[k]));
  return acc;
}

std::optional<ScaledPolynomial> polynomial_of(const Family &family) {
  using P = std::optional<ScaledPolynomial>;
  return std::visit(
      overloaded{
          [](const Constant &f) -> P { return ScaledPolynomial{1, {f.p0, 0, 0, 0}}; },
          [](const Linear &f) -> P { return ScaledPolynomial{1, {f.p0, f.p1, 0, 0}}; },
          [](const Quadratic &f) -> P {
            return ScaledPolynomial{1, {f.p0, f.p1, f.p2, 0}};
          },
          [](const Cubic &f) -> P {
            return ScaledPolynomial{1, {f.p0, f.p1, f.p2, f.p3}};
          },
          [](const Polygonal &f) -> P {
            return ScaledPolynomial{2, {0, -(f.m - 4), f.m - 2, 0}};
          },
          [](const CenteredPolygonal &f) -> P {
            return ScaledPolynomial{2, {2, -f.m, f.m, 0}};
          },
          [](const Pyramidal &f) -> P {
            return ScaledPolynomial{6, {0, -(f.m - 5), 3, f.m - 2}};
          },
          [](const MergedDiagonals &f) -> P {
            if (!f.start_first)
              return std::nullopt;
            // d^2 s - d(d-1)/2, doubled
            return ScaledPolynomial{2, {-f.d * (f.d - 1), 2 * f.d * f.d, 0, 0}};
          },
          [](const auto &) -> P { return std::nullopt; },
      },
      family);
}

ValidationReport violation(i64 s, i64 value) {
  return {false, s, value, "block " + std::to_string(s) + " has length " +
                               std::to_string(value)};
}

ValidationReport parameter_violation(std::string reason) {
  return {false, std::nullopt, std::nullopt, std::move(reason)};
}

// b_s as a scaled numerator; block is valid when numerator >= scale.
bool poly_ok(const ScaledPolynomial &p, i64 s) {
  return eval_numerator(p, s) >= p.scale;
}

// Candidate block indices where a polynomial of degree <= 3 with positive
// leading coefficient can take its minimum over s >= 1.
std::vector<i64> minimum_candidates(const ScaledPolynomial &p) {
  std::vector<i64> out{1};
  auto around = [&out](double x) {
    if (!std::isfinite(x) || x < 1.0 || x > 9e15)
      return;
    auto base = static_cast<i64>(std::floor(x));
    for (i64 s = base - 1; s <= base + 2; ++s)
      if (s >= 1)
        out.push_back(s);
  };
  const auto c1 = static_cast<double>(p.coeff[1]);
  const auto c2 = static_cast<double>(p.coeff[2]);
  const auto c3 = static_cast<double>(p.coeff[3]);
  if (p.coeff[3] != 0) {
    // derivative 3 c3 s^2 + 2 c2 s + c1; local minimum at the larger root
    const double disc = 4 * c2 * c2 - 12 * c3 * c1;
    if (disc >= 0)
      around((-2 * c2 + std::sqrt(disc)) / (6 * c3));
  } else if (p.coeff[2] != 0) {
    around(-c1 / (2 * c2));
  }
  return out;
}

// First s >= 1 with b_s < 1 given that some candidate violates. On [1, s_min]
// the polynomial is either decreasing or rises then falls, so search the last
// monotone-decreasing stretch ending at s_min.
i64 first_violation(const ScaledPolynomial &p, i64 s_min) {
  if (!poly_ok(p, 1))
    return 1;
  // find lo with b_lo ok and every s in (lo, s_min] on the decreasing side
  i64 lo = 1;
  if (p.coeff[3] != 0) {
    const auto c1 = static_cast<double>(p.coeff[1]);
    const auto c2 = static_cast<double>(p.coeff[2]);
    const auto c3 = static_cast<double>(p.coeff[3]);
    const double disc = 4 * c2 * c2 - 12 * c3 * c1;
    const double local_max = (-2 * c2 - std::sqrt(disc)) / (6 * c3);
    if (local_max > 1)
      lo = std::max<i64>(1, static_cast<i64>(std::floor(local_max)) - 1);
    while (lo > 1 && !poly_ok(p, lo))
      --lo;
  }
  i64 hi = s_min; // violating
  while (hi - lo > 1) {
    const i64 mid = lo + (hi - lo) / 2;
    if (poly_ok(p, mid))
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

ValidationReport check_polynomial(const ScaledPolynomial &p, i64 horizon) {
  const auto value_at = [&p](i64 s) {
    return narrow(eval_numerator(p, s) / p.scale);
  };
  for (i64 s : minimum_candidates(p)) {
    if (!poly_ok(p, s)) {
      const i64 first = first_violation(p, s);
      return violation(first, value_at(first));
    }
  }
  const i64 direct = std::min<i64>(horizon, 4096);
  for (i64 s = 1; s <= direct; ++s)
    if (!poly_ok(p, s))
      return violation(s, value_at(s));
  return {};
}

} // namespace

int ScaledPolynomial::degree() const {
  for (int k = 3; k > 0; --k)
    if (coeff[k] != 0)
      return k;
  return 0;
}

ValidationReport validate(const Family &family, i64 horizon) {
  if (horizon < 1)
    return parameter_violation("horizon must be >= 1");
  return std::visit(
      overloaded{
          [&](const Constant &f) {
            if (f.p0 < 1)
              return violation(1, f.p0);
            return ValidationReport{};
          },
          [&](const Linear &f) {
            if (f.p1 < 1)
              return parameter_violation("linear: p1 must be >= 1");
            return check_polynomial(*polynomial_of(family), horizon);
          },
          [&](const Quadratic &f) {
            if (f.p2 < 1)
              return parameter_violation("quadratic: p2 must be >= 1");
            return check_polynomial(*polynomial_of(family), horizon);
          },
          [&](const Cubic &f) {
            if (f.p3 < 1)
              return parameter_violation("cubic: p3 must be >= 1");
            return check_polynomial(*polynomial_of(family), horizon);
          },
          [&](const Geometric &f) {
            if (f.m < 2)
              return parameter_violation("geometric: m must be >= 2");
            return ValidationReport{};
          },
          [&](const Powers &f) {
            if (f.m < 2)
              return parameter_violation("powers: m must be >= 2");
            return ValidationReport{};
          },
          [&](const Polygonal &f) {
            if (f.m < 3)
              return parameter_violation("polygonal: m must be >= 3");
            return ValidationReport{};
          },
          [&](const CenteredPolygonal &f) {
            if (f.m < 1)
              return parameter_violation("centered polygonal: m must be >= 1");
            return ValidationReport{};
          },
          [&](const Pyramidal &f) {
            if (f.m < 3)
              return parameter_violation("pyramidal: m must be >= 3");
            return ValidationReport{};
          },
          [&](const MergedDiagonals &f) {
            if (f.d < 1)
              return parameter_violation("merged diagonals: d must be >= 1");
            if (!f.start_first && f.d < 2)
              return parameter_violation(
                  "merged diagonals starting at the second: d must be >= 2");
            return ValidationReport{};
          },
          [&](const Explicit &f) {
            if (f.lengths.empty())
              return parameter_violation("explicit: empty list");
            for (std::size_t i = 0; i < f.lengths.size(); ++i)
              if (f.lengths[i] < 1)
                return violation(static_cast<i64>(i + 1), f.lengths[i]);
            return ValidationReport{};
          },
      },
      family);
}

PartitionSpec::PartitionSpec(Family family) : family_(std::move(family)) {
  const auto report = validate(family_, 1);
  if (!report.ok)
    throw DomainError("invalid partitioning sequence: " + report.reason);
}

std::optional<i64> PartitionSpec::block_count() const {
  if (const auto *e = std::get_if<Explicit>(&family_))
    return static_cast<i64>(e->lengths.size());
  return std::nullopt;
}

std::optional<ScaledPolynomial> PartitionSpec::polynomial() const {
  return polynomial_of(family_);
}

i64 block_length(const PartitionSpec &spec, i64 s) {
  if (s < 1)
    throw DomainError("block index must be >= 1");
  if (auto poly = spec.polynomial())
    return narrow(eval_numerator(*poly, s) / poly->scale);
  return std::visit(
      overloaded{
          [s](const Geometric &f) {
            return checked_mul(f.m - 1, checked_pow(f.m, s - 1));
          },
          [s](const Powers &f) {
            if (s == 1)
              return f.m;
            return checked_mul(f.m - 1, checked_pow(f.m, s - 1));
          },
          [s](const MergedDiagonals &f) -> i64 {
            // start_first is polynomial; only the second-diagonal variant here
            if (s == 1)
              return 1;
            const i128 d = f.d;
            const i128 v = checked_mul(checked_mul(d, d), static_cast<i128>(s - 1));
            return narrow(v - d * (d - 3) / 2);
          },
          [s](const Explicit &f) {
            if (s > static_cast<i64>(f.lengths.size()))
              throw DomainError("explicit partitioning sequence has only " +
                                std::to_string(f.lengths.size()) + " blocks");
            return f.lengths[static_cast<std::size_t>(s - 1)];
          },
          [](const auto &) -> i64 {
            throw DomainError("unreachable: polynomial family");
          },
      },
      spec.family());
}

namespace {

// All terms in 64 bits when s is small enough; nullopt on any overflow.
std::optional<i64> scaled_partial_sum_small(const ScaledPolynomial &p, i64 s) {
  const auto &c = p.coeff;
  if (s < 0 || s >= (i64{1} << 31) || (c[2] != 0 && s >= (i64{1} << 20)) ||
      (c[3] != 0 && s >= (i64{1} << 15)))
    return std::nullopt;
  const i64 f1 = s * (s + 1) / 2;
  const i64 f[4] = {s, f1, c[2] ? s * (s + 1) * (2 * s + 1) / 6 : 0,
                    c[3] ? f1 * f1 : 0};
  i64 acc = 0;
  for (int k = 0; k < 4; ++k) {
    i64 term = 0;
    if (__builtin_mul_overflow(c[k], f[k], &term) ||
        __builtin_add_overflow(acc, term, &acc))
      return std::nullopt;
  }
  return acc;
}

} // namespace

i128 scaled_partial_sum(const ScaledPolynomial &p, i64 s_in) {
  if (const auto small = scaled_partial_sum_small(p, s_in))
    return *small;
  const i128 s = s_in;
  const auto &c = p.coeff;
  const i128 f1 = c[1] || c[3] ? checked_mul(s, s + 1) / 2 : 0;
  const i128 f[4] = {s, f1,
                     c[2] ? checked_mul(checked_mul(s, s + 1), 2 * s + 1) / 6 : 0,
                     c[3] ? checked_mul(f1, f1) : 0};
  i128 acc = 0;
  for (int k = 0; k < 4; ++k)
    if (c[k])
      acc = checked_add(acc, checked_mul(static_cast<i128>(c[k]), f[k]));
  return acc;
}

i64 exact_partial_sum(const PartitionSpec &spec, i64 s) {
  if (s < 0)
    throw DomainError("partial sum index must be >= 0");
  if (s == 0)
    return 0;
  if (auto poly = spec.polynomial())
    return narrow(scaled_partial_sum(*poly, s) / poly->scale);
  return std::visit(
      overloaded{
          [s](const Geometric &f) { return checked_pow(f.m, s) - 1; },
          [s](const Powers &f) { return checked_pow(f.m, s); },
          [s](const MergedDiagonals &f) {
            const i128 u = checked_mul(static_cast<i128>(f.d), static_cast<i128>(s - 1));
            return narrow(checked_mul(u + 1, u + 2) / 2);
          },
          [s](const Explicit &f) {
            if (s > static_cast<i64>(f.lengths.size()))
              throw DomainError("explicit partitioning sequence has only " +
                                std::to_string(f.lengths.size()) + " blocks");
            i64 acc = 0;
            for (i64 k = 0; k < s; ++k)
              acc = checked_add(acc, f.lengths[static_cast<std::size_t>(k)]);
            return acc;
          },
          [](const auto &) -> i64 {
            throw DomainError("unreachable: polynomial family");
          },
      },
      spec.family());
}

} // namespace irregular

#include "irregular/closed_forms.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <numbers>

#include "irregular/diagonals.hpp"

namespace irregular {
namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

const double kCbrt2 = std::cbrt(2.0);
const double kCbrt4 = std::cbrt(4.0);

void require_index(i64 n) {
  if (n < 1)
    throw DomainError("index must be >= 1");
}

void require_valid(const Family &family) {
  const auto report = validate(family, 1);
  if (!report.ok)
    throw DomainError("invalid partitioning sequence: " + report.reason);
}

// m^s, saturated well above any 64-bit target.
// m^s by squaring, saturating at 2^100.
i128 saturating_pow(i64 m, i64 s) {
  constexpr i128 cap = static_cast<i128>(1) << 100;
  if (s < 64) {
    std::uint64_t r = 1, base = static_cast<std::uint64_t>(m);
    bool ok = true;
    for (i64 e = s; e > 0 && ok; e >>= 1) {
      if (e & 1)
        ok = !__builtin_mul_overflow(r, base, &r);
      if (e > 1 && ok)
        ok = !__builtin_mul_overflow(base, base, &base);
    }
    if (ok)
      return r;
  }
  i128 r = 1;
  for (i64 k = 0; k < s; ++k) {
    r *= m;
    if (r > cap)
      return cap;
  }
  return r;
}

// B(s) = p1 s (s+1) / 2 + p0 s, in 64 bits when it fits.
i128 linear_partial_sum(i64 p1, i64 p0, i64 s) {
  if (s >= 0 && s < (i64{1} << 31)) {
    const i64 tri = s * (s + 1) / 2;
    i64 a = 0, b = 0, r = 0;
    if (!__builtin_mul_overflow(p1, tri, &a) &&
        !__builtin_mul_overflow(p0, s, &b) && !__builtin_add_overflow(a, b, &r))
      return r;
  }
  return scaled_partial_sum(ScaledPolynomial{1, {p0, p1, 0, 0}}, s);
}

i128 triangular(i64 s) { return static_cast<i128>(s) * (s + 1) / 2; }

} // namespace

const char *to_string(RootMethod m) {
  switch (m) {
  case RootMethod::Integer:
    return "integer";
  case RootMethod::Radical:
    return "radical";
  case RootMethod::Cardano:
    return "cardano";
  case RootMethod::Trigonometric:
    return "trigonometric";
  case RootMethod::Numeric:
    return "numeric";
  }
  return "unknown";
}

double largest_real_root(double a, double b, double c, double d,
                         RootMethod *method) {
  if (a == 0)
    throw DomainError("leading coefficient must be non-zero");
  // depressed cubic t^3 + p t + q with x = t - b / (3a)
  const double shift = -b / (3 * a);
  const double p = (3 * a * c - b * b) / (3 * a * a);
  const double q = (2 * b * b * b - 9 * a * b * c + 27 * a * a * d) /
                   (27 * a * a * a);
  const double disc = -(4 * p * p * p + 27 * q * q);
  double t;
  if (disc > 0 && p < 0) {
    const double r = 2 * std::sqrt(-p / 3);
    const double arg =
        std::clamp(3 * q / (2 * p) * std::sqrt(-3 / p), -1.0, 1.0);
    t = r * std::cos(std::acos(arg) / 3);
    if (method)
      *method = RootMethod::Trigonometric;
  } else {
    const double s = std::sqrt(std::max(0.0, q * q / 4 + p * p * p / 27));
    // larger-magnitude branch avoids cancellation; the other cube root is
    // -p / (3 w)
    const double big = -q / 2 + (q <= 0 ? s : -s);
    const double w = std::cbrt(big);
    t = w == 0 ? 0.0 : w - p / (3 * w);
    if (method)
      *method = RootMethod::Cardano;
  }
  return t + shift;
}

RootWork cardano_uv(double U, double V, double shift, double lead) {
  RootWork work;
  work.U = U;
  work.V = V;
  const double D = 4 * U * U * U + V * V;
  work.discriminant = -D;
  const double root = std::sqrt(std::max(0.0, D));
  // Both signs of the square root give the same sum of cube roots; pick the
  // one that does not cancel.
  work.W = std::cbrt(V >= 0 ? V + root : V - root);
  if (work.W == 0)
    work.x = shift;
  else
    work.x = shift - U / (3 * kCbrt4 * lead * work.W) +
             work.W / (6 * kCbrt2 * lead);
  return work;
}

ClosedFormResult locate_constant(i64 p0, i64 n) {
  require_index(n);
  if (p0 < 1)
    throw DomainError("constant: p0 must be >= 1");
  const i64 block = ceil_div(n, p0);
  return {block, false, static_cast<double>(n) / static_cast<double>(p0),
          RootMethod::Integer};
}

ClosedFormResult locate_linear(i64 p1, i64 p0, i64 n) {
  require_index(n);
  if (p1 < 1 || p1 + p0 < 1)
    throw DomainError("linear: requires p1 >= 1 and p1 + p0 >= 1");
  const auto dp1 = static_cast<double>(p1);
  const auto dp0 = static_cast<double>(p0);
  const double lin = 2 * dp0 + dp1;
  const double disc = 8 * static_cast<double>(n) * dp1 + lin * lin;
  const double raw = (-lin + std::sqrt(disc)) / (2 * dp1);
  return correct_ceiling(raw, RootMethod::Radical, n, [p1, p0](i64 s) {
    return linear_partial_sum(p1, p0, s);
  });
}

LinearAlternatives locate_linear_alternatives(i64 p1, i64 n) {
  require_index(n);
  if (p1 < 1)
    throw DomainError("linear: p1 must be >= 1");
  LinearAlternatives out;
  out.radical = locate_linear(p1, 0, n);

  // b_s = p1 * s is the regular array scaled by p1
  const i64 u = (n - 1) / p1 + 1;
  const double raw_u =
      (-1 + std::sqrt(8 * static_cast<double>(u) + 1)) / 2;
  out.via_scaling = correct_ceiling(raw_u, RootMethod::Radical, u, triangular);

  const i64 k = ceil_div(checked_mul(n, i64{2}), p1);
  // ceil(sqrt(k) + 1/2) - 1 == ceil(sqrt(k) - 1/2)
  const double raw_k = std::sqrt(static_cast<double>(k)) - 0.5;
  out.via_ceiling_sqrt =
      correct_ceiling(raw_k, RootMethod::Radical, n, [p1](i64 s) {
        return static_cast<i128>(p1) * triangular(s);
      });
  return out;
}

RootWork quadratic_root_work(i64 p2_, i64 p1_, i64 p0_, i64 n_, i64 scale) {
  const auto p2 = static_cast<double>(p2_);
  const auto p1 = static_cast<double>(p1_);
  const auto p0 = static_cast<double>(p0_);
  const double n = static_cast<double>(n_) * static_cast<double>(scale);
  const double U = 3 * (-3 * p1 * p1 + 12 * p0 * p2 - p2 * p2);
  const double V = 54 * (-p1 * p1 * p1 + 6 * p0 * p1 * p2 + 12 * n * p2 * p2 +
                         6 * p0 * p2 * p2 + p1 * p2 * p2);
  const double shift = -(p1 + p2) / (2 * p2);
  if (4 * U * U * U + V * V >= 0)
    return cardano_uv(U, V, shift, p2);
  RootWork work;
  work.U = U;
  work.V = V;
  work.discriminant = -(4 * U * U * U + V * V);
  work.W = std::numeric_limits<double>::quiet_NaN();
  work.x = largest_real_root(2 * p2, 3 * (p2 + p1), p2 + 3 * p1 + 6 * p0,
                             -6 * n);
  return work;
}

ClosedFormResult locate_scaled_quadratic(const ScaledPolynomial &poly, i64 n) {
  require_index(n);
  const RootWork work =
      quadratic_root_work(poly.coeff[2], poly.coeff[1], poly.coeff[0], n,
                          poly.scale);
  const RootMethod method = work.discriminant < 0 ? RootMethod::Cardano
                                                  : RootMethod::Trigonometric;
  const i128 target = checked_mul(static_cast<i128>(n), static_cast<i128>(poly.scale));
  return correct_ceiling(work.x, method, target,
                         [&poly](i64 s) { return scaled_partial_sum(poly, s); });
}

ClosedFormResult locate_quadratic(i64 p2, i64 p1, i64 p0, i64 n) {
  require_valid(Quadratic{p2, p1, p0});
  return locate_scaled_quadratic(ScaledPolynomial{1, {p0, p1, p2, 0}}, n);
}

RootWork polygonal_root_work(i64 m_, i64 n_) {
  const auto m = static_cast<double>(m_);
  const auto n = static_cast<double>(n_);
  const double U = -156 + 84 * m - 12 * m * m;
  const double V = -2592 + 1512 * m - 216 * m * m + 5184 * n - 5184 * m * n +
                   1296 * m * m * n;
  if (4 * U * U * U + V * V >= 0)
    return cardano_uv(U, V, -1 / (m - 2), m - 2);
  RootWork work;
  work.U = U;
  work.V = V;
  work.discriminant = -(4 * U * U * U + V * V);
  work.W = std::numeric_limits<double>::quiet_NaN();
  work.x = largest_real_root(2 * m - 4, 6, -(2 * m - 10), -12 * n);
  return work;
}

ClosedFormResult locate_polygonal(i64 m, i64 n) {
  require_index(n);
  if (m < 3)
    throw DomainError("polygonal: m must be >= 3");
  const RootWork work = polygonal_root_work(m, n);
  const RootMethod method = work.discriminant < 0 ? RootMethod::Cardano
                                                  : RootMethod::Trigonometric;
  const ScaledPolynomial poly = *PartitionSpec(Polygonal{m}).polynomial();
  return correct_ceiling(work.x, method, checked_mul(static_cast<i128>(n), i128{2}),
                         [&poly](i64 s) { return scaled_partial_sum(poly, s); });
}

ClosedFormResult locate_centered_polygonal(i64 m_, i64 n_) {
  require_index(n_);
  if (m_ < 1)
    throw DomainError("centered polygonal: m must be >= 1");
  const auto m = static_cast<double>(m_);
  const auto n = static_cast<double>(n_);
  const double radicand =
      108 * std::pow(6 - m, 3) * m * m * m + 26244 * m * m * m * m * n * n;
  double x;
  RootMethod method;
  if (radicand >= 0) {
    const double w = std::cbrt(162 * m * m * n + std::sqrt(radicand));
    x = -kCbrt2 * (6 - m) / w + w / (3 * kCbrt2 * m);
    method = RootMethod::Cardano;
  } else {
    x = largest_real_root(m, 0, 6 - m, -6 * n);
    method = RootMethod::Trigonometric;
  }
  const ScaledPolynomial poly = *PartitionSpec(CenteredPolygonal{m_}).polynomial();
  return correct_ceiling(x, method, checked_mul(static_cast<i128>(n_), i128{2}),
                         [&poly](i64 s) { return scaled_partial_sum(poly, s); });
}

ClosedFormResult locate_scaled_cubic(const ScaledPolynomial &poly, i64 n) {
  require_index(n);
  const i128 target = checked_mul(static_cast<i128>(n), static_cast<i128>(poly.scale));
  const i64 block = invert_monotone(
      target, [&poly](i64 s) { return scaled_partial_sum(poly, s); });
  return {block, false, static_cast<double>(block), RootMethod::Numeric};
}

ClosedFormResult locate_cubic(i64 p3, i64 p2, i64 p1, i64 p0, i64 n) {
  require_valid(Cubic{p3, p2, p1, p0});
  return locate_scaled_cubic(ScaledPolynomial{1, {p0, p1, p2, p3}}, n);
}

ClosedFormResult locate_pyramidal(i64 m, i64 n) {
  if (m < 3)
    throw DomainError("pyramidal: m must be >= 3");
  return locate_scaled_cubic(*PartitionSpec(Pyramidal{m}).polynomial(), n);
}

ClosedFormResult locate_geometric(i64 m, i64 n) {
  require_index(n);
  if (m < 2)
    throw DomainError("geometric: m must be >= 2");
  const double raw = std::log(static_cast<double>(n) + 1) /
                     std::log(static_cast<double>(m));
  const i128 target = static_cast<i128>(n) + 1;
  // compare m^L >= n + 1, i.e. B(L) + 1 >= n + 1
  return correct_ceiling(raw, RootMethod::Radical, target, [m](i64 s) {
    return s == 0 ? i128{1} : saturating_pow(m, s);
  });
}

i64 geometric_offset(i64 m, i64 n) {
  const i64 block = locate_geometric(m, n).block;
  return n - checked_pow(m, block - 1) + 1;
}

ClosedFormResult locate_powers(i64 m, i64 n) {
  require_index(n);
  if (m < 2)
    throw DomainError("powers: m must be >= 2");
  const double raw =
      std::log(static_cast<double>(n)) / std::log(static_cast<double>(m));
  return correct_ceiling(raw, RootMethod::Radical, n, [m](i64 s) {
    return s == 0 ? i128{0} : saturating_pow(m, s);
  });
}

std::optional<ClosedFormResult> closed_form_locate(const PartitionSpec &spec,
                                                   i64 n) {
  using R = std::optional<ClosedFormResult>;
  return std::visit(
      overloaded{
          [n](const Constant &f) -> R { return locate_constant(f.p0, n); },
          [n](const Linear &f) -> R { return locate_linear(f.p1, f.p0, n); },
          [n](const Quadratic &f) -> R {
            return locate_scaled_quadratic(
                ScaledPolynomial{1, {f.p0, f.p1, f.p2, 0}}, n);
          },
          [n](const Cubic &f) -> R {
            return locate_scaled_cubic(
                ScaledPolynomial{1, {f.p0, f.p1, f.p2, f.p3}}, n);
          },
          [n](const Geometric &f) -> R { return locate_geometric(f.m, n); },
          [n](const Powers &f) -> R { return locate_powers(f.m, n); },
          [n](const Polygonal &f) -> R { return locate_polygonal(f.m, n); },
          [n](const CenteredPolygonal &f) -> R {
            return locate_centered_polygonal(f.m, n);
          },
          [n](const Pyramidal &f) -> R { return locate_pyramidal(f.m, n); },
          [n](const MergedDiagonals &f) -> R {
            return f.start_first ? locate_merged_first(f.d, n).radical
                                 : locate_merged_second(f.d, n).radical;
          },
          [](const Explicit &) -> R { return std::nullopt; },
      },
      spec.family());
}

std::optional<ClosedFormLocator> prepare_closed_form(const PartitionSpec &spec) {
  if (const auto *f = std::get_if<Linear>(&spec.family())) {
    const i64 p1 = f->p1, p0 = f->p0;
    const double lin = 2 * static_cast<double>(p0) + static_cast<double>(p1);
    const double lin2 = lin * lin;
    const double eight_p1 = 8 * static_cast<double>(p1);
    const double inv = 1 / (2 * static_cast<double>(p1));
    return [=](i64 n) {
      require_index(n);
      const double raw =
          (std::sqrt(eight_p1 * static_cast<double>(n) + lin2) - lin) * inv;
      return correct_ceiling(raw, RootMethod::Radical, n, [p1, p0](i64 s) {
        return linear_partial_sum(p1, p0, s);
      });
    };
  }
  if (const auto *f = std::get_if<Geometric>(&spec.family())) {
    // powers[s] = m^s = B(s) + 1, saturated at 2^64 - 1
    std::array<std::uint64_t, 68> powers{};
    powers[0] = 1;
    for (std::size_t s = 1; s < powers.size(); ++s)
      if (__builtin_mul_overflow(powers[s - 1], static_cast<std::uint64_t>(f->m),
                                 &powers[s]))
        powers[s] = std::numeric_limits<std::uint64_t>::max();
    // log2(n+1) lies in (w-1, w] for w = bit_width(n), so w / log2(m) is
    // within 1 / log2(m) <= 1 of log_m(n+1).
    const double inv_log2_m = 1 / std::log2(static_cast<double>(f->m));
    return [=](i64 n) {
      require_index(n);
      const auto width = std::bit_width(static_cast<std::uint64_t>(n));
      const double raw = static_cast<double>(width) * inv_log2_m;
      const i128 target = static_cast<i128>(n) + 1;
      return correct_ceiling(raw, RootMethod::Integer, target, [&powers](i64 s) {
        return static_cast<i128>(powers[static_cast<std::size_t>(s)]);
      });
    };
  }
  if (spec.is_explicit())
    return std::nullopt;
  return [spec](i64 n) { return *closed_form_locate(spec, n); };
}

i64 scale_transform(const BlockLocator &base, i64 m, i64 n) {
  require_index(n);
  if (m < 1)
    throw DomainError("scale factor must be >= 1");
  return base((n - 1) / m + 1);
}

i64 divide_transform(const BlockLocator &base, i64 m, i64 n) {
  require_index(n);
  if (m < 1)
    throw DomainError("divisor must be >= 1");
  return base(checked_mul(m, n));
}

i64 union_transform(const BlockLocator &base, i64 m, i64 n) {
  require_index(n);
  if (m < 1)
    throw DomainError("union width must be >= 1");
  return (base(n) + m - 1) / m;
}

} // namespace irregular

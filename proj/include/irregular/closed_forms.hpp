#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "irregular/partition.hpp"

namespace irregular {

enum class RootMethod {
  Integer,       // exact integer arithmetic, no root taken
  Radical,       // square root or logarithm
  Cardano,       // one real root, cube-root formula
  Trigonometric, // casus irreducibilis, three-cosine form
  Numeric,       // monotone integer inversion of B
};

const char *to_string(RootMethod m);

/// Intermediates of a cube-root solution, kept for inspection.
struct RootWork {
  double U = 0;
  double V = 0;
  double W = 0; // the cube root term
  double x = 0; // candidate root
  double discriminant = 0; // -(4U^3 + V^2); negative means one real root
};

struct ClosedFormResult {
  i64 block = 0;
  bool corrected = false; // the window correction moved the raw ceiling
  double raw_root = 0;    // value before the ceiling
  RootMethod method = RootMethod::Integer;
};

// --- root-solver toolkit ---------------------------------------------------

/// Largest real root of a x^3 + b x^2 + c x + d with a != 0. Uses the cube
/// root form when there is one real root and the trigonometric form otherwise.
double largest_real_root(double a, double b, double c, double d,
                         RootMethod *method = nullptr);

/// x = shift - U / (3 2^(2/3) lead W) + W / (6 2^(1/3) lead) with
/// W = cbrt(V + sqrt(4U^3 + V^2)); requires 4U^3 + V^2 >= 0.
RootWork cardano_uv(double U, double V, double shift, double lead);

/// Window size for the ceiling correction.
inline constexpr i64 kCorrectionWindow = 2;

/// Smallest L >= 1 with sum_at(L) >= target, searched within
/// kCorrectionWindow of ceil(raw). sum_at(0) is B(0) = 0. Throws
/// PrecisionError if the window is exhausted.
template <class SumAt>
ClosedFormResult correct_ceiling(double raw, RootMethod method, i128 target,
                                 SumAt &&sum_at) {
  if (!std::isfinite(raw))
    throw PrecisionError("root is not finite");
  const double clamped = std::clamp(raw, 1.0, 4.0e18);
  auto start = static_cast<i64>(clamped); // positive, so this is the floor
  if (static_cast<double>(start) < clamped)
    ++start;
  i64 block = start;
  for (;;) {
    if (block > 1 && sum_at(block - 1) >= target)
      --block;
    else if (sum_at(block) < target)
      ++block;
    else
      break;
    if (block - start > kCorrectionWindow || start - block > kCorrectionWindow)
      throw PrecisionError("root " + std::to_string(raw) +
                           " is outside the correction window");
  }
  return {block, block != start, raw, method};
}

/// Smallest L >= 1 with sum_at(L) >= target by exponential doubling and
/// bisection; sum_at must be increasing with sum_at(0) = 0.
template <class SumAt> i64 invert_monotone(i128 target, SumAt &&sum_at) {
  i64 lo = 0; // sum_at(lo) < target
  i64 hi = 1;
  while (sum_at(hi) < target) {
    lo = hi;
    hi = checked_mul(hi, i64{2});
  }
  while (hi - lo > 1) {
    const i64 mid = lo + (hi - lo) / 2;
    if (sum_at(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

// --- per-family block numbers ----------------------------------------------

ClosedFormResult locate_constant(i64 p0, i64 n);

/// b_s = p1 s + p0, square-root form.
ClosedFormResult locate_linear(i64 p1, i64 p0, i64 n);

/// The three ways to number b_s = p1 s: the square-root form, the reduction
/// to the regular array through scaling, and ceil(sqrt(ceil(2n/p1)) + 1/2) - 1.
struct LinearAlternatives {
  ClosedFormResult radical;
  ClosedFormResult via_scaling;
  ClosedFormResult via_ceiling_sqrt;
};
LinearAlternatives locate_linear_alternatives(i64 p1, i64 n);

/// Cube-root intermediates for b_s = (p2 s^2 + p1 s + p0) / scale.
RootWork quadratic_root_work(i64 p2, i64 p1, i64 p0, i64 n, i64 scale = 1);

ClosedFormResult locate_quadratic(i64 p2, i64 p1, i64 p0, i64 n);
/// Quadratic block lengths with a common denominator.
ClosedFormResult locate_scaled_quadratic(const ScaledPolynomial &poly, i64 n);

/// Polygonal numbers ((m-2)s^2 - (m-4)s)/2, via the dedicated U, V form.
ClosedFormResult locate_polygonal(i64 m, i64 n);
RootWork polygonal_root_work(i64 m, i64 n);

/// Centered polygonal numbers m(s^2 - s)/2 + 1.
ClosedFormResult locate_centered_polygonal(i64 m, i64 n);

/// Cubic block lengths: integer inversion of the exact quartic B.
ClosedFormResult locate_cubic(i64 p3, i64 p2, i64 p1, i64 p0, i64 n);
ClosedFormResult locate_scaled_cubic(const ScaledPolynomial &poly, i64 n);
ClosedFormResult locate_pyramidal(i64 m, i64 n);

/// b_s = (m-1) m^(s-1): smallest L with m^L >= n + 1.
ClosedFormResult locate_geometric(i64 m, i64 n);
/// Offset inside the block for the geometric family: n - m^(L-1) + 1.
i64 geometric_offset(i64 m, i64 n);

/// B(s) = m^s: smallest L >= 1 with m^L >= n.
ClosedFormResult locate_powers(i64 m, i64 n);

/// Closed-form block number for any parametric spec; nullopt for explicit.
std::optional<ClosedFormResult> closed_form_locate(const PartitionSpec &spec,
                                                   i64 n);

/// Closed form with the family's parameters bound and per-family constants
/// precomputed, for repeated evaluation on one spec.
using ClosedFormLocator = std::function<ClosedFormResult(i64)>;

/// Same results as closed_form_locate; nullopt for explicit specs.
std::optional<ClosedFormLocator> prepare_closed_form(const PartitionSpec &spec);

// --- block transforms ------------------------------------------------------

using BlockLocator = std::function<i64(i64)>;

/// Block number for m * beta given the locator of beta.
i64 scale_transform(const BlockLocator &base, i64 m, i64 n);
/// Block number for beta / m (every b_s divisible by m).
i64 divide_transform(const BlockLocator &base, i64 m, i64 n);
/// Block number when each block is the union of m consecutive blocks of beta.
i64 union_transform(const BlockLocator &base, i64 m, i64 n);

} // namespace irregular

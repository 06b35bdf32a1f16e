#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irregular/checked_math.hpp"

namespace irregular {

// Parametric families of partitioning sequences. Comments give b_s, the length
// of block s (s >= 1).

struct Constant { // b_s = p0
  i64 p0;
  bool operator==(const Constant &) const = default;
};
struct Linear { // b_s = p1 s + p0
  i64 p1, p0;
  bool operator==(const Linear &) const = default;
};
struct Quadratic { // b_s = p2 s^2 + p1 s + p0
  i64 p2, p1, p0;
  bool operator==(const Quadratic &) const = default;
};
struct Cubic { // b_s = p3 s^3 + p2 s^2 + p1 s + p0
  i64 p3, p2, p1, p0;
  bool operator==(const Cubic &) const = default;
};
struct Geometric { // b_s = (m-1) m^(s-1), so B(s) = m^s - 1
  i64 m;
  bool operator==(const Geometric &) const = default;
};
struct Powers { // b_1 = m, b_s = m^s - m^(s-1), so B(s) = m^s
  i64 m;
  bool operator==(const Powers &) const = default;
};
struct Polygonal { // m-gonal numbers: ((m-2) s^2 - (m-4) s) / 2
  i64 m;
  bool operator==(const Polygonal &) const = default;
};
struct CenteredPolygonal { // m (s^2 - s) / 2 + 1
  i64 m;
  bool operator==(const CenteredPolygonal &) const = default;
};
struct Pyramidal { // s (s+1) ((m-2) s - (m-5)) / 6
  i64 m;
  bool operator==(const Pyramidal &) const = default;
};
/// d adjacent diagonals of the regular array per block. With start_first the
/// grouping begins at the first diagonal; otherwise the first diagonal is a
/// block of its own and grouping starts at the second.
struct MergedDiagonals {
  i64 d;
  bool start_first;
  bool operator==(const MergedDiagonals &) const = default;
};
/// A finite list of block lengths.
struct Explicit {
  std::vector<i64> lengths;
  bool operator==(const Explicit &) const = default;
};

using Family =
    std::variant<Constant, Linear, Quadratic, Cubic, Geometric, Powers,
                 Polygonal, CenteredPolygonal, Pyramidal, MergedDiagonals,
                 Explicit>;

/// Polynomial block length with integer coefficients over a common
/// denominator: b_s = (c0 + c1 s + c2 s^2 + c3 s^3) / scale.
struct ScaledPolynomial {
  i64 scale = 1;
  std::array<i64, 4> coeff{};
  int degree() const;
  bool operator==(const ScaledPolynomial &) const = default;
};

/// Result of checking b_s >= 1.
struct ValidationReport {
  bool ok = true;
  std::optional<i64> first_violation; // block index, when one is known
  std::optional<i64> value;           // b_s at that index
  std::string reason;
};

/// Checks parameter constraints, b_s >= 1 for s <= horizon, and the family's
/// global positivity argument (the minimum of the polynomial over s >= 1).
ValidationReport validate(const Family &family, i64 horizon);

/// A validated partitioning sequence.
class PartitionSpec {
public:
  /// Throws DomainError when the family fails validation.
  explicit PartitionSpec(Family family);

  const Family &family() const noexcept { return family_; }

  bool is_explicit() const noexcept {
    return std::holds_alternative<Explicit>(family_);
  }
  /// Number of blocks for explicit specs; nullopt for infinite families.
  std::optional<i64> block_count() const;

  /// Polynomial form for polynomial families (including the half-integer
  /// polygonal ones, stored scaled).
  std::optional<ScaledPolynomial> polynomial() const;

  bool operator==(const PartitionSpec &) const = default;

private:
  Family family_;
};

/// b_s for s >= 1. OverflowError past 64 bits; DomainError past the end of an
/// explicit list.
i64 block_length(const PartitionSpec &spec, i64 s);

/// B(s) by closed form for parametric families, by direct summation for
/// explicit lists. B(0) = 0.
i64 exact_partial_sum(const PartitionSpec &spec, i64 s);

/// Numerator of B(s) for a scaled polynomial: scale * B(s), computed exactly.
i128 scaled_partial_sum(const ScaledPolynomial &poly, i64 s);

} // namespace irregular

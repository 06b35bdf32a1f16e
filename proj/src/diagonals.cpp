#include "irregular/diagonals.hpp"

namespace irregular {

i64 diagonal_of(i64 n) {
  if (n < 1)
    throw DomainError("index must be >= 1");
  const i128 root = isqrt(static_cast<i128>(n) * 8 - 7);
  return static_cast<i64>((root - 1) / 2);
}

DiagonalPair index_to_pair(i64 n) {
  const i64 t = diagonal_of(n);
  const i128 tt = t;
  const i64 i = static_cast<i64>(n - tt * (tt + 1) / 2);
  const i64 j = static_cast<i64>((tt * tt + 3 * tt + 4) / 2 - n);
  return {i, j, t};
}

i64 pair_to_index(i64 i, i64 j) {
  if (i < 1 || j < 1)
    throw DomainError("pair components must be >= 1");
  const i128 s = static_cast<i128>(i) + j;
  return narrow(checked_add(checked_mul(s - 2, s - 1) / 2, static_cast<i128>(i)));
}

MergedDiagonalBlock locate_merged_first(i64 d, i64 n) {
  if (d < 1)
    throw DomainError("merged diagonals: d must be >= 1");
  if (n < 1)
    throw DomainError("index must be >= 1");
  MergedDiagonalBlock out;
  const double raw =
      (-1 + std::sqrt(8 * static_cast<double>(n) + 1)) / (2 * static_cast<double>(d));
  // B(s) = ds(ds+1)/2
  out.radical = correct_ceiling(raw, RootMethod::Radical, n, [d](i64 s) {
    const i128 u = static_cast<i128>(d) * s;
    return u * (u + 1) / 2;
  });
  out.via_diagonal = (diagonal_of(n) + d) / d;
  return out;
}

MergedDiagonalBlock locate_merged_second(i64 d, i64 n) {
  if (d < 2)
    throw DomainError("merged diagonals starting at the second: d must be >= 2");
  if (n < 1)
    throw DomainError("index must be >= 1");
  MergedDiagonalBlock out;
  const auto dd = static_cast<double>(d);
  const double raw =
      (2 * dd - 3 + std::sqrt(8 * static_cast<double>(n) + 1)) / (2 * dd);
  // B(0) = 0, B(s) = (d(s-1)+1)(d(s-1)+2)/2
  out.radical = correct_ceiling(raw, RootMethod::Radical, n, [d](i64 s) {
    if (s == 0)
      return i128{0};
    const i128 u = static_cast<i128>(d) * (s - 1);
    return (u + 1) * (u + 2) / 2;
  });
  out.via_diagonal = (diagonal_of(n) + d - 1) / d + 1;
  return out;
}

} // namespace irregular

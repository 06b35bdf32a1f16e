#pragma once

#include "irregular/closed_forms.hpp"

namespace irregular {

/// Cantor numbering of the regular array: index n sits on zero-based diagonal
/// t at column i, with j counting back along the diagonal (i + j = t + 2).
struct DiagonalPair {
  i64 i = 0;
  i64 j = 0;
  i64 t = 0;
  bool operator==(const DiagonalPair &) const = default;
};

/// Zero-based diagonal holding n: floor((isqrt(8n - 7) - 1) / 2).
i64 diagonal_of(i64 n);

DiagonalPair index_to_pair(i64 n);

/// n = (i+j-2)(i+j-1)/2 + i. OverflowError past 64 bits.
i64 pair_to_index(i64 i, i64 j);

/// Block number when d diagonals are merged into each block, computed twice:
/// the square-root form (ceil-corrected) and floor((t + d) / d) or
/// floor((t + d - 1) / d) + 1 from the diagonal index.
struct MergedDiagonalBlock {
  ClosedFormResult radical;
  i64 via_diagonal = 0;
};

/// Grouping starts with the first diagonal. d >= 1; d = 1 is the regular array.
MergedDiagonalBlock locate_merged_first(i64 d, i64 n);

/// The first diagonal is its own block; grouping starts at the second.
MergedDiagonalBlock locate_merged_second(i64 d, i64 n);

} // namespace irregular

#!/usr/bin/env python3
"""Writes fixtures/Annnnnn.txt b-files from the defining formulas of each
sequence as stated on its OEIS entry. Independent of the C++ library so the
fixtures act as an external oracle. Re-run with `irrseq fetch` when online to
replace them with the published b-files."""

import argparse
import math
from pathlib import Path

TERMS = 1000


def isqrt(n):
    return math.isqrt(n)


def a000012(n):  # offset 0: the all-ones sequence
    return 1


def a002024(n):  # offset 1: n appears n times; floor(sqrt(2n) + 1/2)
    return (isqrt(8 * n) + 1) // 2


def a000194(n):  # offset 0: n appears 2n times; round(sqrt(n))
    r = isqrt(n)
    return r + 1 if n - r * r > r else r


def a074279(n):  # offset 1: n appears n^2 times
    k, total = 0, 0
    while total < n:
        k += 1
        total += k * k
    return k


def a002260(n):  # offset 1: triangle T(n,k) = k, 1 <= k <= n
    t = (isqrt(8 * n) + 1) // 2
    while t * (t + 1) // 2 >= n:
        t -= 1
    return n - t * (t + 1) // 2


def a004736(n):  # offset 1: triangle T(n,k) = n - k + 1
    t = (isqrt(8 * n) + 1) // 2
    while t * (t + 1) // 2 >= n:
        t -= 1
    row = t + 1
    return row - (n - t * (t + 1) // 2) + 1


def a071797(n):  # offset 1: n - floor(sqrt(n-1))^2
    return n - isqrt(n - 1) ** 2


def a064866(n):  # offset 1: rows 1..k^2
    k = 1
    while k * (k + 1) * (2 * k + 1) // 6 < n:
        k += 1
    prev = (k - 1) * k * (2 * k - 1) // 6
    return n - prev


def a062050(n):  # offset 1: n - 2^floor(log2 n) + 1
    return n - (1 << (n.bit_length() - 1)) + 1


def a122197(n):  # offset 1: count up to k twice, k = 1, 2, 3, ...
    k, start = 1, 0
    while start + 2 * k < n:
        start += 2 * k
        k += 1
    return (n - start - 1) % k + 1


def a080883(n):  # offset 0: (floor(sqrt(n)) + 1)^2 - n
    return (isqrt(n) + 1) ** 2 - n


def a029837(n):  # offset 1: ceil(log2 n)
    return (n - 1).bit_length()


def a081604(n):  # offset 0: number of digits in base-3 representation
    if n == 0:
        return 1
    d = 0
    while n:
        n //= 3
        d += 1
    return d


def a014105(n):  # offset 0: second hexagonal numbers n(2n+1)
    return n * (2 * n + 1)


SEQUENCES = {
    "A000012": (a000012, 0),
    "A002024": (a002024, 1),
    "A000194": (a000194, 0),
    "A074279": (a074279, 1),
    "A002260": (a002260, 1),
    "A004736": (a004736, 1),
    "A071797": (a071797, 1),
    "A064866": (a064866, 1),
    "A062050": (a062050, 1),
    "A122197": (a122197, 1),
    "A080883": (a080883, 0),
    "A029837": (a029837, 1),
    "A081604": (a081604, 0),
    "A014105": (a014105, 0),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path,
                        default=Path(__file__).resolve().parent.parent / "fixtures")
    parser.add_argument("--terms", type=int, default=TERMS)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for a_number, (fn, offset) in SEQUENCES.items():
        lines = [f"# {a_number} (first {args.terms} terms, generated from the OEIS definition)"]
        lines += [f"{k} {fn(k)}" for k in range(offset, offset + args.terms)]
        (args.out / f"{a_number}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

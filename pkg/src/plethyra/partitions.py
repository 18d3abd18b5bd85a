"""Integer partitions, tableaux counts, and set-partitions of a line.

Partitions are plain tuples of weakly decreasing positive integers; ``()``
is the empty partition.  Every count is an exact Python integer.
"""

from __future__ import annotations

import functools
import math
from itertools import combinations
from typing import Iterable, NamedTuple


class MarkedPartition(NamedTuple):
    """Pair (gamma, epsilon) with epsilon singleton-free."""

    gamma: tuple
    epsilon: tuple


class ZeroExtendedPartition(NamedTuple):
    """A partition together with a number of distinguished zero parts."""

    gamma: tuple
    zero_count: int


class PaddedPartition(NamedTuple):
    """A partition ``base`` to be padded with a new first row up to ``total``."""

    base: tuple
    total: int

    @property
    def valid(self) -> bool:
        first = self.total - sum(self.base)
        return first >= (self.base[0] if self.base else 0) and first >= 0

    def resolve(self) -> tuple:
        if not self.valid:
            raise ValueError(
                f"invalid padding: {self.total} - |{self.base}| is smaller "
                f"than the first part of {self.base}"
            )
        first = self.total - sum(self.base)
        if first == 0:
            return ()
        return (first,) + self.base


def as_partition(parts: Iterable[int]) -> tuple:
    """Validate and canonicalize a partition given as any iterable."""
    lam = tuple(int(x) for x in parts)
    if any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def pad(alpha: tuple, total: int) -> tuple:
    """The partition alpha[total] = (total - |alpha|, alpha_1, ...)."""
    return PaddedPartition(alpha, total).resolve()


def conjugate(lam: tuple) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


@functools.lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n, ordered lexicographically descending."""
    if n < 0:
        return ()
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partition_count_series(n: int) -> list:
    """p(0), ..., p(n) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p


@functools.lru_cache(maxsize=None)
def _partitions_min_part(n: int, max_part: int, min_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(max_part, n), min_part - 1, -1):
        for rest in _partitions_min_part(n - first, first, min_part):
            out.append((first,) + rest)
    return tuple(out)


def partitions_no_singletons(q: int) -> tuple:
    """All partitions of q with every part at least 2; {()} when q = 0."""
    if q < 0:
        return ()
    return _partitions_min_part(q, q, 2)


@functools.lru_cache(maxsize=None)
def partitions_exact_length(n: int, length: int, cap: int | None = None) -> tuple:
    """Partitions of n with exactly ``length`` positive parts, first part <= cap."""
    if length == 0:
        return ((),) if n == 0 else ()
    if n < length:
        return ()
    top = n - length + 1 if cap is None else min(cap, n - length + 1)
    out = []
    for first in range(top, 0, -1):
        for rest in partitions_exact_length(n - first, length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def marked_partitions(b: int, r: int, cap: int | None = None) -> list:
    """All b-marked partitions of r: ell(gamma) = b, epsilon singleton-free.

    With ``cap`` given, additionally gamma_1 <= cap and epsilon_1 <= cap.
    """
    out = []
    for p in range(r + 1):
        for gamma in partitions_exact_length(p, b, cap):
            for eps in partitions_no_singletons(r - p):
                if cap is not None and eps and eps[0] > cap:
                    continue
                out.append(MarkedPartition(gamma, eps))
    return out


def marked_partitions_distinct(b: int, r: int) -> list:
    """The b-marked partitions of r whose gamma has pairwise distinct parts."""
    return [
        mp
        for mp in marked_partitions(b, r)
        if len(set(mp.gamma)) == len(mp.gamma)
    ]


def std_tableaux_count(lam: tuple) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    conj = conjugate(lam)
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            den *= row - j + conj[j] - i - 1
    return math.factorial(n) // den


def _ssyt_rows(shape, lower_bounds, budget, max_entry):
    """Yield fillings of the remaining rows, one weakly increasing row at a time.

    ``lower_bounds`` holds the strict lower bound for each cell of the next
    row, coming from the row above.
    """
    if not shape:
        if budget == 0:
            yield ()
        return
    width = shape[0]

    def rows(pos, prev, used):
        if pos == width:
            yield (), used
            return
        lo = max(prev, lower_bounds[pos] + 1)
        for v in range(lo, max_entry + 1):
            if used + v > budget:
                break
            for rest, total in rows(pos + 1, v, used + v):
                yield (v,) + rest, total

    for row, used in rows(0, 1, 0):
        for tail in _ssyt_rows(shape[1:], row, budget - used, max_entry):
            yield (row,) + tail


def ssyt_weight_sets(beta: tuple, p: int) -> int:
    """Number of semistandard beta-tableaux with entries >= 1 summing to p."""
    if p < sum(beta):
        return 0
    if not beta:
        return 1 if p == 0 else 0
    zeros = (0,) * beta[0]
    return sum(1 for _ in _ssyt_rows(beta, zeros, p, p))


@functools.lru_cache(maxsize=None)
def _cayley_count(widths: tuple, m: int, prev_top: int, prev_bot: int, remaining: int) -> int:
    """Column-by-column count of two-row SSYT with entries in {0..m}."""
    if remaining < 0:
        return 0
    if not widths:
        return 1 if remaining == 0 else 0
    two_cells = widths[0]
    total = 0
    for top in range(prev_top, m + 1):
        if two_cells:
            for bot in range(max(prev_bot, top + 1), m + 1):
                total += _cayley_count(widths[1:], m, top, bot, remaining - top - bot)
        else:
            total += _cayley_count(widths[1:], m, top, prev_bot, remaining - top)
    return total


def cayley_tableaux_count(m: int, n: int, k: int, r: int) -> int:
    """Count semistandard (n-k, k)-tableaux, entries in {0..m}, entry sum r."""
    if n - k < k:
        raise ValueError(f"need n - k >= k, got n - k = {n - k} < k = {k}")
    if r < 0:
        return 0
    widths = tuple(1 if j < k else 0 for j in range(n - k))
    return _cayley_count(widths, m, 0, 0, r)


# ---------------------------------------------------------------------------
# Set-partitions of {1, ..., q} and the coarsening lattice.


def canonical_set_partition(blocks) -> tuple:
    """Canonical form: blocks sorted internally and ordered by minima."""
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


@functools.lru_cache(maxsize=None)
def line_set_partitions(q: int) -> tuple:
    """All set-partitions of {1, ..., q} in canonical form."""
    if q == 0:
        return ((),)
    out = []
    for part in line_set_partitions(q - 1):
        out.append(canonical_set_partition(part + ((q,),)))
        for i in range(len(part)):
            blocks = list(part)
            blocks[i] = blocks[i] + (q,)
            out.append(canonical_set_partition(blocks))
    return tuple(sorted(set(out)))


def is_coarser(fine, coarse) -> bool:
    """True when every block of ``fine`` is contained in a block of ``coarse``."""
    lookup = {}
    for idx, block in enumerate(coarse):
        for v in block:
            lookup[v] = idx
    return all(len({lookup[v] for v in block}) == 1 for block in fine)


def coarsenings(part) -> list:
    """All set-partitions coarser than ``part`` (including itself)."""
    blocks = list(part)
    out = []
    for grouping in line_set_partitions(len(blocks)):
        merged = [
            tuple(sorted(v for i in group for v in blocks[i - 1]))
            for group in grouping
        ]
        out.append(canonical_set_partition(merged))
    return out


_MOBIUS_CACHE: dict = {}


def mobius(fine, coarse) -> int:
    """Moebius function of the coarsening order, by recursive inversion."""
    fine = canonical_set_partition(fine)
    coarse = canonical_set_partition(coarse)
    if not is_coarser(fine, coarse):
        raise ValueError("mobius requires comparable set-partitions")
    key = (fine, coarse)
    if key not in _MOBIUS_CACHE:
        if fine == coarse:
            _MOBIUS_CACHE[key] = 1
        else:
            acc = 0
            for mid in coarsenings(fine):
                if mid != coarse and is_coarser(mid, coarse):
                    acc += mobius(fine, mid)
            _MOBIUS_CACHE[key] = -acc
    return _MOBIUS_CACHE[key]


# ---------------------------------------------------------------------------
# Generating function for marked partitions.


def stable_two_row_gf(b: int, n: int) -> list:
    """Coefficients 0..n of the b-marked-partition generating function.

    This is the series for (partitions with exactly b parts) times
    (partitions with no singleton parts).  For b >= 1 it agrees with
    z^b / ((1-z^2)...(1-z^b)) * P(z); at b = 0 the (1-z) factor of the
    singleton-free series survives, so the series is (1-z) P(z).
    """
    p = partition_count_series(n)
    if b == 0:
        return [p[i] - (p[i - 1] if i else 0) for i in range(n + 1)]
    series = [0] * (n + 1)
    for i in range(b, n + 1):
        series[i] = p[i - b]
    for j in range(2, b + 1):
        for i in range(j, n + 1):
            series[i] += series[i - j]
    return series


def bell_number(q: int) -> int:
    """Number of set-partitions of a q-element set."""
    row = [1]
    for _ in range(q):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]

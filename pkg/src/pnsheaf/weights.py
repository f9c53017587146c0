"""Dominant-weight combinatorics for GL(N).

Dimensions via the Weyl product formula, Littlewood-Richardson products by
direct enumeration of LR skew tableaux, and the shifted sort-and-count
reduction used by the cohomology engine.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError


@dataclass(frozen=True)
class Weight:
    """Weakly decreasing integer vector; its length is the ambient size N."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        for a, b in zip(self.entries, self.entries[1:]):
            if a < b:
                raise InputError(f"weight {self.entries} is not weakly decreasing")

    @property
    def length(self) -> int:
        return len(self.entries)

    def size(self) -> int:
        """Sum of the entries (the number of boxes when nonnegative)."""
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class Degenerate:
    """Sort-and-count hit a repeated entry: every cohomology group vanishes."""

    entries: tuple[int, ...]


@dataclass(frozen=True)
class LRExpansion:
    """Multiplicity-tagged terms of a Littlewood-Richardson product."""

    terms: tuple[tuple[Weight, int], ...]

    def multiplicity(self, w: Weight) -> int:
        for term, mult in self.terms:
            if term == w:
                return mult
        return 0


def weyl_dim(mu: Weight | tuple[int, ...], n_amb: int) -> int:
    """Dimension of the irreducible GL(n_amb) module of highest weight mu.

    Weyl's formula: prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
    """
    entries = tuple(mu.entries if isinstance(mu, Weight) else mu)
    if len(entries) != n_amb:
        raise InputError(f"weight {entries} has length {len(entries)}, ambient is {n_amb}")
    return _weyl_dim_cached(entries)


@lru_cache(maxsize=None)
def _weyl_dim_cached(entries: tuple[int, ...]) -> int:
    for a, b in zip(entries, entries[1:]):
        if a < b:
            raise InputError(f"weight {entries} is not weakly decreasing")
    num = 1
    den = 1
    n_amb = len(entries)
    for i in range(n_amb):
        for j in range(i + 1, n_amb):
            num *= entries[i] - entries[j] + j - i
            den *= j - i
    if num % den:
        raise InputError(f"Weyl formula produced a non-integer for {entries}")
    return num // den


def lr_product(lam: Weight, mu: Weight) -> LRExpansion:
    """Expand the product of two Schur functors inside GL(N), N = len(lam).

    Both weights must be nonnegative and of equal length; terms with more
    than N rows are dropped (they vanish for rank-N bundles).  Terms come
    back sorted lexicographically descending.
    """
    if lam.length != mu.length:
        raise InputError(f"length mismatch: {lam} vs {mu}")
    if (lam.entries and lam.entries[-1] < 0) or (mu.entries and mu.entries[-1] < 0):
        raise InputError("lr_product needs nonnegative weights; absorb twists first")
    raw = _lr_terms(lam.entries, mu.entries)
    return LRExpansion(tuple((Weight(entries), mult) for entries, mult in raw))


@lru_cache(maxsize=None)
def _lr_terms(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    n_rows = len(lam)
    sizes = [m for m in mu if m > 0]
    found: Counter = Counter()
    if not sizes:
        found[lam] += 1
    else:
        # Grow lam one horizontal strip per label.  strips[t][r] counts the
        # label-t cells placed in row r; the lattice-word condition is imposed
        # pairwise against the previous strip as rows are chosen.
        def place(shape: tuple[int, ...], label: int, prev_strip: tuple[int, ...]):
            size = sizes[label]

            def rows(r: int, left: int, cur_shape: list[int], strip: list[int],
                     cum_cur: int, cum_prev: int):
                if r == n_rows:
                    if left == 0:
                        nxt = tuple(cur_shape)
                        if label + 1 == len(sizes):
                            found[nxt] += 1
                        else:
                            place(nxt, label + 1, tuple(strip))
                    return
                # horizontal strip: new row r may not reach under row r-1's old cells
                cap = left if r == 0 else min(left, shape[r - 1] - shape[r])
                for a in range(cap + 1):
                    # lattice word: label-t count through row r stays <= label-(t-1)
                    # count through row r-1 (first strip is unconstrained)
                    if label > 0 and cum_cur + a > cum_prev:
                        break
                    cur_shape[r] = shape[r] + a
                    strip[r] = a
                    rows(r + 1, left - a, cur_shape, strip,
                         cum_cur + a, cum_prev + (prev_strip[r] if label > 0 else 0))
                cur_shape[r] = shape[r]
                strip[r] = 0

            rows(0, size, list(shape), [0] * n_rows, 0, 0)

        place(lam, 0, tuple([0] * n_rows))
    ordered = sorted(found.items(), key=lambda kv: kv[0], reverse=True)
    return tuple(ordered)


def dotted_weyl_reduce(w: tuple[int, ...] | Weight, rho: tuple[int, ...]):
    """Sort w + rho strictly decreasing, counting the swaps.

    Returns (inversions, Weight(sorted - rho)), or a Degenerate carrying
    w + rho when that vector has a repeated entry.
    """
    entries = tuple(w.entries if isinstance(w, Weight) else w)
    if len(entries) != len(rho):
        raise InputError(f"length mismatch: {entries} vs rho {rho}")
    shifted = tuple(a + b for a, b in zip(entries, rho))
    if len(set(shifted)) < len(shifted):
        return Degenerate(shifted)
    inversions = 0
    for i in range(len(shifted)):
        for j in range(i + 1, len(shifted)):
            if shifted[i] < shifted[j]:
                inversions += 1
    ordered = sorted(shifted, reverse=True)
    reduced = tuple(a - b for a, b in zip(ordered, rho))
    return inversions, Weight(reduced)


def rho_weight(n_amb: int) -> tuple[int, ...]:
    """The staircase (N-1, N-2, ..., 0) used by the dotted Weyl action."""
    return tuple(range(n_amb - 1, -1, -1))


def partitions_fitting(length: int, bound: int):
    """All weakly decreasing tuples of the given length with entries in [0, bound]."""

    def go(pos: int, top: int):
        if pos == length:
            yield ()
            return
        for v in range(top, -1, -1):
            for rest in go(pos + 1, v):
                yield (v,) + rest

    yield from go(0, bound)


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 whenever b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)

"""Flag f/h-vectors of graded posets and f/h/gamma-vectors of complexes."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from math import comb

import numpy as np

from .errors import LengthMismatchError, NotSymmetricError
from .poset import GradedPoset

__all__ = [
    "FlagVector",
    "all_subsets",
    "flag_f",
    "flag_h",
    "flag_f_from_h",
    "count_maximal_chains",
    "h_vector",
    "gamma_vector",
    "sd_h_from_flag_h",
    "gamma_from_delta",
]


def all_subsets(n: int):
    """Subsets of ``{1..n}`` as frozensets, ordered by (size, lex)."""
    ground = range(1, n + 1)
    for r in range(n + 1):
        for c in combinations(ground, r):
            yield frozenset(c)


def subset_key(s):
    return (len(s), sorted(s))


class FlagVector:
    """Integer values indexed by the subsets of ``[n]``."""

    def __init__(self, n: int, values):
        self.n = n
        self.values = {frozenset(k): int(v) for k, v in dict(values).items()}
        for s in self.values:
            if not s <= set(range(1, n + 1)):
                raise ValueError(f"{sorted(s)} is not a subset of [{n}]")

    def __getitem__(self, s) -> int:
        return self.values.get(frozenset(s), 0)

    def __eq__(self, other):
        if not isinstance(other, FlagVector):
            return NotImplemented
        return self.n == other.n and all(
            self[s] == other[s] for s in all_subsets(self.n))

    def __repr__(self):
        body = ", ".join(f"{_fmt_set(s)}: {v}" for s, v in self.items())
        return f"FlagVector(n={self.n}, {{{body}}})"

    def items(self):
        return [(s, self[s]) for s in all_subsets(self.n)]

    def total(self) -> int:
        return sum(self.values.values())


def _fmt_set(s):
    return ",".join(map(str, sorted(s))) if s else "empty"


def _level_matrices(p: GradedPoset, dtype):
    """Comparability matrices ``M[i][j]`` between rank levels ``i < j``."""
    levels = p.levels
    index = [{x: k for k, x in enumerate(lev)} for lev in levels]
    top = len(levels) - 1
    mats = {(i, j): np.zeros((len(levels[i]), len(levels[j])), dtype=dtype)
            for j in range(1, top + 1) for i in range(j)}
    for j in range(1, top + 1):
        for col, y in enumerate(levels[j]):
            for x in p.down_sets[y]:
                i = p.rank[x]
                if i < j:
                    mats[i, j][index[i][x], col] = 1
    return mats


def count_maximal_chains(p: GradedPoset) -> int:
    counts = {p.bottom: 1}
    for lev in p.levels[1:]:
        for x in lev:
            counts[x] = sum(counts[y] for y in p.lower_covers[x])
    return counts[p.top]


def flag_f(p: GradedPoset, jobs: int = 1) -> FlagVector:
    """Count chains of ``p`` by their rank set.

    Chains are counted level by level as products of comparability matrices;
    subsets sharing a prefix reuse the partial product.  With ``jobs > 1``
    the work is split by the smallest rank in the set.
    """
    n = p.n
    # every S-flag extends to a maximal chain, so this bounds all counts
    dtype = np.int64 if count_maximal_chains(p) < 2 ** 62 else object
    mats = _level_matrices(p, dtype)
    top = n + 1
    values = {frozenset(): 1}

    def walk(first):
        out = {}
        start = mats[0, first].sum(axis=0)
        stack = [((first,), first, start)]
        while stack:
            ranks, last, vec = stack.pop()
            out[frozenset(ranks)] = int((vec @ mats[last, top]).sum())
            for nxt in range(last + 1, top):
                stack.append((ranks + (nxt,), nxt, vec @ mats[last, nxt]))
        return out

    firsts = range(1, top)
    if jobs > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(walk, firsts))
    else:
        parts = [walk(r) for r in firsts]
    for part in parts:
        values.update(part)
    return FlagVector(n, values)


def flag_h(f: FlagVector) -> FlagVector:
    """``h_S = sum_{T <= S} (-1)^{|S-T|} f_T``."""
    values = {}
    for s in all_subsets(f.n):
        members = sorted(s)
        total = 0
        for r in range(len(members) + 1):
            sign = (-1) ** (len(members) - r)
            for t in combinations(members, r):
                total += sign * f[t]
        values[s] = total
    return FlagVector(f.n, values)


def flag_f_from_h(h: FlagVector) -> FlagVector:
    """Inverse of :func:`flag_h`: ``f_S = sum_{T <= S} h_T``."""
    values = {}
    for s in all_subsets(h.n):
        members = sorted(s)
        values[s] = sum(h[t] for r in range(len(members) + 1)
                        for t in combinations(members, r))
    return FlagVector(h.n, values)


def h_vector(f, n: int | None = None) -> list:
    """h-vector from ``f = (f_{-1}, ..., f_{n-1})``.

    Expands ``sum_i f_{i-1} (x-1)^{n-i}`` and reads off the coefficient of
    ``x^{n-k}`` as ``h_k``.
    """
    f = [int(v) for v in f]
    if n is None:
        n = len(f) - 1
    if len(f) != n + 1:
        raise LengthMismatchError(f"expected {n + 1} entries, got {len(f)}")
    return [sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
            for k in range(n + 1)]


def gamma_vector(h) -> list:
    """Coordinates of a symmetric h-vector in the basis ``x^i (1+x)^{n-2i}``.

    Negative entries are returned as is.
    """
    h = [int(v) for v in h]
    n = len(h) - 1
    if h != h[::-1]:
        raise NotSymmetricError(f"h = {h} is not palindromic")
    gamma = []
    for i in range(n // 2 + 1):
        gamma.append(h[i] - sum(g * comb(n - 2 * j, i - j) for j, g in enumerate(gamma)))
    return gamma


def sd_h_from_flag_h(fh: FlagVector) -> list:
    """h-vector of the order complex: ``h_i = sum_{|S| = i} h_S``."""
    out = [0] * (fh.n + 1)
    for s, v in fh.items():
        out[len(s)] += v
    return out


def gamma_from_delta(delta) -> list:
    return [(2 ** i) * int(d) for i, d in enumerate(delta)]

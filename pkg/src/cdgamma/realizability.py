"""Obstructions to d-polynomials and searches for colored witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .colored import ColoredComplex, ffk_compress, is_k_ffk
from .errors import BadShapeError, BudgetExceededError
from .poset import SimplicialComplex
from .words import AlphaVector, WordPolynomial, specialize_c1

__all__ = [
    "pair_inequality_check",
    "Rank5Report",
    "rank5_screen",
    "conjecture_search",
    "DeltaFFKReport",
    "delta_ffk_report",
]


def pair_inequality_check(alpha: AlphaVector) -> list:
    """Pairs ``(i, j)`` with ``alpha_i * alpha_j < alpha_{i,j}``.

    Each violation is ``(i, j, alpha_i * alpha_j, alpha_{i,j})``.
    """
    out = []
    for i in range(1, alpha.n):
        for j in range(i + 1, alpha.n):
            lhs = alpha[{i}] * alpha[{j}]
            rhs = alpha[{i, j}]
            if lhs < rhs:
                out.append((i, j, lhs, rhs))
    return out


@dataclass(frozen=True)
class Rank5Report:
    """Outcome of screening ``1 + delta_1 d + delta_2 d^2`` in rank 5.

    An empty survivor list proves that no rank-5 Eulerian sphere has this
    d-polynomial; survivors only mean the screen was passed.
    """

    delta: tuple
    survivors: tuple

    @property
    def ruled_out(self) -> bool:
        return not self.survivors

    def lines(self) -> list:
        if self.ruled_out:
            return ["RULED_OUT"]
        return [f"FEASIBLE alpha={a1},{a2},{a3}" for a1, a2, a3 in self.survivors]


def rank5_screen(delta) -> Rank5Report:
    delta = tuple(int(v) for v in delta)
    if len(delta) != 3 or delta[0] != 1 or min(delta) < 0:
        raise BadShapeError(f"expected (1, d1, d2) with d1, d2 >= 0, got {delta}")
    _, d1, d2 = delta
    survivors = []
    for a1 in range(d1 + 1):
        for a2 in range(d1 - a1 + 1):
            a3 = d1 - a1 - a2
            if a1 * a3 < d2:
                continue
            if a2 == 0 and a1 * a3 != d2:
                continue
            survivors.append((a1, a2, a3))
    return Rank5Report(delta, tuple(survivors))


def conjecture_search(alpha: AlphaVector, budget: int = 100_000):
    """Find an (n-1)-colored complex whose color-set flag f-vector is ``alpha``.

    Color ``i`` gets exactly ``alpha_{i}`` vertices; larger color sets are
    filled level by level with backtracking.  Returns None when the search
    space is exhausted without a witness; raises
    :class:`~cdgamma.errors.BudgetExceededError` if ``budget`` nodes are
    used first.
    """
    k = max(alpha.n - 1, 0)
    if alpha[()] != 1 or any(v < 0 for _, v in alpha.items()):
        return None
    verts = {i: [(i, j) for j in range(alpha[{i}])] for i in range(1, k + 1)}
    colors = {v: i for i, vs in verts.items() for v in vs}
    targets = [(tuple(sorted(s)), v) for s, v in alpha.items() if len(s) >= 2]
    targets.sort(key=lambda t: (len(t[0]), t[0]))
    steps = [0]

    def candidates(colorset, chosen):
        pools = [verts[c] for c in colorset]
        out = []

        def rec(idx, acc):
            if idx == len(pools):
                face = frozenset(acc)
                if all(face - {v} in chosen for v in face):
                    out.append(face)
                return
            for v in pools[idx]:
                rec(idx + 1, acc + [v])

        rec(0, [])
        return out

    def search(t, chosen):
        if t == len(targets):
            return chosen
        colorset, want = targets[t]
        cands = candidates(colorset, chosen)
        if len(cands) < want:
            return None
        for pick in combinations(cands, want):
            steps[0] += 1
            if steps[0] > budget:
                raise BudgetExceededError(f"more than {budget} search nodes")
            found = search(t + 1, chosen | set(pick))
            if found is not None:
                return found
        return None

    start = {frozenset()} | {frozenset({v}) for v in colors}
    found = search(0, start)
    if found is None:
        return None
    return ColoredComplex(SimplicialComplex(frozenset(found)), colors, k)


@dataclass(frozen=True)
class DeltaFFKReport:
    delta: tuple
    k: int
    ok: bool
    witness: ColoredComplex | None = field(default=None, compare=False)


def delta_ffk_report(phi: WordPolynomial) -> DeltaFFKReport:
    """Check that ``Phi(1, d)`` is the f-vector of a ``floor(n/2)``-colored complex."""
    n = phi.degree
    delta = specialize_c1(phi)
    k = n // 2
    ok = is_k_ffk(delta, k)
    witness = ffk_compress(delta, k).to_colored_complex() if ok else None
    return DeltaFFKReport(tuple(delta), k, ok, witness)

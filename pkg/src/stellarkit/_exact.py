"""Exact rational linear algebra for small cones (Fractions throughout)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = Sequence[int]


def rank(vectors: Sequence[Vector]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    r = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c] / rows[r][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def in_cone(target: Vector, generators: Sequence[Vector]) -> bool:
    """Whether ``target`` is a nonnegative combination of ``generators``.

    Phase I of the simplex method on ``A λ = target, λ >= 0`` with Bland's rule,
    so it terminates and is exact.
    """
    dim = len(target)
    if all(x == 0 for x in target):
        return True
    if not generators:
        return False
    n = len(generators)
    # tableau rows: [A | I_artificial | b], with b made nonnegative
    tab = []
    for r in range(dim):
        sign = -1 if target[r] < 0 else 1
        row = [Fraction(sign * g[r]) for g in generators]
        row += [Fraction(1 if k == r else 0) for k in range(dim)]
        row.append(Fraction(sign * target[r]))
        tab.append(row)
    basis = [n + r for r in range(dim)]
    width = n + dim
    # reduced costs for minimizing the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for row in tab:
        for c in range(n):
            cost[c] -= row[c]
        cost[-1] -= row[-1]
    while True:
        enter = next((c for c in range(width) if cost[c] < 0), None)
        if enter is None:
            break
        ratios = [(tab[r][-1] / tab[r][enter], basis[r], r)
                  for r in range(dim) if tab[r][enter] > 0]
        if not ratios:
            break  # unbounded objective cannot happen in phase I
        _, _, leave = min(ratios)
        pivot = tab[leave][enter]
        tab[leave] = [x / pivot for x in tab[leave]]
        for r in range(dim):
            if r != leave and tab[r][enter] != 0:
                f = tab[r][enter]
                tab[r] = [a - f * b for a, b in zip(tab[r], tab[leave])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[-1] == 0

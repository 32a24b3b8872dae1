"""Graded Betti tables and the Kustin–Miller complex construction.

Only the shapes of resolutions are tracked: a table maps
``(homological index i, internal degree j)`` to the rank of ``R(-j)`` in
``F_i``.  Differentials are never built.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from .complex_core import IntPolynomial
from .errors import FormatError, LengthMismatch, OutOfRange


@dataclass(frozen=True)
class BettiTable:
    length: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), b in sorted(self.entries.items()):
            if b < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if b:
                if not 0 <= i <= self.length:
                    raise ValueError(f"entry {(i, j)} outside length {self.length}")
                clean[(int(i), int(j))] = int(b)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_entries(cls, entries: Mapping[tuple[int, int], int]) -> "BettiTable":
        """Table whose length is the largest homological index present."""
        length = max((i for (i, _), b in entries.items() if b), default=0)
        return cls(length, entries)

    def __eq__(self, other):
        return (isinstance(other, BettiTable) and self.length == other.length
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.length, tuple(sorted(self.entries.items()))))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def row(self, i: int) -> dict[int, int]:
        """Internal degree -> multiplicity in homological position ``i``."""
        return {j: b for (ii, j), b in self.entries.items() if ii == i}

    def total(self, i: int) -> int:
        return sum(self.row(i).values())

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.length + 1)]

    def min_degrees(self) -> list[int | None]:
        return [min(self.row(i), default=None) for i in range(self.length + 1)]

    def is_strictly_increasing(self) -> bool:
        degs = self.min_degrees()
        return None not in degs and all(a < b for a, b in zip(degs, degs[1:]))

    def to_dict(self) -> dict:
        return {"length": self.length,
                "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        try:
            return cls(int(data["length"]),
                       {(int(i), int(j)): int(b) for i, j, b in data["entries"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad Betti table JSON: {exc}") from None

    def to_text(self) -> str:
        """Betti diagram: column ``i``, row ``j - i``, zeros shown as ``.``."""
        if not self.entries:
            return "total:"
        rows = sorted({j - i for i, j in self.entries})
        cols = range(self.length + 1)
        cells = {(j - i, i): str(b) for (i, j), b in self.entries.items()}
        totals = [str(self.total(i)) for i in cols]
        width = max(len(c) for c in list(cells.values()) + totals + [str(self.length)])
        label_w = max(len("total:"), max(len(f"{r}:") for r in rows))
        lines = [" " * label_w + " " + " ".join(f"{i:>{width}}" for i in cols),
                 f"{'total:':>{label_w}} " + " ".join(f"{t:>{width}}" for t in totals)]
        for r in range(rows[0], rows[-1] + 1):
            vals = [cells.get((r, i), ".") for i in cols]
            lines.append(f"{str(r) + ':':>{label_w}} " + " ".join(f"{v:>{width}}" for v in vals))
        return "\n".join(lines)


def koszul_table(p: int, q: int) -> BettiTable:
    """Koszul complex on a regular sequence of ``p - 1`` linear forms and one form of degree ``q``."""
    if p < 1 or q < 1:
        raise OutOfRange("koszul_table needs p >= 1 and q >= 1")
    entries: dict[tuple[int, int], int] = {(0, 0): 1, (p, p + q - 1): 1}
    for i in range(1, p):
        for j, b in ((i, math.comb(p - 1, i)), (q + i - 1, math.comb(p - 1, p - i))):
            entries[(i, j)] = entries.get((i, j), 0) + b
    return BettiTable(p, entries)


def shift_table(table: BettiTable, s: int) -> BettiTable:
    """Twist by ``-s``: every internal degree goes up by ``s``."""
    return BettiTable(table.length, {(i, j + s): b for (i, j), b in table.entries.items()})


def _add_row(out: dict, table: BettiTable, src: int, dst: int, s: int) -> None:
    for j, b in table.row(src).items():
        out[(dst, j + s)] = out.get((dst, j + s), 0) + b


def km_combine(a: BettiTable, b: BettiTable, s: int) -> BettiTable:
    """Shape of the Kustin–Miller complex built from resolutions of R/J and R/I.

    ``a`` resolves ``R/J`` (length g), ``b`` resolves ``R/I`` (length g - 1) and
    ``s = k1 - k2 >= 1`` is the degree of the unprojection variable.  Summands
    are added without cancellation, so the result can be non-minimal.
    """
    if s < 1:
        raise OutOfRange("KM shift must be positive")
    g = a.length
    if g < 2:
        raise LengthMismatch("the R/J resolution must have length at least 2")
    if b.length != g - 1:
        raise LengthMismatch(f"R/I resolution has length {b.length}, expected {g - 1}")
    out: dict[tuple[int, int], int] = {}
    _add_row(out, b, 0, 0, 0)
    if g == 2:
        _add_row(out, a, 1, 1, s)
        _add_row(out, b, 1, 2, s)
        return BettiTable(2, out)
    _add_row(out, b, 1, 1, 0)
    _add_row(out, a, 1, 1, s)
    for i in range(2, g - 1):
        _add_row(out, b, i, i, 0)
        _add_row(out, a, i, i, s)
        _add_row(out, b, i - 1, i, s)
    _add_row(out, a, g - 1, g - 1, s)
    _add_row(out, b, g - 2, g - 1, s)
    _add_row(out, b, g - 1, g, s)
    return BettiTable(g, out)


def theta(d: int, m: int, i: int) -> int:
    """``i * C(m - d, i + 1)``, zero at ``i = 0`` and ``i = m - d``."""
    if d < 2 or m <= d or not 0 <= i <= m - d:
        raise OutOfRange(f"theta({d}, {m}, {i}) outside d >= 2, m > d, 0 <= i <= m - d")
    if i == 0 or i == m - d:
        return 0
    return i * math.comb(m - d, i + 1)


def _check_stacked_args(d: int, m: int) -> None:
    if d < 2 or m < d + 2:
        raise OutOfRange("stacked tables need d >= 2 and m >= d + 2")


def stacked_betti_closed(d: int, m: int) -> BettiTable:
    """Closed-form Betti table of a stacked d-polytope boundary on m vertices."""
    _check_stacked_args(d, m)
    g = m - d
    entries: dict[tuple[int, int], int] = {(0, 0): 1, (g, m): 1}
    for i in range(1, g):
        lo, hi = theta(d, m, i), theta(d, m, g - i)
        if d == 2:
            entries[(i, i + 1)] = lo + hi
        else:
            entries[(i, i + 1)] = lo
            entries[(i, d + i - 1)] = hi
    return BettiTable(g, entries)


def complete_intersection_table(degrees: list[int]) -> BettiTable:
    """Betti table of a complete intersection with generators of the given degrees."""
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for deg in degrees:
        nxt: dict[tuple[int, int], int] = {}
        for (i, j), b in entries.items():
            nxt[(i, j)] = nxt.get((i, j), 0) + b
            nxt[(i + 1, j + deg)] = nxt.get((i + 1, j + deg), 0) + b
        entries = nxt
    return BettiTable(len(degrees), entries)


def stacked_betti_recursive(d: int, m: int) -> BettiTable:
    """Stacked Betti table from the (2, d) complete intersection by iterated KM steps.

    Each step adds a vertex by subdividing a facet σ.  Then ``(J_σ, z)`` is
    generated by the ``m - d`` vertices off σ and z of degree ``d - 1``, a
    regular sequence, so its resolution is ``koszul_table(m - d + 1, d - 1)``.
    The new variable has degree 1.  Killing the regular element z does not
    change the table.
    """
    _check_stacked_args(d, m)
    table = complete_intersection_table([2, d])
    for cur in range(d + 2, m):
        table = km_combine(koszul_table(cur - d + 1, d - 1), table, 1)
    return table


def hilbert_numerator(table: BettiTable) -> IntPolynomial:
    """``sum (-1)^i b_ij t^j``: numerator of the Hilbert series over the ambient ring."""
    coeffs: dict[int, int] = {}
    for (i, j), b in table.entries.items():
        coeffs[j] = coeffs.get(j, 0) + (-1) ** i * b
    top = max(coeffs, default=-1)
    return IntPolynomial(tuple(coeffs.get(j, 0) for j in range(top + 1)))

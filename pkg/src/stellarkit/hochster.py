"""Graded Betti numbers of face rings by Hochster's formula.

``b_{i,j}(k[Δ]) = sum over vertex sets W with |W| = j of dim H̃_{j-i-1}(Δ_W; k)``.
This is brute force over all ``2^m`` vertex subsets and serves as ground truth
for the Kustin–Miller tables.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .complex_core import SimplicialComplex, induced_subcomplex
from .errors import TooManyVertices, VoidComplex
from .homology import GF2, PrimeField, reduced_homology
from .resolutions import BettiTable

MAX_ORACLE_VERTICES = 24

__all__ = ["betti_oracle", "induced_subcomplex", "worker_count"]


def worker_count() -> int:
    """Process count from ``STELLARKIT_THREADS``; 0 or unset means serial."""
    try:
        return max(0, int(os.environ.get("STELLARKIT_THREADS", "0")))
    except ValueError:
        return 0


def _contributions(delta: SimplicialComplex, subsets: list[int], p: int) -> dict:
    field = PrimeField(p)
    out: dict[tuple[int, int], int] = {}
    for w in subsets:
        j = w.bit_count()
        profile = reduced_homology(induced_subcomplex(delta, w), field)
        for idx, h in enumerate(profile.dims):
            if h:
                i = j - idx  # dims[idx] is H̃_{idx-1}, and idx - 1 = j - i - 1
                out[(i, j)] = out.get((i, j), 0) + h
    return out


def betti_oracle(delta: SimplicialComplex, k: PrimeField = GF2) -> BettiTable:
    """Betti table of ``k[Δ]`` over the polynomial ring on the vertices of Δ.

    The empty subset contributes H̃_{-1}({∅}) = k, which is ``b_{0,0} = 1``.
    """
    if delta.is_void:
        raise VoidComplex("oracle needs a non-void complex")
    if delta.m > MAX_ORACLE_VERTICES:
        raise TooManyVertices(f"{delta.m} vertices exceeds the oracle cap {MAX_ORACLE_VERTICES}")
    verts = delta.vertices
    subsets = []
    for code in range(1 << len(verts)):
        w = 0
        for pos in range(len(verts)):
            if code >> pos & 1:
                w |= 1 << (verts[pos] - 1)
        subsets.append(w)
    workers = worker_count()
    if workers > 1 and len(subsets) > 512:
        chunks = [subsets[n::workers] for n in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_contributions, [delta] * workers, chunks, [k.p] * workers))
    else:
        parts = [_contributions(delta, subsets, k.p)]
    entries: dict[tuple[int, int], int] = {}
    for part in parts:
        for key, val in part.items():
            entries[key] = entries.get(key, 0) + val
    assert entries.get((0, 0)) == 1, "empty subset must contribute b_00 = 1"
    return BettiTable.from_entries(entries)


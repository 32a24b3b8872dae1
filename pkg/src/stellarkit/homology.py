"""Reduced simplicial homology over prime fields and the Gorenstein* test."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex_core import SimplicialComplex, face_key, link, members
from .errors import OutOfRange, VoidComplex


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 2

    def __post_init__(self):
        if not (2 <= self.p < 2**31 and _is_prime(self.p)):
            raise OutOfRange(f"{self.p} is not a prime below 2**31")


GF2 = PrimeField(2)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by dense Gaussian elimination."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1:, c])[0] + rank + 1
        if below.size:
            factors = a[below, c][:, None]
            a[below] = (a[below] - factors * a[rank]) % p
        rank += 1
    return rank


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[i + 1]`` is dim H̃_i for ``i = -1 .. dim Δ``."""

    dims: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        idx = degree + 1
        return self.dims[idx] if 0 <= idx < len(self.dims) else 0

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 2

    def is_sphere_like(self) -> bool:
        """One copy of k in the top degree and nothing elsewhere."""
        return self.dims[-1] == 1 and not any(self.dims[:-1])

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i - 1) * d for i, d in enumerate(self.dims))


def _faces_by_size(delta: SimplicialComplex) -> list[list[int]]:
    faces = delta.face_masks()
    top = max(f.bit_count() for f in delta.facet_masks)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for f in faces:
        by_size[f.bit_count()].append(f)
    return by_size


def boundary_matrix(lower: list[int], upper: list[int]) -> np.ndarray:
    """Signed incidence matrix from faces of size k to faces of size k-1."""
    index = {f: i for i, f in enumerate(lower)}
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, face in enumerate(upper):
        for pos, v in enumerate(members(face)):
            mat[index[face & ~(1 << (v - 1))], j] = -1 if pos % 2 else 1
    return mat


def reduced_homology(delta: SimplicialComplex, k: PrimeField = GF2) -> HomologyProfile:
    """Betti numbers of the augmented chain complex over GF(p)."""
    if delta.is_void:
        raise VoidComplex("homology of the void complex is not defined here")
    by_size = _faces_by_size(delta)
    ranks = [0] * (len(by_size) + 1)
    for size in range(1, len(by_size)):
        ranks[size] = rank_mod_p(boundary_matrix(by_size[size - 1], by_size[size]), k.p)
    dims = tuple(len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(len(by_size)))
    return HomologyProfile(dims)


@dataclass(frozen=True)
class GorensteinResult:
    ok: bool
    witness: tuple[int, ...] | None = None
    profile: HomologyProfile | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_gorenstein_star(delta: SimplicialComplex, k: PrimeField = GF2) -> GorensteinResult:
    """Check that every link, including Δ itself, has the homology of a sphere.

    Faces are visited in canonical order, so the witness of a failure is the
    smallest violating face.  The link of a facet is ``{∅}``, whose only
    homology is H̃_{-1} = k; it therefore passes.
    """
    if delta.is_void:
        raise VoidComplex("Gorenstein* test needs a non-void complex")
    for face in sorted(delta.face_masks(), key=face_key):
        profile = reduced_homology(link(delta, face), k)
        if not profile.is_sphere_like():
            return GorensteinResult(False, members(face), profile)
    return GorensteinResult(True)

"""The rational polyhedral fan attached to a stellar unprojection.

For σ = {1..d} (after relabeling) the lattice has basis
``e_x1..e_xm, e_z1..e_z(d-1)`` and ``e_a = (e_x1 + ... + e_xd) - (e_z1 + ... + e_z(d-1))``.
Each facet τ of Δ gives a maximal cone spanned by the ``e_x`` of its vertices
and all ``e_z``; when τ contains σ, ``e_a`` is added as well.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from . import _exact
from .complex_core import SimplicialComplex, members, to_mask
from .errors import FaceTooSmall, FormatError, NotAFace, OutOfRange

MAX_RANK = 16


@dataclass(frozen=True)
class Cone:
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(sorted({tuple(int(x) for x in g) for g in self.generators}))
        if any(not any(g) for g in gens):
            raise ValueError("cone generators must be nonzero")
        if len({len(g) for g in gens}) > 1:
            raise ValueError("cone generators have mixed lengths")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return _exact.rank(self.generators)

    def is_simplicial(self) -> bool:
        return self.dim == len(self.generators)

    def contains(self, v) -> bool:
        return _exact.in_cone(v, self.generators)

    def is_pointed(self) -> bool:
        return not any(_exact.in_cone([-x for x in g], self.generators) for g in self.generators)

    def is_minimally_generated(self) -> bool:
        """No generator is a nonnegative combination of the others."""
        gens = self.generators
        return not any(_exact.in_cone(g, gens[:k] + gens[k + 1:]) for k, g in enumerate(gens))


@dataclass(frozen=True)
class Fan:
    rank: int
    cones: tuple[Cone, ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def rays(self) -> list[tuple[int, ...]]:
        seen: dict[tuple[int, ...], None] = {}
        for c in self.cones:
            for g in c.generators:
                seen.setdefault(g, None)
        return list(seen)

    def to_dict(self) -> dict:
        rays = self.rays()
        index = {r: k for k, r in enumerate(rays)}
        return {"rank": self.rank, "rays": [list(r) for r in rays],
                "cones": [[index[g] for g in c.generators] for c in self.cones]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Fan":
        try:
            rays = [tuple(int(x) for x in r) for r in data["rays"]]
            cones = tuple(Cone(tuple(rays[k] for k in c)) for c in data["cones"])
            return cls(int(data["rank"]), cones)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise FormatError(f"bad fan JSON: {exc}") from None


def _unit(rank: int, k: int) -> tuple[int, ...]:
    return tuple(1 if c == k else 0 for c in range(rank))


def build_fan(delta: SimplicialComplex, sigma) -> Fan:
    """Maximal cones ``c_τ`` for the facets τ of Δ, in facet order."""
    s = sigma if isinstance(sigma, int) else to_mask(sigma)
    if not delta.contains(s):
        raise NotAFace(f"{members(s)} is not a face")
    d = s.bit_count()
    if d < 2:
        raise FaceTooSmall("σ must have at least 2 vertices")
    m = delta.m
    rank = m + d - 1
    if rank > MAX_RANK:
        raise OutOfRange(f"lattice rank {rank} exceeds {MAX_RANK}")
    # σ's vertices become positions 1..d, the rest follow in label order
    sig = members(s)
    order = list(sig) + [v for v in delta.vertices if v not in sig]
    position = {v: k for k, v in enumerate(order)}
    ex = {v: _unit(rank, position[v]) for v in delta.vertices}
    ez = [_unit(rank, m + j) for j in range(d - 1)]
    ea = tuple(sum(ex[v][c] for v in sig) - sum(z[c] for z in ez) for c in range(rank))
    cones = []
    for f in delta.facet_masks:
        gens = [ex[v] for v in members(f)] + ez
        if s & ~f == 0:
            gens.append(ea)
        cones.append(Cone(tuple(gens)))
    names = {ex[v]: f"e_x{v}" for v in delta.vertices}
    names.update({z: f"e_z{j}" for j, z in enumerate(ez, start=1)})
    names[ea] = "e_a"
    meta = {"relabel": {v: position[v] + 1 for v in delta.vertices},
            "ray_names": names, "e_a": ea, "sigma": sig}
    return Fan(rank, tuple(cones), meta)


@dataclass(frozen=True)
class FanCheck:
    ok: bool
    violation: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def intersect_in_common_face(c1: Cone, c2: Cone) -> bool:
    """Whether ``c1 ∩ c2`` is a face of both cones.

    Separating functionals form the dual of ``cone(G1 ∪ -G2)``.  A generic one
    vanishes exactly on the generators ``a`` with ``-a`` in that cone; the
    intersection is a common face iff those tight generators of each side span
    the same cone.
    """
    both = list(c1.generators) + [tuple(-x for x in g) for g in c2.generators]
    tight1 = [g for g in c1.generators if _exact.in_cone([-x for x in g], both)]
    tight2 = [g for g in c2.generators if _exact.in_cone(g, both)]
    return (all(_exact.in_cone(g, tight2) for g in tight1)
            and all(_exact.in_cone(g, tight1) for g in tight2))


def check_fan(fan: Fan) -> FanCheck:
    """Pointedness of every cone, then pairwise common-face intersections."""
    for k, cone in enumerate(fan.cones):
        if any(len(g) != fan.rank for g in cone.generators):
            return FanCheck(False, (k,), "generator length differs from rank")
        if not cone.is_pointed():
            return FanCheck(False, (k,), "cone is not pointed")
    for a, b in combinations(range(len(fan.cones)), 2):
        if not intersect_in_common_face(fan.cones[a], fan.cones[b]):
            return FanCheck(False, (a, b), "intersection is not a common face")
    return FanCheck(True)


P3_RAYS = {
    "x1": (1, 0, 0),
    "x2": (0, 1, 0),
    "x3": (-1, -1, -1),
    "x4": (0, 0, 1),
    "z": (1, 1, -1),
}


def embedded_example_p3(subdivided: bool = False) -> Fan:
    """The triangle example placed in R^3 on the rays of the fan of P^3.

    With ``subdivided=True`` the non-simplicial cone on x1, x4, x2, z is split
    into x1, x4, z and x4, x2, z.
    """
    groups = [("x1", "x3", "z"), ("x2", "x3", "z")]
    if subdivided:
        groups += [("x1", "x4", "z"), ("x4", "x2", "z")]
    else:
        groups.append(("x1", "x4", "x2", "z"))
    cones = tuple(Cone(tuple(P3_RAYS[n] for n in grp)) for grp in groups)
    names = {v: k for k, v in P3_RAYS.items()}
    return Fan(3, cones, {"ray_names": names, "groups": groups})

"""Abstract simplicial complexes on small vertex sets.

Faces are stored as integer bitsets: vertex ``v`` (a positive label, at most
``MAX_VERTICES``) is bit ``v - 1``.  A complex is the antichain of its facets
together with the sorted tuple of its vertex labels.  Complexes built from
scratch use the labels ``1..m``; links and induced subcomplexes keep the labels
of the parent complex and expose a compaction map through ``vertex_index``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    FaceTooSmall,
    FormatError,
    InvalidChoiceIndex,
    NotAFace,
    OutOfRange,
    UncoveredVertex,
    VertexOutOfRange,
    VoidComplex,
)

MAX_VERTICES = 64


def to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        if not 1 <= v <= MAX_VERTICES:
            raise VertexOutOfRange(f"vertex {v} outside 1..{MAX_VERTICES}")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Ascending vertex labels of a bitset."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical (cardinality, lexicographic) sort key."""
    verts = members(mask)
    return len(verts), verts


def submasks(mask: int):
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members, canonically ordered."""
    uniq = sorted(set(masks), key=lambda s: -s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(s & ~t == 0 for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=face_key))


def minimal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members, canonically ordered."""
    uniq = sorted(set(masks), key=lambda s: s.bit_count())
    kept: list[int] = []
    for s in uniq:
        if not any(t & ~s == 0 for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=face_key))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``t``; ``coeffs[i]`` is the coefficient of ``t**i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, n: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ONE_MINUS_T = IntPolynomial((1, -1))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``facet_masks`` is a canonically ordered antichain of bitsets.  The void
    complex has no facets; the complex ``{∅}`` has the single facet ``0`` and
    no vertices.
    """

    vertices: tuple[int, ...]
    facet_masks: tuple[int, ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @classmethod
    def from_masks(cls, masks: Iterable[int], vertices: Sequence[int] | None = None,
                   metadata: dict | None = None) -> "SimplicialComplex":
        facets = antichain(masks)
        support = 0
        for f in facets:
            support |= f
        verts = members(support) if vertices is None else tuple(sorted(vertices))
        extra = support & ~to_mask(verts)
        if extra:
            raise VertexOutOfRange(f"facets use vertices {members(extra)} outside the vertex set")
        for v in verts:
            if not support >> (v - 1) & 1:
                raise UncoveredVertex(v)
        return cls(verts, facets, dict(metadata or {}))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls((), ())

    @classmethod
    def empty_face_complex(cls) -> "SimplicialComplex":
        """The complex ``{∅}``: the link of a facet."""
        return cls((), (0,))

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(members(f) for f in self.facet_masks)

    @property
    def vertex_mask(self) -> int:
        return to_mask(self.vertices)

    @property
    def vertex_index(self) -> dict[int, int]:
        """Map from vertex label to its 1-based position in ``vertices``."""
        return {v: i for i, v in enumerate(self.vertices, start=1)}

    @property
    def is_standard(self) -> bool:
        """True when the vertex labels are exactly ``1..m``."""
        return self.vertices == tuple(range(1, self.m + 1))

    @property
    def next_vertex(self) -> int:
        return (self.vertices[-1] if self.vertices else 0) + 1

    def contains(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facet_masks)

    def face_masks(self) -> list[int]:
        seen: set[int] = set()
        for f in self.facet_masks:
            seen.update(submasks(f))
        return sorted(seen, key=face_key)

    def compacted(self) -> "SimplicialComplex":
        """Relabel vertices to ``1..m`` preserving their order."""
        index = self.vertex_index
        masks = [to_mask(index[v] for v in members(f)) for f in self.facet_masks]
        return SimplicialComplex(tuple(range(1, self.m + 1)),
                                 tuple(sorted(masks, key=face_key)), dict(self.metadata))

    def relabeled(self, mapping: dict[int, int]) -> "SimplicialComplex":
        masks = [to_mask(mapping[v] for v in members(f)) for f in self.facet_masks]
        return SimplicialComplex.from_masks(masks, vertices=[mapping[v] for v in self.vertices])

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{body}])"


def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.is_void:
        raise VoidComplex("operation undefined on the void complex")


def _face_mask(delta: SimplicialComplex, sigma) -> int:
    mask = sigma if isinstance(sigma, int) else to_mask(sigma)
    if not delta.contains(mask):
        raise NotAFace(f"{members(mask)} is not a face")
    return mask


def new_complex(m: int, candidate_facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex on vertices ``1..m`` generated by ``candidate_facets``."""
    if not 0 <= m <= MAX_VERTICES:
        raise VertexOutOfRange(f"m={m} outside 0..{MAX_VERTICES}")
    masks = []
    for face in candidate_facets:
        face = list(face)
        bad = [v for v in face if not 1 <= v <= m]
        if bad:
            raise VertexOutOfRange(f"vertex {bad[0]} outside 1..{m}")
        masks.append(to_mask(face))
    if not masks:
        if m:
            raise UncoveredVertex(1)
        return SimplicialComplex.void()
    return SimplicialComplex.from_masks(masks, vertices=range(1, m + 1))


def is_face(delta: SimplicialComplex, sigma: Iterable[int] | int) -> bool:
    mask = sigma if isinstance(sigma, int) else to_mask(sigma)
    return delta.contains(mask)


def enumerate_faces(delta: SimplicialComplex) -> list[tuple[int, ...]]:
    """All faces including ∅, ordered by (cardinality, lexicographic)."""
    return [members(f) for f in delta.face_masks()]


def dim(delta: SimplicialComplex) -> int:
    _require_nonvoid(delta)
    return max(f.bit_count() for f in delta.facet_masks) - 1


def is_pure(delta: SimplicialComplex) -> bool:
    _require_nonvoid(delta)
    return len({f.bit_count() for f in delta.facet_masks}) == 1


def link(delta: SimplicialComplex, sigma) -> SimplicialComplex:
    """Link of ``sigma``; keeps the parent's vertex labels."""
    _require_nonvoid(delta)
    s = _face_mask(delta, sigma)
    masks = [f & ~s for f in delta.facet_masks if s & ~f == 0]
    return SimplicialComplex.from_masks(masks)


def star(delta: SimplicialComplex, sigma) -> SimplicialComplex:
    _require_nonvoid(delta)
    s = _face_mask(delta, sigma)
    return SimplicialComplex.from_masks(f for f in delta.facet_masks if s & ~f == 0)


def induced_subcomplex(delta: SimplicialComplex, vertices: Iterable[int] | int) -> SimplicialComplex:
    """Faces of ``delta`` inside ``vertices``; the empty set gives ``{∅}``."""
    _require_nonvoid(delta)
    w = vertices if isinstance(vertices, int) else to_mask(vertices)
    w &= delta.vertex_mask
    return SimplicialComplex.from_masks(f & w for f in delta.facet_masks)


def stellar_subdivision(delta: SimplicialComplex, sigma) -> SimplicialComplex:
    """Stellar subdivision on ``sigma`` with new vertex ``max label + 1``."""
    _require_nonvoid(delta)
    s = _face_mask(delta, sigma)
    if s.bit_count() < 2:
        raise FaceTooSmall("stellar subdivision needs a face with at least 2 vertices")
    new = delta.next_vertex
    if new > MAX_VERTICES:
        raise VertexOutOfRange(f"subdivision would need vertex {new}")
    apex = 1 << (new - 1)
    masks = []
    for f in delta.facet_masks:
        if s & ~f:
            masks.append(f)
            continue
        for v in members(s):
            masks.append((f & ~(1 << (v - 1))) | apex)
    return SimplicialComplex.from_masks(masks, vertices=delta.vertices + (new,))


def join(delta1: SimplicialComplex, delta2: SimplicialComplex) -> SimplicialComplex:
    """Join; the vertices of ``delta2`` are shifted past those of ``delta1``."""
    _require_nonvoid(delta1)
    _require_nonvoid(delta2)
    shift = delta1.vertices[-1] if delta1.vertices else 0
    if (delta2.vertices[-1] if delta2.vertices else 0) + shift > MAX_VERTICES:
        raise VertexOutOfRange("join exceeds the vertex limit")
    masks = [f1 | (f2 << shift) for f1 in delta1.facet_masks for f2 in delta2.facet_masks]
    verts = delta1.vertices + tuple(v + shift for v in delta2.vertices)
    return SimplicialComplex.from_masks(masks, vertices=verts)


def f_vector(delta: SimplicialComplex) -> list[int]:
    """``(f_{-1}, f_0, ..., f_{dim})``."""
    top = dim(delta)
    counts = [0] * (top + 2)
    for f in delta.face_masks():
        counts[f.bit_count()] += 1
    return counts


def f_polynomial(delta: SimplicialComplex) -> IntPolynomial:
    """``sum_j f_{j-1} t^j``, so that joins multiply."""
    return IntPolynomial(tuple(f_vector(delta)))


def h_polynomial(delta: SimplicialComplex) -> IntPolynomial:
    f = f_vector(delta)
    n = len(f) - 1
    h = IntPolynomial()
    for i in range(n + 1):
        h = h + IntPolynomial.monomial(i, f[i]) * ONE_MINUS_T ** (n - i)
    return h


def boundary_of_simplex(n: int) -> SimplicialComplex:
    """All (n-1)-subsets of ``1..n``."""
    if n < 2:
        raise OutOfRange("boundary_of_simplex needs n >= 2")
    full = (1 << n) - 1
    return SimplicialComplex.from_masks((full & ~(1 << i) for i in range(n)),
                                        vertices=range(1, n + 1))


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on ``1..n``."""
    if n < 1:
        raise OutOfRange("simplex needs n >= 1")
    return SimplicialComplex.from_masks([(1 << n) - 1], vertices=range(1, n + 1))


def cycle_complex(n: int) -> SimplicialComplex:
    """Boundary of the n-gon, edges ``{i, i+1}`` cyclically."""
    if n < 3:
        raise OutOfRange("a polygon needs n >= 3")
    return new_complex(n, [(i, i % n + 1) for i in range(1, n + 1)])


def cross_polytope_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross-polytope on ``2k`` vertices.

    Opposite vertices are ``i`` and ``i + k``; ``k = 3`` is the octahedron with
    missing edges {1,4}, {2,5}, {3,6}.
    """
    if k < 1:
        raise OutOfRange("cross polytope needs k >= 1")
    facets = [[i + k * b for i, b in enumerate(bits, start=1)]
              for bits in itertools.product((0, 1), repeat=k)]
    return new_complex(2 * k, facets)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def stacked_complex(d: int, m: int, facet_choices: Sequence[int] | None = None) -> SimplicialComplex:
    """Boundary complex of a stacked d-polytope with m vertices.

    Starts from the boundary of the d-simplex and stellarly subdivides one facet
    per new vertex.  ``facet_choices[k]`` indexes the canonical facet list of
    the current complex; by default the first facet is taken every time.  The
    choices used are stored in ``metadata["facet_choices"]``.
    """
    if d < 2 or m < d + 1:
        raise OutOfRange("stacked_complex needs d >= 2 and m >= d + 1")
    steps = m - d - 1
    if facet_choices is None:
        facet_choices = [0] * steps
    facet_choices = list(facet_choices)
    if len(facet_choices) != steps:
        raise InvalidChoiceIndex(f"expected {steps} facet choices, got {len(facet_choices)}")
    delta = boundary_of_simplex(d + 1)
    for choice in facet_choices:
        if not 0 <= choice < len(delta.facet_masks):
            raise InvalidChoiceIndex(f"facet index {choice} out of range")
        delta = stellar_subdivision(delta, delta.facet_masks[choice])
    return SimplicialComplex(delta.vertices, delta.facet_masks,
                             {"d": d, "m": m, "facet_choices": facet_choices})


def subdivide_all_facets(delta: SimplicialComplex) -> SimplicialComplex:
    """Stellar subdivision of every original facet in turn."""
    originals = list(delta.facet_masks)
    for f in originals:
        delta = stellar_subdivision(delta, f)
    return delta


# -- serialization -----------------------------------------------------------

def _standard_view(delta: SimplicialComplex) -> tuple[int, list[list[int]], list[int] | None]:
    if delta.is_standard:
        return delta.m, [list(f) for f in delta.facets], None
    c = delta.compacted()
    return c.m, [list(f) for f in c.facets], list(delta.vertices)


def write_cplx(delta: SimplicialComplex) -> str:
    """Facet-file text; facets sorted lexicographically.

    Non-standard labels are compacted to ``1..m`` and listed in a comment.
    """
    m, facets, labels = _standard_view(delta)
    lines = [f"m {m}"]
    if labels is not None:
        lines.append("# labels " + " ".join(map(str, labels)))
    lines.extend(" ".join(map(str, f)) for f in sorted(facets))
    return "\n".join(lines) + "\n"


def read_cplx(text: str) -> SimplicialComplex:
    lines = [ln.strip() for ln in text.splitlines()]
    header = None
    facets = []
    for ln in lines:
        if not ln or ln.startswith("#"):
            continue
        if header is None:
            parts = ln.split()
            if len(parts) != 2 or parts[0] != "m":
                raise FormatError(f"expected 'm <integer>' header, got {ln!r}")
            try:
                header = int(parts[1])
            except ValueError:
                raise FormatError(f"bad vertex count {parts[1]!r}") from None
            continue
        try:
            facets.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise FormatError(f"bad facet line {ln!r}") from None
    if header is None:
        raise FormatError("missing 'm <integer>' header")
    return new_complex(header, facets)


def complex_to_dict(delta: SimplicialComplex) -> dict:
    m, facets, labels = _standard_view(delta)
    out = {"m": m, "facets": sorted(facets)}
    if labels is not None:
        out["labels"] = labels
    return out


def complex_from_dict(data: dict) -> SimplicialComplex:
    try:
        m = int(data["m"])
        facets = [[int(v) for v in f] for f in data["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad complex JSON: {exc}") from None
    delta = new_complex(m, facets)
    labels = data.get("labels")
    if labels is not None:
        delta = delta.relabeled(dict(zip(range(1, m + 1), labels)))
    return delta


def load_complex(path: str | Path) -> SimplicialComplex:
    """Read a ``.cplx`` or ``.json`` complex file."""
    text = Path(path).read_text()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        try:
            return complex_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(str(exc)) from None
    return read_cplx(text)


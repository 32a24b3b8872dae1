"""Stanley–Reisner ideals and explicit ring presentations.

Monomial ideals of a face ring are recorded by the supports of their
square-free generators.  Presentations are lists of monomial and binomial
generators over graded variables; they carry no Gröbner machinery, only the
antichain reduction of monomial generators.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .complex_core import (
    SimplicialComplex,
    face_key,
    members,
    minimal_sets,
    to_mask,
)
from .errors import (
    FaceTooSmall,
    FormatError,
    GeneratorNotAFace,
    NotAFace,
    NotGorensteinStar,
    UnknownVariable,
    VoidComplex,
)
from .homology import GF2, PrimeField, is_gorenstein_star


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal, stored as a canonical antichain of supports.

    ``generators == (0,)`` (the empty support) is the unit ideal; an empty
    tuple is the zero ideal.
    """

    generators: tuple[int, ...]

    @classmethod
    def from_supports(cls, supports) -> "MonomialIdeal":
        masks = [s if isinstance(s, int) else to_mask(s) for s in supports]
        return cls(minimal_sets(masks))

    @property
    def supports(self) -> list[tuple[int, ...]]:
        return [members(g) for g in self.generators]

    def contains_support(self, mask: int) -> bool:
        return any(g & ~mask == 0 for g in self.generators)

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(_square_free_name(g) for g in self.generators) + ")"


def _square_free_name(mask: int) -> str:
    verts = members(mask)
    return "*".join(f"x{v}" for v in verts) if verts else "1"


def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.is_void:
        raise VoidComplex("operation undefined on the void complex")


def _face(delta: SimplicialComplex, sigma) -> int:
    mask = sigma if isinstance(sigma, int) else to_mask(sigma)
    if not delta.contains(mask):
        raise NotAFace(f"{members(mask)} is not a face")
    return mask


def minimal_nonfaces(delta: SimplicialComplex) -> tuple[int, ...]:
    # every minimal non-face is a face plus one vertex
    faces = set(delta.face_masks())
    found = set()
    for f in faces:
        for v in delta.vertices:
            bit = 1 << (v - 1)
            if f & bit:
                continue
            cand = f | bit
            if cand in faces or cand in found:
                continue
            if all((cand & ~(1 << (w - 1))) in faces for w in members(cand)):
                found.add(cand)
    return tuple(sorted(found, key=face_key))


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    _require_nonvoid(delta)
    return MonomialIdeal(minimal_nonfaces(delta))


def colon_ideal_j_sigma(delta: SimplicialComplex, sigma) -> MonomialIdeal:
    """Supports of the monomial generators of ``J_σ = (0 : x_σ)`` in ``k[Δ]``.

    These are the minimal faces τ disjoint from σ with τ ∪ σ not a face.
    """
    _require_nonvoid(delta)
    s = _face(delta, sigma)
    cands = [t for t in delta.face_masks() if not t & s and not delta.contains(t | s)]
    return MonomialIdeal(minimal_sets(cands))


def annihilator_of_ideal(delta: SimplicialComplex, ideal: MonomialIdeal) -> MonomialIdeal:
    """``(0 : J)`` in ``k[Δ]`` for a monomial ideal ``J``.

    The quotient of monomial ideals is monomial, so it suffices to collect the
    minimal faces ρ with ρ ∪ τ a non-face for every generator τ of ``J``.
    """
    _require_nonvoid(delta)
    for g in ideal.generators:
        if not delta.contains(g):
            raise GeneratorNotAFace(f"{members(g)} is zero in k[Δ]")
    cands = [r for r in delta.face_masks()
             if all(not delta.contains(r | g) for g in ideal.generators)]
    return MonomialIdeal(minimal_sets(cands))


# -- presentations ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Monomial:
    """Product of variables; ``factors`` keeps display order, equality ignores it."""

    factors: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.factors)

    def _key(self):
        return frozenset(self.factors)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.factors)

    def divides(self, other: "Monomial") -> bool:
        mine, theirs = self.as_dict(), other.as_dict()
        return all(theirs.get(v, 0) >= e for v, e in mine.items())

    def degree(self, degrees: dict[str, int]) -> int:
        return sum(degrees[v] * e for v, e in self.factors)

    def __str__(self) -> str:
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.factors) or "1"


@dataclass(frozen=True)
class Binomial:
    """The generator ``pos - neg``."""

    pos: Monomial
    neg: Monomial

    def __str__(self) -> str:
        return f"{self.pos} - {self.neg}"


@dataclass(frozen=True, eq=False)
class RingPresentation:
    """Quotient of a graded polynomial ring by monomials and binomials.

    Equality compares the variable list and the generator sets.
    """

    variables: tuple[tuple[str, int], ...]
    generators: tuple[Monomial | Binomial, ...]
    lead: str | None = None  # display-only: variable printed first in products

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self.variables)

    @property
    def monomials(self) -> list[Monomial]:
        return [g for g in self.generators if isinstance(g, Monomial)]

    @property
    def binomials(self) -> list[Binomial]:
        return [g for g in self.generators if isinstance(g, Binomial)]

    def __eq__(self, other):
        return (isinstance(other, RingPresentation)
                and self.variables == other.variables
                and set(self.generators) == set(other.generators))

    def __hash__(self):
        return hash((self.variables, frozenset(self.generators)))

    def is_homogeneous(self) -> bool:
        deg = self.degrees
        return all(g.pos.degree(deg) == g.neg.degree(deg) for g in self.binomials)

    def monomial_supports(self) -> set[frozenset[str]]:
        return {m.variables for m in self.monomials}

    def to_text(self) -> str:
        return ", ".join(str(g) for g in self.generators)

    def to_dict(self) -> dict:
        gens = []
        for g in self.generators:
            if isinstance(g, Monomial):
                gens.append({"mono": [[v, e] for v, e in g.factors]})
            else:
                gens.append({"bino": {"pos": [[v, e] for v, e in g.pos.factors],
                                      "neg": [[v, e] for v, e in g.neg.factors]}})
        return {"vars": [{"name": n, "deg": d} for n, d in self.variables], "gens": gens}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "RingPresentation":
        try:
            variables = tuple((str(v["name"]), int(v["deg"])) for v in data["vars"])
            gens: list[Monomial | Binomial] = []
            for g in data["gens"]:
                if "mono" in g:
                    gens.append(Monomial(tuple((str(v), int(e)) for v, e in g["mono"])))
                else:
                    b = g["bino"]
                    gens.append(Binomial(Monomial(tuple((str(v), int(e)) for v, e in b["pos"])),
                                         Monomial(tuple((str(v), int(e)) for v, e in b["neg"]))))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad presentation JSON: {exc}") from None
        names = {n for n, _ in variables}
        for g in gens:
            parts = [g] if isinstance(g, Monomial) else [g.pos, g.neg]
            for part in parts:
                if not part.variables <= names:
                    raise UnknownVariable(f"undeclared variables {sorted(part.variables - names)}")
        return cls(variables, tuple(gens))


def _var(v: int) -> str:
    return f"x{v}"


def _ordered_monomial(names, order: dict[str, int]) -> Monomial:
    return Monomial(tuple((n, 1) for n in sorted(set(names), key=order.__getitem__)))


def _display_order(variables, lead: str | None) -> dict[str, int]:
    """Display rank of each variable: the unprojection variable first."""
    order = {n: i + 1 for i, (n, _) in enumerate(variables)}
    if lead is not None:
        order[lead] = 0
    return order


def _monomial_key(mono: Monomial, rank: dict[str, int]):
    return (sum(e for _, e in mono.factors), sorted(rank[v] for v in mono.variables))


def canonical(variables, monomials, binomials, lead: str | None = None) -> RingPresentation:
    """Reduce monomial generators to an antichain under divisibility and sort.

    Binomials come first, then monomials by (degree, sorted variable ranks).
    Factors inside each monomial are listed with ``lead`` first, then in
    declaration order.
    """
    rank = {n: i for i, (n, _) in enumerate(variables)}
    order = _display_order(variables, lead)
    uniq = list(dict.fromkeys(monomials))
    kept = [m for m in uniq
            if not any(o is not m and o.divides(m) and not m.divides(o) for o in uniq)]

    def reorder(m: Monomial) -> Monomial:
        return Monomial(tuple(sorted(m.factors, key=lambda f: order[f[0]])))

    kept = sorted((reorder(m) for m in kept), key=lambda m: _monomial_key(m, rank))
    bins = sorted((Binomial(reorder(b.pos), reorder(b.neg)) for b in dict.fromkeys(binomials)),
                  key=lambda b: (_monomial_key(b.pos, rank), _monomial_key(b.neg, rank)))
    return RingPresentation(tuple(variables), tuple(bins) + tuple(kept), lead)


def _unprojection_setup(delta: SimplicialComplex, sigma, check_gorenstein: bool,
                        field: PrimeField):
    _require_nonvoid(delta)
    s = _face(delta, sigma)
    if s.bit_count() < 2:
        raise FaceTooSmall("σ must have at least 2 vertices")
    if check_gorenstein:
        result = is_gorenstein_star(delta, field)
        if not result:
            raise NotGorensteinStar(
                f"Δ is not Gorenstein* over GF({field.p}); witness face {result.witness}")
    new = delta.next_vertex
    xs = [(_var(v), 1) for v in delta.vertices] + [(_var(new), 1)]
    j_sigma = colon_ideal_j_sigma(delta, s)
    sr = stanley_reisner_ideal(delta)
    return s, new, xs, j_sigma, sr


def stellar_presentation(delta: SimplicialComplex, sigma) -> RingPresentation:
    """``k[x_1..x_{m+1}] / (I_Δ, x_σ, x_{m+1} u_1, ..., x_{m+1} u_r)``, reduced."""
    s, new, xs, j_sigma, sr = _unprojection_setup(delta, sigma, False, GF2)
    order = _display_order(xs, _var(new))
    monos = [_ordered_monomial(map(_var, members(g)), order) for g in sr.generators]
    monos.append(_ordered_monomial(map(_var, members(s)), order))
    monos.extend(_ordered_monomial([_var(new)] + [_var(v) for v in members(u)], order)
                 for u in j_sigma.generators)
    return canonical(xs, monos, [], lead=_var(new))


def _unprojection(delta, sigma, z_names, z_degree, check_gorenstein, field):
    s, new, xs, j_sigma, sr = _unprojection_setup(delta, sigma, check_gorenstein, field)
    variables = xs + [(z, z_degree) for z in z_names]
    order = _display_order(variables, _var(new))
    # generators of I_Δ divisible by x_σ are redundant modulo x_{m+1} z - x_σ
    monos = [_ordered_monomial(map(_var, members(g)), order)
             for g in sr.generators if s & ~g]
    monos.extend(_ordered_monomial([_var(new)] + [_var(v) for v in members(u)], order)
                 for u in j_sigma.generators)
    bino = Binomial(_ordered_monomial([_var(new), *z_names], order),
                    _ordered_monomial(map(_var, members(s)), order))
    return canonical(variables, monos, [bino], lead=_var(new))


def unprojection_presentation(delta: SimplicialComplex, sigma, *, field: PrimeField = GF2,
                              check_gorenstein: bool = True) -> RingPresentation:
    """Kustin–Miller unprojection ring of ``(J_σ, z) ⊂ k[Δ][z]`` with deg z = |σ| - 1."""
    d = len(sigma) if not isinstance(sigma, int) else sigma.bit_count()
    return _unprojection(delta, sigma, ["z"], d - 1, check_gorenstein, field)


def unprojection_presentation_deg1(delta: SimplicialComplex, sigma, *, field: PrimeField = GF2,
                                   check_gorenstein: bool = True) -> RingPresentation:
    """Same ring with z replaced by a product ``z1*...*z_{d-1}`` of degree-1 variables.

    For an edge σ the single new variable is called ``z`` so that the output
    coincides with :func:`unprojection_presentation`.
    """
    d = len(sigma) if not isinstance(sigma, int) else sigma.bit_count()
    names = ["z"] if d == 2 else [f"z{j}" for j in range(1, d)]
    return _unprojection(delta, sigma, names, 1, check_gorenstein, field)


def specialize_to_zero(pres: RingPresentation, var: str) -> RingPresentation:
    """Set ``var = 0`` and drop it from the variable list."""
    if var not in pres.degrees:
        raise UnknownVariable(var)
    monos: list[Monomial] = []
    bins: list[Binomial] = []
    for g in pres.generators:
        if isinstance(g, Monomial):
            if var not in g.variables:
                monos.append(g)
            continue
        pos_dead, neg_dead = var in g.pos.variables, var in g.neg.variables
        if pos_dead and neg_dead:
            continue
        if pos_dead:
            monos.append(g.neg)
        elif neg_dead:
            monos.append(g.pos)
        else:
            bins.append(g)
    variables = [(n, d) for n, d in pres.variables if n != var]
    lead = pres.lead if pres.lead != var else None
    return canonical(variables, monos, bins, lead=lead)


def presentation_of_ideal(delta: SimplicialComplex, ideal: MonomialIdeal) -> RingPresentation:
    """Presentation ``k[x_v : v vertex] / ideal``."""
    xs = [(_var(v), 1) for v in delta.vertices]
    order = _display_order(xs, None)
    monos = [_ordered_monomial(map(_var, members(g)), order) for g in ideal.generators]
    return canonical(xs, monos, [])

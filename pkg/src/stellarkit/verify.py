"""Self-checks exposed as ``stellarkit verify <suite>``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import corpus
from .complex_core import (
    IntPolynomial,
    ONE_MINUS_T,
    SimplicialComplex,
    dim,
    face_key,
    h_polynomial,
    is_pure,
    link,
    members,
    minimal_sets,
    stacked_complex,
    stellar_subdivision,
)
from .hochster import betti_oracle
from .homology import is_gorenstein_star
from .resolutions import (
    BettiTable,
    complete_intersection_table,
    hilbert_numerator,
    km_combine,
    stacked_betti_closed,
    stacked_betti_recursive,
    theta,
)
from .sr_algebra import (
    annihilator_of_ideal,
    colon_ideal_j_sigma,
    specialize_to_zero,
    stanley_reisner_ideal,
    stellar_presentation,
    unprojection_presentation,
)
from .toric_fan import build_fan, check_fan, embedded_example_p3


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _faces_of_size_at_least(delta: SimplicialComplex, k: int) -> list[int]:
    return [f for f in delta.face_masks() if f.bit_count() >= k]


def km_input_table(delta: SimplicialComplex, sigma: int) -> BettiTable:
    """Resolution shape of ``R/(I_Δ, J_σ, z)`` when its generators are a regular sequence.

    Square-free monomials with pairwise disjoint supports, together with the
    new variable z of degree ``|σ| - 1``, form a regular sequence, so the
    resolution is a Koszul complex.  Other cases raise ``ValueError``.
    """
    gens = minimal_sets(stanley_reisner_ideal(delta).generators
                        + colon_ideal_j_sigma(delta, sigma).generators)
    union = 0
    for g in gens:
        if union & g:
            raise ValueError("(I_Δ, J_σ) is not generated by disjoint monomials")
        union |= g
    return complete_intersection_table([g.bit_count() for g in gens] + [sigma.bit_count() - 1])


def km_table_for_subdivision(delta: SimplicialComplex, sigma: int) -> BettiTable:
    """KM construction from the oracle table of Δ and the Koszul table of ``(J_σ, z)``."""
    return km_combine(km_input_table(delta, sigma), betti_oracle(delta), 1)


def suite_triangle() -> list[Check]:
    tri = corpus.triangle()
    pres = unprojection_presentation(tri, (1, 2))
    text = pres.to_text()
    special = specialize_to_zero(pres, "z")
    square_ideal = stanley_reisner_ideal(stellar_subdivision(tri, (1, 2)))
    return [
        Check("triangle.text", text == "x4*z - x1*x2, x4*x3", text),
        Check("triangle.deg_z", pres.degrees["z"] == 1, str(pres.degrees["z"])),
        Check("triangle.specialize", special.to_text() == "x1*x2, x4*x3", special.to_text()),
        Check("triangle.square_ideal",
              {frozenset(f"x{v}" for v in members(g)) for g in square_ideal.generators}
              == special.monomial_supports(), str(square_ideal)),
    ]


def suite_annihilator() -> list[Check]:
    checks = []
    for name, delta in corpus.gorenstein_corpus().items():
        bad = [members(s) for s in _faces_of_size_at_least(delta, 2)
               if annihilator_of_ideal(delta, colon_ideal_j_sigma(delta, s)).generators != (s,)]
        checks.append(Check(f"annihilator.{name}", not bad, f"failures {bad[:3]}"))
    r = corpus.annihilator_counterexample()
    ann = annihilator_of_ideal(r, colon_ideal_j_sigma(r, 0b11))
    checks.append(Check("annihilator.counterexample", ann.supports == [(2,)], str(ann)))
    return checks


def suite_stellar_presentation() -> list[Check]:
    checks = []
    for name, delta in corpus.gorenstein_corpus().items():
        bad = []
        for s in _faces_of_size_at_least(delta, 2):
            pres = stellar_presentation(delta, s)
            target = stanley_reisner_ideal(stellar_subdivision(delta, s))
            want = {frozenset(f"x{v}" for v in members(g)) for g in target.generators}
            if pres.monomial_supports() != want or pres.binomials:
                bad.append(members(s))
        checks.append(Check(f"stellar_presentation.{name}", not bad, f"failures {bad[:3]}"))
    return checks


def suite_stacked() -> list[Check]:
    checks = []
    for d in (2, 3, 4):
        for m in range(d + 2, d + 5):
            rec, closed = stacked_betti_recursive(d, m), stacked_betti_closed(d, m)
            seqs = corpus.choice_sequences(d, m, 3)
            oracles = [betti_oracle(stacked_complex(d, m, c)) for c in seqs]
            ok = rec == closed and all(o == closed for o in oracles) and len(seqs) >= 3
            checks.append(Check(f"stacked.d{d}.m{m}", ok, f"choices {seqs}"))
    return checks


def suite_theta() -> list[Check]:
    from math import comb

    bad = []
    for d in range(2, 7):
        for m in range(d + 1, d + 21):
            for i in range(1, m - d + 1):
                if theta(d, m + 1, i) != theta(d, m, i) + comb(m - d, i) + theta(d, m, i - 1):
                    bad.append((d, m, i))
            if theta(d, m + 1, 1) != theta(d, m, 1) + (m - d):
                bad.append((d, m, "i=1"))
            if theta(d, m + 1, m - d) != theta(d, m, m - d - 1) + 1:
                bad.append((d, m, "i=m-d"))
    return [Check("theta.recursion", not bad, f"failures {bad[:3]}")]


def suite_nonminimal() -> list[Check]:
    delta = corpus.two_quadric_example()
    sigma = 0b11
    km = km_table_for_subdivision(delta, sigma)
    oracle = betti_oracle(stellar_subdivision(delta, sigma))
    return [
        Check("nonminimal.oracle_b1", oracle.total(1) == 3, str(oracle.total(1))),
        Check("nonminimal.km_b1", km.total(1) == 5, str(km.total(1))),
        Check("nonminimal.nonminimal", km.total(1) > oracle.total(1),
              f"km {km.to_dict()} oracle {oracle.to_dict()}"),
        Check("nonminimal.same_hilbert",
              hilbert_numerator(km) == hilbert_numerator(oracle),
              "z is regular of degree 1 on S, so the numerators agree"),
    ]


def h_identity_holds(delta: SimplicialComplex, sigma: int) -> bool:
    d = sigma.bit_count()
    bump = IntPolynomial((0,) + (1,) * (d - 1))
    lhs = h_polynomial(stellar_subdivision(delta, sigma))
    return lhs == h_polynomial(delta) + bump * h_polynomial(link(delta, sigma))


def suite_h_identity(seed: int = 20240601, count: int = 100) -> list[Check]:
    rng = random.Random(seed)
    bad, faces_checked = [], 0
    for n in range(count):
        delta = corpus.random_pure_complex(rng, 10)
        for s in _faces_of_size_at_least(delta, 2):
            faces_checked += 1
            if not h_identity_holds(delta, s):
                bad.append((n, members(s)))
    return [Check("h_identity.random", not bad, f"{faces_checked} faces, failures {bad[:3]}")]


def suite_gorenstein() -> list[Check]:
    checks = [Check("gorenstein.octahedron", bool(is_gorenstein_star(corpus.octahedron())))]
    for n in range(2, 8):
        checks.append(Check(f"gorenstein.simplex_boundary_{n}",
                            bool(is_gorenstein_star(corpus.boundary_of_simplex(n)))))
    expect = [
        ("annihilator_counterexample", corpus.annihilator_counterexample(), ()),
        ("path4", corpus.path(4), ()),
        ("octahedron_with_fin", corpus.octahedron_with_fin(), (7,)),
    ]
    for name, delta, witness in expect:
        res = is_gorenstein_star(delta)
        checks.append(Check(f"gorenstein.{name}", not res and res.witness == witness,
                            f"witness {res.witness}"))
    return checks


def suite_fan() -> list[Check]:
    checks = []
    for name, delta in corpus.gorenstein_corpus().items():
        if delta.m > 8:
            continue
        for size in range(2, dim(delta) + 2):
            sigma = min((f for f in delta.face_masks() if f.bit_count() == size), key=face_key)
            fan = build_fan(delta, sigma)
            containing = sum(1 for f in delta.facet_masks if sigma & ~f == 0)
            nonsimplicial = sum(1 for c in fan.cones if not c.is_simplicial())
            ok = (bool(check_fan(fan)) and nonsimplicial == containing
                  and len(fan.cones) == len(delta.facet_masks))
            checks.append(Check(f"fan.{name}.sigma{members(sigma)}", ok))
    p3 = embedded_example_p3()
    r = p3.metadata["ray_names"]
    rays = {v: k for k, v in r.items()}
    relation = tuple(a + b - c for a, b, c in zip(rays["x1"], rays["x2"], rays["z"])) == rays["x4"]
    checks.append(Check("fan.p3", bool(check_fan(p3)) and relation and len(p3.cones) == 3))
    sub = embedded_example_p3(subdivided=True)
    checks.append(Check("fan.p3_subdivided",
                        bool(check_fan(sub)) and all(c.is_simplicial() for c in sub.cones)))
    return checks


def suite_hilbert() -> list[Check]:
    checks = []
    for name, delta in corpus.gorenstein_corpus().items():
        n = dim(delta) + 1
        lhs = hilbert_numerator(betti_oracle(delta))
        rhs = h_polynomial(delta) * ONE_MINUS_T ** (delta.m - n)
        checks.append(Check(f"hilbert.{name}", lhs == rhs and is_pure(delta), f"{lhs} vs {rhs}"))
    return checks


SUITES: dict[str, Callable[[], list[Check]]] = {
    "triangle": suite_triangle,
    "annihilator": suite_annihilator,
    "stellar-presentation": suite_stellar_presentation,
    "stacked": suite_stacked,
    "theta": suite_theta,
    "nonminimal": suite_nonminimal,
    "h-identity": suite_h_identity,
    "gorenstein": suite_gorenstein,
    "fan": suite_fan,
    "hilbert": suite_hilbert,
}


def run_suite(name: str, seed: int | None = None) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in run_suite(key, seed)]
    if name == "h-identity" and seed is not None:
        return suite_h_identity(seed)
    return SUITES[name]()

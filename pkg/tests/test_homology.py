import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes
from stellarkit import complex_core as cc
from stellarkit import corpus
from stellarkit.complex_core import SimplicialComplex
from stellarkit.errors import OutOfRange, VoidComplex
from stellarkit.homology import (
    PrimeField,
    is_gorenstein_star,
    rank_mod_p,
    reduced_homology,
)


def span_size(rows, p):
    """Number of distinct vectors in the row span, by enumerating all combinations."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return 1
    seen = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        seen.add(tuple(sum(c * r[k] for c, r in zip(coeffs, rows)) % p
                       for k in range(len(rows[0]))))
    return len(seen)


@given(st.sampled_from([2, 3]), st.integers(1, 4), st.integers(1, 5), st.data())
@settings(max_examples=60)
def test_rank_matches_span_enumeration(p, nrows, ncols, data):
    mat = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=ncols, max_size=ncols),
                             min_size=nrows, max_size=nrows))
    r = rank_mod_p(np.array(mat), p)
    assert p**r == span_size([[x % p for x in row] for row in mat], p)


def test_prime_field_validation():
    assert PrimeField(7).p == 7
    for bad in (1, 4, 2**31 + 11):
        with pytest.raises(OutOfRange):
            PrimeField(bad)


def test_homology_examples():
    assert reduced_homology(cc.boundary_of_simplex(3)).dims == (0, 0, 1)
    assert reduced_homology(cc.octahedron()).dims == (0, 0, 0, 1)
    assert reduced_homology(cc.boundary_of_simplex(2), PrimeField(3)).dims == (0, 1)
    assert reduced_homology(SimplicialComplex.empty_face_complex()).dims == (1,)
    with pytest.raises(VoidComplex):
        reduced_homology(SimplicialComplex.void())


def test_torus_sees_two_loops():
    # 7-vertex torus: H̃_1 = k^2, H̃_2 = k for every p
    base = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)]
    other = [(1, 2, 6), (2, 3, 7), (3, 4, 1), (4, 5, 2), (5, 6, 3), (6, 7, 4), (7, 1, 5)]
    torus = cc.new_complex(7, base + other)
    for p in (2, 3, 5):
        assert reduced_homology(torus, PrimeField(p)).dims == (0, 0, 2, 1)


def test_projective_plane_depends_on_characteristic():
    rp2 = cc.new_complex(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                             (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)])
    assert reduced_homology(rp2, PrimeField(2)).dims == (0, 0, 1, 1)
    assert reduced_homology(rp2, PrimeField(3)).dims == (0, 0, 0, 0)
    assert not is_gorenstein_star(rp2, PrimeField(3))


@given(complexes())
@settings(max_examples=60)
def test_euler_characteristic(delta):
    f = cc.f_vector(delta)
    chi = -1 + sum((-1) ** j * f[j + 1] for j in range(len(f) - 1))
    for p in (2, 3):
        assert reduced_homology(delta, PrimeField(p)).euler_characteristic() == chi


def test_gorenstein_examples():
    assert is_gorenstein_star(cc.octahedron())
    res = is_gorenstein_star(corpus.annihilator_counterexample())
    assert not res and res.witness == () and res.profile.dims == (0, 0, 0)
    for d in (2, 3, 4):
        for m in range(d + 1, d + 5):
            assert is_gorenstein_star(cc.stacked_complex(d, m))


def test_gorenstein_witnesses():
    assert is_gorenstein_star(corpus.path(4)).witness == ()
    fin = corpus.octahedron_with_fin()
    res = is_gorenstein_star(fin)
    # vertex 7 has the edge {1,2} as link, which is acyclic; it precedes every edge
    assert res.witness == (7,)
    assert reduced_homology(cc.link(fin, (1, 2))).dims == (0, 2)


@pytest.mark.parametrize("name,delta", sorted(corpus.gorenstein_corpus().items()))
def test_gorenstein_corpus_properties(name, delta):
    assert is_gorenstein_star(delta)
    assert cc.is_pure(delta)
    for sigma in cc.enumerate_faces(delta):
        assert is_gorenstein_star(cc.link(delta, sigma))
    top = cc.dim(delta) + 1
    for ridge in (f for f in cc.enumerate_faces(delta) if len(f) == top - 1):
        assert sum(set(ridge) <= set(f) for f in delta.facets) == 2
    profiles = {reduced_homology(delta, PrimeField(p)).dims for p in (2, 3, 5)}
    assert len(profiles) == 1


@given(complexes(max_vertices=6))
@settings(max_examples=60)
def test_gorenstein_implies_pure(delta):
    if is_gorenstein_star(delta):
        assert cc.is_pure(delta)

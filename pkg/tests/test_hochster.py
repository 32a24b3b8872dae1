import pytest
from hypothesis import given, settings

from conftest import complexes
from stellarkit import complex_core as cc
from stellarkit import corpus
from stellarkit.complex_core import ONE_MINUS_T, SimplicialComplex
from stellarkit.errors import TooManyVertices, VoidComplex
from stellarkit.hochster import betti_oracle, induced_subcomplex
from stellarkit.homology import PrimeField
from stellarkit.resolutions import hilbert_numerator, stacked_betti_closed

GORENSTEIN = sorted(corpus.gorenstein_corpus().items())


def test_induced_subcomplex_examples():
    pent = cc.cycle_complex(5)
    w = induced_subcomplex(pent, cc.to_mask((1, 3)))
    assert w.vertices == (1, 3) and w.facets == ((1,), (3,))
    assert induced_subcomplex(pent, cc.to_mask(pent.vertices)) == pent
    point = induced_subcomplex(cc.boundary_of_simplex(3), cc.to_mask((1,)))
    assert point.facets == ((1,),)
    assert induced_subcomplex(pent, 0) == SimplicialComplex.empty_face_complex()


def test_oracle_examples():
    assert betti_oracle(cc.boundary_of_simplex(3)).entries == {(0, 0): 1, (1, 3): 1}
    assert betti_oracle(cc.cycle_complex(5)).entries == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    assert betti_oracle(cc.cycle_complex(4)).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert betti_oracle(cc.simplex(3)).entries == {(0, 0): 1}


def test_oracle_errors():
    with pytest.raises(VoidComplex):
        betti_oracle(SimplicialComplex.void())
    big = cc.new_complex(25, [tuple(range(1, 26))])
    with pytest.raises(TooManyVertices):
        betti_oracle(big)


@given(complexes(max_vertices=6))
@settings(max_examples=40, deadline=None)
def test_oracle_first_row_counts_minimal_nonfaces(delta):
    from stellarkit.sr_algebra import stanley_reisner_ideal

    gens = stanley_reisner_ideal(delta).supports
    row = betti_oracle(delta).row(1)
    assert sum(row.values()) == len(gens)
    for j, b in row.items():
        assert b == sum(1 for g in gens if len(g) == j)


@pytest.mark.parametrize("name,delta", GORENSTEIN)
def test_oracle_on_gorenstein_corpus(name, delta):
    table = betti_oracle(delta)
    n = cc.dim(delta) + 1
    g = delta.m - n
    assert table.length == g
    top = table.row(g)
    assert top == {delta.m: 1} or list(top.values()) == [1]
    jmax = max(top)
    assert table.entries == {(g - i, jmax - j): b for (i, j), b in table.entries.items()}
    assert hilbert_numerator(table) == cc.h_polynomial(delta) * ONE_MINUS_T ** g


@pytest.mark.parametrize("name,delta", GORENSTEIN)
def test_oracle_is_field_independent_on_spheres(name, delta):
    base = betti_oracle(delta)
    for p in (3, 5):
        assert betti_oracle(delta, PrimeField(p)) == base


def test_oracle_sees_characteristic():
    # six-vertex RP^2: the face ring has different Betti numbers over GF(2) and GF(3)
    rp2 = cc.new_complex(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                             (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)])
    assert betti_oracle(rp2) != betti_oracle(rp2, PrimeField(3))


@pytest.mark.parametrize("d,m", [(2, 6), (3, 6), (3, 7), (4, 7)])
def test_oracle_matches_closed_form_for_all_choices(d, m):
    target = stacked_betti_closed(d, m)
    for choices in corpus.choice_sequences(d, m, count=3, seed=1):
        assert betti_oracle(cc.stacked_complex(d, m, choices)) == target


def test_parallel_matches_serial(monkeypatch):
    delta = cc.stacked_complex(3, 10, [0, 3, 5, 2, 7, 1])
    serial = betti_oracle(delta)
    monkeypatch.setenv("STELLARKIT_THREADS", "2")
    assert betti_oracle(delta) == serial

import json

import pytest

from stellarkit import complex_core as cc
from stellarkit import corpus
from stellarkit._exact import in_cone, rank
from stellarkit.errors import FaceTooSmall, FormatError, NotAFace
from stellarkit.toric_fan import (
    P3_RAYS,
    Cone,
    Fan,
    build_fan,
    check_fan,
    embedded_example_p3,
    intersect_in_common_face,
)

SMALL = sorted((k, v) for k, v in corpus.gorenstein_corpus().items() if v.m <= 8)


def test_exact_helpers():
    assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert rank([]) == 0
    assert in_cone((1, 1), [(1, 0), (0, 1)])
    assert not in_cone((-1, 0), [(1, 0), (0, 1)])
    assert in_cone((0, 0), [])
    assert in_cone((1, 2), [(2, 4)])


def test_cone_basics():
    c = Cone(((0, 1), (1, 0), (1, 0)))
    assert c.generators == ((0, 1), (1, 0))
    assert c.is_simplicial() and c.is_pointed() and c.is_minimally_generated()
    assert not Cone(((1, 0), (0, 1), (1, 1))).is_minimally_generated()
    assert not Cone(((1,), (-1,))).is_pointed()
    with pytest.raises(ValueError):
        Cone(((0, 0),))


def test_triangle_fan():
    fan = build_fan(cc.boundary_of_simplex(3), (1, 2))
    assert fan.rank == 4 and len(fan.cones) == 3
    ea = fan.metadata["e_a"]
    assert ea == (1, 1, 0, -1)
    big = [c for c in fan.cones if not c.is_simplicial()]
    assert len(big) == 1
    assert set(big[0].generators) == {(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), ea}
    assert check_fan(fan)


def test_tetrahedron_and_octahedron_fans():
    tet = build_fan(cc.boundary_of_simplex(4), (1, 2, 3))
    assert tet.rank == 6 and len(tet.cones) == 4
    assert sum(not c.is_simplicial() for c in tet.cones) == 1
    octa = build_fan(cc.octahedron(), (1, 2))
    assert octa.rank == 7 and len(octa.cones) == 8
    assert sum(not c.is_simplicial() for c in octa.cones) == 2
    assert check_fan(octa)


def test_build_fan_errors():
    with pytest.raises(NotAFace):
        build_fan(cc.octahedron(), (1, 4))
    with pytest.raises(FaceTooSmall):
        build_fan(cc.octahedron(), (1,))


def test_relabeling_puts_sigma_first():
    fan = build_fan(cc.octahedron(), (2, 3))
    relabel = fan.metadata["relabel"]
    assert relabel[2] == 1 and relabel[3] == 2
    assert sorted(relabel.values()) == list(range(1, 7))


@pytest.mark.parametrize("name,delta", SMALL)
def test_fan_invariants_on_corpus(name, delta):
    for size in range(2, cc.dim(delta) + 2):
        sigma = next(f for f in cc.enumerate_faces(delta) if len(f) == size)
        fan = build_fan(delta, sigma)
        d = len(sigma)
        assert fan.rank == delta.m + d - 1
        assert len(fan.cones) == len(delta.facets)
        containing = sum(set(sigma) <= set(f) for f in delta.facets)
        assert sum(not c.is_simplicial() for c in fan.cones) == containing
        assert all(c.is_minimally_generated() for c in fan.cones)
        ea = fan.metadata["e_a"]
        ex = [tuple(1 if c == k else 0 for c in range(fan.rank)) for k in range(d)]
        minus_ez = [tuple(-1 if c == delta.m + j else 0 for c in range(fan.rank))
                    for j in range(d - 1)]
        assert in_cone(ea, ex + minus_ez)
        assert tuple(sum(col) for col in zip(*(ex + minus_ez))) == ea
        assert check_fan(fan)


def test_check_fan_catches_violations():
    line = Fan(1, (Cone(((1,),)), Cone(((-1,),)), Cone(((1,), (-1,)))))
    res = check_fan(line)
    assert not res and res.violation == (2,) and "pointed" in res.reason
    overlap = Fan(2, (Cone(((1, 0), (0, 1))), Cone(((1, 0), (1, 1)))))
    res = check_fan(overlap)
    assert not res and res.violation == (0, 1)
    assert not intersect_in_common_face(*overlap.cones)
    quadrants = Fan(2, (Cone(((1, 0), (0, 1))), Cone(((0, 1), (-1, 0)))))
    assert check_fan(quadrants)


def test_p3_example():
    fan = embedded_example_p3()
    r = P3_RAYS
    assert tuple(a + b - c for a, b, c in zip(r["x1"], r["x2"], r["z"])) == r["x4"]
    assert len(fan.cones) == 3 and check_fan(fan)
    assert sum(not c.is_simplicial() for c in fan.cones) == 1
    sub = embedded_example_p3(subdivided=True)
    assert len(sub.cones) == 4 and check_fan(sub)
    assert all(c.is_simplicial() for c in sub.cones)


def test_fan_json_round_trip():
    fan = build_fan(cc.octahedron(), (1, 2))
    data = json.loads(fan.to_json())
    assert data["rank"] == 7 and len(data["rays"]) == len(set(map(tuple, data["rays"])))
    assert Fan.from_dict(data) == fan
    with pytest.raises(FormatError):
        Fan.from_dict({"rank": 2, "rays": [[1, 0]], "cones": [[3]]})

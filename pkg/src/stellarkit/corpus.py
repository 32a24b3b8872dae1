"""Named example complexes and random generators used by tests and suites."""
from __future__ import annotations

import itertools
import random

from .complex_core import (
    SimplicialComplex,
    boundary_of_simplex,
    cycle_complex,
    new_complex,
    octahedron,
    stacked_complex,
    to_mask,
)


def triangle() -> SimplicialComplex:
    return boundary_of_simplex(3)


def annihilator_counterexample() -> SimplicialComplex:
    """Two edges {1,2}, {1,3}: k[Δ] is Gorenstein but Δ is acyclic."""
    return new_complex(3, [(1, 2), (1, 3)])


def two_quadric_example() -> SimplicialComplex:
    """Tetrahedron boundary subdivided at a facet; ideal (x1x2x3, x4x5)."""
    return new_complex(5, [f for f in itertools.combinations(range(1, 6), 3)
                           if not {1, 2, 3} <= set(f) and not {4, 5} <= set(f)])


def path(n: int) -> SimplicialComplex:
    return new_complex(n, [(i, i + 1) for i in range(1, n)])


def octahedron_with_fin() -> SimplicialComplex:
    """Octahedron plus the triangle {1,2,7}: edge {1,2} lies in three facets."""
    return new_complex(7, list(octahedron().facets) + [(1, 2, 7)])


def gorenstein_corpus() -> dict[str, SimplicialComplex]:
    """Sphere triangulations: simplex boundaries, polygons, octahedron, stacked spheres."""
    out = {f"simplex_boundary_{n}": boundary_of_simplex(n) for n in range(3, 7)}
    out["pentagon"] = cycle_complex(5)
    out["hexagon"] = cycle_complex(6)
    out["octahedron"] = octahedron()
    for d in (2, 3, 4):
        for m in range(d + 2, d + 4):
            out[f"stacked_{d}_{m}"] = stacked_complex(d, m)
    return out


def choice_sequences(d: int, m: int, count: int = 3, seed: int = 0) -> list[list[int]]:
    """Distinct facet-choice sequences for ``stacked_complex(d, m)``.

    Includes the all-zeros and all-last sequences, then seeded random ones.
    Facet counts grow by ``d - 1`` per step, which bounds each index.
    """
    steps = m - d - 1
    sizes = [d + 1 + k * (d - 1) for k in range(steps)]
    seqs = [[0] * steps, [n - 1 for n in sizes]]
    rng = random.Random(seed)
    tries = 0
    while len({tuple(s) for s in seqs}) < count and tries < 1000:
        seqs.append([rng.randrange(n) for n in sizes])
        tries += 1
    uniq = list(dict.fromkeys(tuple(s) for s in seqs))
    return [list(s) for s in uniq[:count]]


def random_pure_complex(rng: random.Random, max_vertices: int = 10) -> SimplicialComplex:
    """Random pure complex with at most ``max_vertices`` vertices, labels compacted."""
    size = rng.randint(2, 4)
    n = rng.randint(size + 1, max_vertices)
    count = rng.randint(1, 8)
    facets = {tuple(sorted(rng.sample(range(1, n + 1), size))) for _ in range(count)}
    delta = SimplicialComplex.from_masks(to_mask(f) for f in facets)
    return delta.compacted()

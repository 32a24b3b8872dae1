import itertools
import sys

from hypothesis import strategies as st

from stellarkit import new_complex


@st.composite
def complexes(draw, max_vertices=7, max_facets=6):
    """Random complexes on 1..m; uncovered vertices become isolated points."""
    m = draw(st.integers(2, max_vertices))
    subsets = st.sets(st.integers(1, m), min_size=1, max_size=min(m, 4))
    facets = draw(st.lists(subsets, min_size=1, max_size=max_facets))
    covered = set().union(*facets)
    facets += [{v} for v in range(1, m + 1) if v not in covered]
    return new_complex(m, facets)


@st.composite
def pure_complexes(draw, max_vertices=8, max_facets=6):
    m = draw(st.integers(3, max_vertices))
    size = draw(st.integers(2, min(4, m - 1)))
    pool = list(itertools.combinations(range(1, m + 1), size))
    facets = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_facets, unique=True))
    used = sorted(set().union(*map(set, facets)))
    relabel = {v: k for k, v in enumerate(used, start=1)}
    return new_complex(len(used), [[relabel[v] for v in f] for f in facets])


def all_faces_by_definition(delta):
    """Every subset of the vertex set that lies in a facet (brute force)."""
    verts = delta.vertices
    out = set()
    for r in range(len(verts) + 1):
        for sub in itertools.combinations(verts, r):
            if any(set(sub) <= set(f) for f in delta.facets):
                out.add(frozenset(sub))
    return out


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])

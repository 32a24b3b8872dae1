"""Reduced homology over prime fields and the Gorenstein* test."""
# %%
from stellarkit import complex_core as cc
from stellarkit import corpus
from stellarkit.homology import PrimeField, is_gorenstein_star, reduced_homology

# Spheres have a single top class.
print("octahedron:", reduced_homology(cc.octahedron()).dims)

# %%
# The six-vertex projective plane has homology only in characteristic 2.
rp2 = cc.new_complex(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                         (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)])
for p in (2, 3):
    print(f"RP^2 over GF({p}):", reduced_homology(rp2, PrimeField(p)).dims,
          " Gorenstein*:", bool(is_gorenstein_star(rp2, PrimeField(p))))

# %%
# Failures come with the first offending face (the empty face means Δ itself).
for name, delta in [("two edges", corpus.annihilator_counterexample()),
                    ("path", corpus.path(4)),
                    ("octahedron with a fin", corpus.octahedron_with_fin())]:
    res = is_gorenstein_star(delta)
    print(f"{name}: ok={res.ok} witness={res.witness} link homology={res.profile.dims}")

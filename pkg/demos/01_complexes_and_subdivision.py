"""Simplicial complexes, links and stellar subdivision."""
# %%
from stellarkit import complex_core as cc

# The boundary of a triangle is a circle on three vertices.
tri = cc.boundary_of_simplex(3)
print("facets:", tri.facets)
print("f-vector:", cc.f_vector(tri), " h:", cc.h_polynomial(tri))

# %%
# Subdividing the edge {1,2} adds vertex 4 in its middle: the circle becomes a square.
square = cc.stellar_subdivision(tri, (1, 2))
print("square facets:", square.facets)
print(cc.write_cplx(square))

# %%
# Links keep the parent's labels; vertex_index gives the compact 1..k numbering.
octa = cc.octahedron()
lk = cc.link(octa, (1,))
print("link of vertex 1 in the octahedron:", lk.facets)
print("index map:", lk.vertex_index)

# %%
# h-vector bookkeeping under subdivision: h(Δσ) = h(Δ) + (t + ... + t^(d-1)) h(lk σ).
sigma = (1, 2, 3)
sub = cc.stellar_subdivision(octa, sigma)
bump = cc.IntPolynomial((0, 1, 1))
print(cc.h_polynomial(sub), "==", cc.h_polynomial(octa) + bump * cc.h_polynomial(cc.link(octa, sigma)))

# %%
# Stacked spheres: subdivide one facet per new vertex.
stacked = cc.stacked_complex(3, 7, [0, 2, 5])
print("stacked 3-polytope on 7 vertices:", len(stacked.facets), "facets, f =", cc.f_vector(stacked))

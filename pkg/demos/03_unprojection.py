"""Stanley-Reisner ideals, the colon ideal J_σ and the unprojection ring."""
# %%
from stellarkit import complex_core as cc
from stellarkit import corpus
from stellarkit.sr_algebra import (
    annihilator_of_ideal,
    colon_ideal_j_sigma,
    specialize_to_zero,
    stanley_reisner_ideal,
    stellar_presentation,
    unprojection_presentation,
    unprojection_presentation_deg1,
)

tri = cc.boundary_of_simplex(3)
print("I_Δ =", stanley_reisner_ideal(tri))
print("J_σ =", colon_ideal_j_sigma(tri, (1, 2)))

# %%
# The unprojection ring: one binomial with a new variable z, plus the old relations.
S = unprojection_presentation(tri, (1, 2))
print("S:", S.to_text())
print("S with z = 0:", specialize_to_zero(S, "z").to_text())
print("face ring of the square:", stellar_presentation(tri, (1, 2)).to_text())

# %%
# On Gorenstein* complexes the annihilator of J_σ is generated by x_σ ...
octa = cc.octahedron()
print("octahedron:", annihilator_of_ideal(octa, colon_ideal_j_sigma(octa, (1, 2))))
# ... but not in general.
rem = corpus.annihilator_counterexample()
print("two edges:", annihilator_of_ideal(rem, colon_ideal_j_sigma(rem, (1, 2))))

# %%
# The degree-one variant splits z into d-1 linear variables.
tet = cc.boundary_of_simplex(4)
S1 = unprojection_presentation_deg1(tet, (1, 2, 3))
print("S1:", S1.to_text())
print(S1.to_json())

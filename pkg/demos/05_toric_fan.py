"""The fan attached to an unprojection and the P^3 picture."""
# %%
from stellarkit import complex_core as cc
from stellarkit.toric_fan import build_fan, check_fan, embedded_example_p3

fan = build_fan(cc.boundary_of_simplex(3), (1, 2))
names = fan.metadata["ray_names"]
for cone in fan.cones:
    kind = "simplicial" if cone.is_simplicial() else "not simplicial"
    print([names[g] for g in cone.generators], kind)
print("fan axioms hold:", bool(check_fan(fan)))

# %%
# Inside the fan of P^3 the ray of z is (1,1,-1) and x1 + x2 - z = x4.
p3 = embedded_example_p3()
print(p3.to_json())
print("check:", bool(check_fan(p3)))
split = embedded_example_p3(subdivided=True)
print("after splitting the square cone:", len(split.cones), "cones, all simplicial:",
      all(c.is_simplicial() for c in split.cones))

# %%
# Larger example: the octahedron with σ an edge has two non-simplicial cones.
octa = build_fan(cc.octahedron(), (1, 2))
print(sum(not c.is_simplicial() for c in octa.cones), "non-simplicial of", len(octa.cones),
      "; check:", bool(check_fan(octa)))

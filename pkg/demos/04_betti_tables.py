"""Betti tables: Kustin-Miller shapes, closed formulas and Hochster's formula."""
# %%
from stellarkit import complex_core as cc
from stellarkit import corpus
from stellarkit.hochster import betti_oracle
from stellarkit.resolutions import (
    hilbert_numerator,
    km_combine,
    koszul_table,
    stacked_betti_closed,
    stacked_betti_recursive,
)
from stellarkit.verify import km_table_for_subdivision

# The pentagon from the square: one KM step with a linear Koszul complex.
square = betti_oracle(cc.cycle_complex(4))
pentagon = km_combine(koszul_table(3, 1), square, 1)
print(pentagon.to_text())
print("matches Hochster:", pentagon == betti_oracle(cc.cycle_complex(5)))

# %%
# Stacked polytopes: recursion, closed form and brute force agree.
d, m = 3, 8
table = stacked_betti_closed(d, m)
print(table.to_text())
print("recursive:", stacked_betti_recursive(d, m) == table)
print("oracle:", betti_oracle(cc.stacked_complex(d, m, [1, 0, 3, 2])) == table)

# %%
# The KM complex need not be minimal: five first syzygy generators where three suffice.
delta = corpus.two_quadric_example()
km = km_table_for_subdivision(delta, cc.to_mask((1, 2)))
oracle = betti_oracle(cc.stellar_subdivision(delta, (1, 2)))
print("KM:\n" + km.to_text())
print("minimal:\n" + oracle.to_text())
print("same Hilbert numerator:", hilbert_numerator(km) == hilbert_numerator(oracle))

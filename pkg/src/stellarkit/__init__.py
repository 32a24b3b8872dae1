"""Exact tools for stellar subdivisions, Stanley–Reisner rings and Kustin–Miller unprojection."""

from .complex_core import (
    IntPolynomial,
    SimplicialComplex,
    boundary_of_simplex,
    cross_polytope_boundary,
    cycle_complex,
    dim,
    enumerate_faces,
    f_vector,
    h_polynomial,
    induced_subcomplex,
    is_face,
    is_pure,
    join,
    link,
    load_complex,
    new_complex,
    octahedron,
    read_cplx,
    stacked_complex,
    stellar_subdivision,
    write_cplx,
)
from .hochster import betti_oracle
from .homology import PrimeField, is_gorenstein_star, reduced_homology
from .resolutions import (
    BettiTable,
    hilbert_numerator,
    km_combine,
    koszul_table,
    shift_table,
    stacked_betti_closed,
    stacked_betti_recursive,
    theta,
)
from .sr_algebra import (
    MonomialIdeal,
    RingPresentation,
    annihilator_of_ideal,
    colon_ideal_j_sigma,
    specialize_to_zero,
    stanley_reisner_ideal,
    stellar_presentation,
    unprojection_presentation,
    unprojection_presentation_deg1,
)
from .toric_fan import Cone, Fan, build_fan, check_fan, embedded_example_p3

__version__ = "0.1.0"

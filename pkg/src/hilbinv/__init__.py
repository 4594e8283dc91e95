"""Derived-natural involutions of Hilbert schemes of points on generic K3 surfaces.

Exact lattice and Diophantine computations: the negative Pell criterion, the
induced isometries, the fixed Bridgeland central charge, and bounded scans
for walls along the path of stability conditions.
"""

from .classify import (
    ClassificationError,
    ClassificationReport,
    ClassifyOptions,
    Verdict,
    batch_sweep,
    classify,
    known_examples_lookup,
)
from .isometry import mukai_extension, ns_involution, verify_involution, verify_isometry
from .lattice import MukaiVector, NsGram, Surface, discriminant_action, ideal_sheaf_vector, mukai_pairing
from .pell import NegPellStatus, PellPair, aux_equation_scan, solve_neg_pell, solve_pos_pell
from .report import render
from .stability import StabilityParams, canonical_params, central_charge, charge_invariance, spherical_positivity_scan
from .walls import flopping_obstruction, is_effective, pairing_profile, scan_walls, wall_lambda0

__version__ = "0.1.0"

"""Two-parameter family X6(alpha) of order-6 complex Hadamard matrices."""
from .catalog import (bn_B, bn_circulant_witness, dita_circulant_witness, dita_D,
                      generalized_fourier)
from .cubic import RootTriple, invert_phi, solve_falpha
from .equivalence import (EquivalenceWitness, are_equivalent, canonical_dephased, fingerprint,
                          is_self_adjoint)
from .family import (BlockParams, FamilyVariant, Quadruple, all_variants, h_block,
                     x6_from_alpha, x6_from_quadruple)
from .linalg import (circulant, dephase, fourier_matrix, hadamard_residual, load_matrix,
                     max_entry_dist, save_matrix)
from .region import RegionClass, classify, discriminant, extremal_points, in_region, phi
from .zauner import (MubTriplet, TwoByTwoFactors, compose_2x2, decompose_2x2, mub_from_alpha,
                     verify_mub, zauner_bases)

__version__ = "0.1.0"

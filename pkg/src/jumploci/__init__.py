"""Exact computation of homology jump loci, exponential tangent cones and
Sigma-invariants for toric complexes, right-angled Artin groups and finitely
presented groups."""

from .exactlin import QQ, ZZ, Field, SubspaceQ
from .fpgroups import GroupPresentation, alexander_matrix, charvar1_member, cyclic_cover_finite, sigma1_upper_bound
from .laurent import LaurentPolynomial
from .sigma import (artin_kernel_sigma1_bound, artin_kernel_v11, bestvina_brady_predicates, dwyer_fried_toric,
                    sigma_describe, sigma_member)
from .simplicial import Graph, SimplicialComplex, flag_complex, reduced_homology
from .tau import RationalSubspaceArrangement, tau1_hypersurface, tau1_system, tc1_hypersurface
from .toric import aomoto_betti, charvar_arrangement, resonance_arrangement

__version__ = "0.1.0"

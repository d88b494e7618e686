"""Exact multi-term distributive homology of finite magmas.

The package computes homology of finite structures with families of
mutually right-distributive operations (lattices, semilattices, skew
lattices, generalized lattices with absorption) three independent ways:
exact integer Smith normal form of the boundary matrices, closed formulas
for distributive lattices and unital spindles, and the orbit-reduction
algorithm for structures with absorption — and cross-checks the routes
against each other.
"""

from .abgroups import (FinAbGroup, TRIVIAL, Z, annihilated_by, cyclic,
                       free_group, group_sum, tensor_with_cyclic,
                       tor_with_cyclic)
from .complexes import (DEGENERATE, FULL, NORMALIZED, Part, ScalarVector,
                        alpha_matrix, append_homotopy_matrix,
                        boundary_matrix, boundary_op_matrices,
                        default_basepoint, degeneracy_matrix, face_matrix,
                        filtration_part, full_part, init_deg_part,
                        init_norm_part, inner_translation_matrix, parse_part,
                        part_basis, part_dim, pi_matrix, q_scale,
                        reduced_part, sigma_matrix, single_face_matrix,
                        verify_weak_simplicial)
from .enumeration import (CensusRow, canonical_key, census_table_pairs,
                          census_table_spindles, enumerate_absorption_pairs,
                          enumerate_semilattices, enumerate_spindles,
                          enumerate_structures)
from .formulas import (LatticeParams, hom_b1_reduced, hom_lattice,
                       hom_normalized_lattice, hom_point,
                       hom_unital_spindle, lattice_params, parity,
                       rank_boolean_augmented, rank_boolean_rows, seq_r,
                       seq_s)
from .homology import (HomologyProfile, euler_check, homology_of_matrices,
                       homology_profile, profile_from_groups, profile_sum,
                       qdiff_transform)
from .intmatrix import IntMatrix, matrix_rank, nonunit_factors, \
    smith_normal_form
from .lattices import (LatticeInfo, Poset, SkewLatticeInfo,
                       analyze_lattice, analyze_semilattice, analyze_skew,
                       b1k, boolean_algebra, build_standard, chain_lattice,
                       dual_pair, hasse_text, lattice_ops, n5_lattice,
                       product_lattice)
from .magma import (AxiomError, BudgetError, ClosureError, MultiMagma,
                    OperationTable, StructureError, augment_with_trivial,
                    compose_ops, left_projection, load_magma,
                    magma_from_dict, magma_from_json, magma_to_dict,
                    magma_to_json, orbit, restrict, right_projection,
                    save_magma, strip_trivial)
from .reduction import (ReductionResult, irreducible_homology,
                        is_irreducible, mv_check, reduce_by_orbits)
from .scans import (ScanReport, conjecture_scan, conjugate_table,
                    enumerate_skew_pairs, scan_orbit_invariance,
                    scan_semilattice_projector, scan_skew_extremum,
                    spindle_orbit_failure)

__version__ = "0.1.0"

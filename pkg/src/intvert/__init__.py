"""Exact integer hulls of Delta-modular polyhedra and checks of their vertex bounds."""

from .deep_bases import DeepBase, beta, deep_base_for_vertex, enumerate_deep_bases
from .errors import (BudgetError, DimensionError, EmptySetError, GenerationError,
                     InfeasibleError, InstanceParseError, IntvertError, ParameterError,
                     RankError, SingularMatrixError, UnboundedError)
from .generators import InstanceSpec, gen
from .hull import HullFace, face_dim, faces, hull_vertices, lattice_points
from .instance import format_instance, parse_instance, read_instance
from .linalg import HnfDecomposition, det, hnf_decompose, is_unimodular, rank, solve_square
from .lp import LinearProgram, LpResult, Status, lp_feasible, lp_solve
from .polyhedron import Polyhedron, RealVertex, coordinate_bounds, is_feasible, real_vertices
from .subdet import DeltaProfile, delta, delta_ext, delta_k, delta_profile
from .verify import (bound_formulas, check_corollary1, check_theorem1, gamma_bruteforce,
                     is_convex_independent, verify_instance)

__version__ = "0.1.0"

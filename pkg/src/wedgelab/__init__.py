"""Discretized configuration complexes, ordered partial partitions and exact homology."""
from .combinatorics import binomial, stirling2, stirling2_closed
from .config import ConfigComplex, build_ordered, build_unordered
from .formulas import betti_closed, betti_recurrence, euler_from_cells, euler_from_formula, y_rank
from .homology import HomologyResult, SparseIntMatrix, chain_homology, complex_homology, smith_invariants
from .partitions import OrderedPartialPartition, build_poset, face_poset_isomorphism, join, meet
from .poset import order_complex
from .series import BivariateSeries, egf_series
from .simplicial import SimplicialComplex, complete_graph, faces_of_dim, full_simplex, skeleton
from .verify import run_verification

__version__ = "0.1.0"

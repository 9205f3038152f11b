"""Two-disjoint-cycle covers and Hamiltonian constructions on split-star networks S_n^2."""

from .cover import DccCover
from .dcc import (
    CaseTag,
    DccRequest,
    SweepReport,
    base_lookup,
    case_select,
    construct,
    dcc_construct,
    pancyclicity_sweep,
)
from .hamilton import (
    base_edge_cover_family,
    cluster_ham_cycle_through_edge,
    ham_cycle_minus_edge_pair,
    ham_cycle_minus_pair_through_edge,
    ham_cycle_minus_vertex,
    ham_cycle_through_edge,
    ham_cycle_two_edges,
    ham_path,
)
from .lemma_cycles import cycle_subnets_plus_edge, cycle_subnets_plus_vertex, prefix_disjoint_pair
from .permutation import format_perm, identity, parse, rank, unrank
from .topology import Cluster, Subnet, WholeGraph, coupled_pair_edge, edge_kind, neighbors
from .verify import ValidationReport, brute_force_dcc, edge_cover_check, validate_cycle, validate_dcc

__version__ = "0.1.0"

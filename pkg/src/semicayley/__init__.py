"""Normality of one-matching semi-Cayley graphs over finite abelian groups."""

from .abelian import AbelianGroup, GroupAutomorphism, enumerate_abelian_groups, enumerate_automorphisms, make_group
from .autsearch import (
    ColoredPartition,
    are_isomorphic,
    automorphism_group,
    find_isomorphism,
    is_arc_transitive,
    is_edge_transitive,
    is_vertex_transitive,
    refine,
)
from .graphs import ConnectionSpec, Graph, build_cayley, build_gp, build_sc_graph, is_connected, quotient_matching_graph
from .perm import Permutation, PermGroup, is_normal_subgroup
from .theory import Verdict, aut_GRL, build_RG, classify_theorem1, compute_X, compute_Y, evaluate, is_normal_sc

__version__ = "0.1.0"

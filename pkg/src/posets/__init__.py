"""
Finite Posets

Provides:
- poset_from_pairs / build_poset: closure of a generating relation
- relation, covering, elements: structural queries
- chain, antichain, boolean_algebra, m_poset: generators
- are_isomorphic: order isomorphism test
- hasse_dot: DOT rendering of Hasse diagrams
"""

from .core import (
    build_poset,
    cover_pairs,
    covering,
    elements,
    empty_poset,
    hasse_digraph,
    height,
    heights,
    is_chain,
    is_cover,
    is_forest,
    lower_covers,
    maximal_elements,
    minimal_elements,
    poset_from_pairs,
    relabel,
    relation,
    strict_relation,
    tag_collisions,
    topological_order,
    upper_covers,
)
from .generators import antichain, boolean_algebra, chain, diamond, m_poset, poset_b2, poset_p4
from .hasse import hasse_dot
from .isomorphism import are_isomorphic, find_isomorphism

__all__ = [
    "build_poset",
    "cover_pairs",
    "covering",
    "elements",
    "empty_poset",
    "hasse_digraph",
    "height",
    "heights",
    "is_chain",
    "is_cover",
    "is_forest",
    "lower_covers",
    "maximal_elements",
    "minimal_elements",
    "poset_from_pairs",
    "relabel",
    "relation",
    "strict_relation",
    "tag_collisions",
    "topological_order",
    "upper_covers",
    "antichain",
    "boolean_algebra",
    "chain",
    "diamond",
    "m_poset",
    "poset_b2",
    "poset_p4",
    "hasse_dot",
    "are_isomorphic",
    "find_isomorphism",
]

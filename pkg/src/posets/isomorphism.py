"""
Order Isomorphism

Two finite posets are isomorphic iff their Hasse diagrams are isomorphic as
directed graphs. Cheap invariants are compared first; the VF2 matcher from
networkx does the backtracking search.
"""
import logging
from collections import Counter
from typing import Dict, Optional, Tuple

from networkx.algorithms.isomorphism import DiGraphMatcher

from ..common.schema import Poset
from .core import hasse_digraph, heights

logger = logging.getLogger(__name__)


def _profile(p: Poset) -> Tuple:
    """Relabeling-invariant summary used to reject non-isomorphic pairs early."""
    graph = hasse_digraph(p)
    level = heights(p)
    degrees = Counter((graph.in_degree(v), graph.out_degree(v), level[v]) for v in p.vertices)
    return (len(p), len(p.relation), graph.number_of_edges(), sorted(degrees.items()))


def _matcher(p: Poset, q: Poset) -> DiGraphMatcher:
    hp, hq = hasse_digraph(p), hasse_digraph(q)
    level_p, level_q = heights(p), heights(q)
    for v in hp.nodes:
        hp.nodes[v]["height"] = level_p[v]
    for v in hq.nodes:
        hq.nodes[v]["height"] = level_q[v]
    return DiGraphMatcher(hp, hq, node_match=lambda a, b: a["height"] == b["height"])


def find_isomorphism(p: Poset, q: Poset) -> Optional[Dict[str, str]]:
    """
    Search for an order isomorphism.

    Returns:
        Mapping from p's labels to q's labels, or None
    """
    if _profile(p) != _profile(q):
        return None
    matcher = _matcher(p, q)
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def are_isomorphic(p: Poset, q: Poset) -> bool:
    """True iff an order isomorphism between p and q exists."""
    found = find_isomorphism(p, q) is not None
    logger.debug(f"Isomorphism test on {len(p)} and {len(q)} elements: {found}")
    return found

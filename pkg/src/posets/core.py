"""
Poset Construction and Structural Queries

Builds posets from generating relations (reflexive-transitive closure via
networkx) and answers the basic structural questions: relation, covering
relation, elements, heights, forests and chains.
"""
import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from ..common.errors import CycleError
from ..common.schema import CoverPair, Pair, Poset, validate_label

logger = logging.getLogger(__name__)


def first_appearance_order(pairs: Sequence[Pair], extra_vertices: Iterable[str] = ()) -> List[str]:
    """Labels in order of first appearance: pairs left to right, then extras."""
    order: Dict[str, None] = {}
    for a, b in pairs:
        order.setdefault(a, None)
        order.setdefault(b, None)
    for v in extra_vertices:
        order.setdefault(v, None)
    return list(order)


def tag_collisions(labels: Sequence[str], tags: Sequence[int]) -> List[str]:
    """
    Make labels distinct by suffixing `#tag` to every label that occurs more than once.

    A tagged label that still clashes, with an untouched label or an earlier
    tagged one, is suffixed again with its own tag until it is new.

    Args:
        labels: Candidate labels, possibly repeated
        tags: One positive tag per label (summand or block number)

    Returns:
        Distinct labels, untouched wherever the candidate was already unique
    """
    counts = Counter(labels)
    taken = {label for label in labels if counts[label] == 1}
    result = []
    for label, tag in zip(labels, tags):
        if counts[label] == 1:
            result.append(label)
            continue
        candidate = f"{label}#{tag}"
        while candidate in taken:
            candidate = f"{candidate}#{tag}"
        taken.add(candidate)
        result.append(candidate)
    return result


def build_poset(vertex_order: Sequence[str], pairs: Iterable[Pair]) -> Poset:
    """
    Close a generating relation over a fixed vertex order.

    Args:
        vertex_order: Every vertex, in canonical order
        pairs: Generating pairs (a, b) meaning a <= b; reflexive pairs are ignored

    Returns:
        Poset holding the reflexive-transitive closure

    Raises:
        CycleError: if two distinct vertices end up below each other
    """
    repeated = sorted(label for label, count in Counter(vertex_order).items() if count > 1)
    if repeated:
        raise ValueError(f"duplicate vertex labels: {repeated}")
    graph = nx.DiGraph()
    graph.add_nodes_from(vertex_order)
    graph.add_edges_from((a, b) for a, b in pairs if a != b)
    if graph.number_of_nodes() != len(vertex_order):
        unknown = sorted(set(graph.nodes) - set(vertex_order))
        raise ValueError(f"pairs mention vertices outside the vertex order: {unknown}")

    if not nx.is_directed_acyclic_graph(graph):
        cycle = [u for u, _ in nx.find_cycle(graph)]
        logger.debug(f"Rejecting relation with cycle {cycle}")
        raise CycleError(cycle)

    closure = nx.transitive_closure_dag(graph)
    relation = set(closure.edges())
    relation.update((v, v) for v in vertex_order)
    return Poset(vertices=tuple(vertex_order), relation=frozenset(relation))


def poset_from_pairs(pairs: Sequence[Sequence], extra_vertices: Optional[Sequence] = None) -> Poset:
    """
    Generate a poset from any sub-relation of its order.

    A reflexive pair (a, a) only declares vertex a; `extra_vertices` may add
    isolated points. Duplicate pairs are ignored.

    Args:
        pairs: Generating pairs (not necessarily closed)
        extra_vertices: Additional vertices, appended after those seen in pairs

    Returns:
        Poset with canonical order = first appearance

    Raises:
        CycleError: if the closure violates antisymmetry
    """
    labelled = [(validate_label(a), validate_label(b)) for a, b in pairs]
    extras = [validate_label(v) for v in (extra_vertices or [])]
    return build_poset(first_appearance_order(labelled, extras), labelled)


def empty_poset() -> Poset:
    return Poset()


def relation(p: Poset) -> List[Pair]:
    """Full reflexive-transitive relation sorted by canonical positions."""
    return sorted(p.relation, key=p.sort_key)


def strict_relation(p: Poset) -> List[Pair]:
    return [(a, b) for a, b in relation(p) if a != b]


def is_cover(p: Poset, a: str, b: str) -> bool:
    """b covers a: a < b with nothing strictly between."""
    if a == b or not p.leq(a, b):
        return False
    index = p.index
    interval = p.up_mask(a) & p.down_mask(b)
    return interval == (1 << index[a]) | (1 << index[b])


def covering(p: Poset) -> List[CoverPair]:
    """Transitive reduction of the strict order, canonically sorted."""
    return [CoverPair(lower=a, upper=b) for a, b in strict_relation(p) if is_cover(p, a, b)]


def cover_pairs(p: Poset) -> List[Pair]:
    return [c.as_tuple() for c in covering(p)]


def elements(p: Poset) -> List[str]:
    return list(p.vertices)


def hasse_digraph(p: Poset) -> nx.DiGraph:
    """Directed graph of the covering relation, edges pointing upward."""
    graph = nx.DiGraph()
    graph.add_nodes_from(p.vertices)
    graph.add_edges_from(cover_pairs(p))
    return graph


def lower_covers(p: Poset, label: str) -> List[str]:
    return [a for a in p.down_set(label) if is_cover(p, a, label)]


def upper_covers(p: Poset, label: str) -> List[str]:
    return [b for b in p.up_set(label) if is_cover(p, label, b)]


def minimal_elements(p: Poset) -> List[str]:
    return [v for v in p.vertices if p.down_mask(v) == 1 << p.index[v]]


def maximal_elements(p: Poset) -> List[str]:
    return [v for v in p.vertices if p.up_mask(v) == 1 << p.index[v]]


def topological_order(p: Poset) -> List[str]:
    """Vertices sorted so that every element follows everything below it."""
    return sorted(p.vertices, key=lambda v: (bin(p.down_mask(v)).count("1"), p.index[v]))


def heights(p: Poset) -> Dict[str, int]:
    """Longest chain from a minimal element to each vertex, minimal elements at 1."""
    result: Dict[str, int] = {}
    for v in topological_order(p):
        below = [result[u] for u in p.down_set(v) if u != v]
        result[v] = 1 + max(below, default=0)
    return result


def height(p: Poset) -> int:
    """Number of elements in a longest chain (0 for the empty poset)."""
    return max(heights(p).values(), default=0)


def is_chain(p: Poset) -> bool:
    """Every pair of vertices is comparable."""
    n = len(p)
    return len(p.relation) == n * (n + 1) // 2


def is_forest(p: Poset) -> bool:
    """
    Every principal down-set is a chain.

    Equivalent to every vertex having at most one lower cover.
    """
    return all(len(lower_covers(p, v)) <= 1 for v in p.vertices)


def first_non_forest_vertex(p: Poset) -> Optional[str]:
    for v in p.vertices:
        if len(lower_covers(p, v)) > 1:
            return v
    return None


def relabel(p: Poset, mapping: Dict[str, str]) -> Poset:
    """Rename vertices; the canonical order follows the old one."""
    vertices = tuple(mapping[v] for v in p.vertices)
    return Poset(vertices=vertices, relation=frozenset((mapping[a], mapping[b]) for a, b in p.relation))


"""
Quotient Posets

Turns partitions into posets of blocks. A block is labelled by concatenating
its members' labels in canonical order, so the partition {x, y | z} of
x < y, x < z becomes the chain xy < z. When two blocks would share a label
(blocks {1, 2} and {12}) both are tagged with their block number.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..common.errors import NotRegularError
from ..common.schema import MonotonePartition, Pair, Poset, QuotientPoset, SetPartition
from ..posets.core import build_poset, cover_pairs, hasse_digraph, tag_collisions
from .regular import block_digraph, check_covers_vertices

logger = logging.getLogger(__name__)


def block_label(members: Sequence[str]) -> str:
    return "".join(members)


def block_labels(blocks: Sequence[Sequence[str]]) -> List[str]:
    """Concatenated labels, tagged `#k` (k = 1-based block number) where two coincide."""
    return tag_collisions([block_label(block) for block in blocks], range(1, len(blocks) + 1))


def _block_map(blocks: Sequence[Tuple[str, ...]], labels: Sequence[str]) -> Dict[str, str]:
    return {v: label for block, label in zip(blocks, labels) for v in block}


def partition_to_poset(mp: MonotonePartition) -> QuotientPoset:
    """
    Collapse each symmetric class of a preorder into one element.

    Block B <= B' iff a <= b in the preorder for representatives a in B, b in B'.
    """
    blocks = mp.blocks()
    labels = block_labels(blocks)
    relation = frozenset(
        (labels[i], labels[j])
        for i, bi in enumerate(blocks)
        for j, bj in enumerate(blocks)
        if (bi[0], bj[0]) in mp.preorder
    )
    return QuotientPoset(poset=Poset(vertices=tuple(labels), relation=relation), block_map=_block_map(blocks, labels))


def regular_to_poset(sp: SetPartition, p: Poset) -> QuotientPoset:
    """
    Order the blocks of a regular partition by the closure of its block digraph.

    Raises:
        NotRegularError: if the block digraph has a cycle
        PartitionMismatchError: if sp does not partition p's vertices
    """
    graph = block_digraph(sp, p)
    labels = block_labels(sp.blocks)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [labels[b] for b, _ in nx.find_cycle(graph)]
        raise NotRegularError(f"block digraph has a cycle through {' -> '.join(cycle)}")
    quotient = build_poset(labels, [(labels[a], labels[b]) for a, b in graph.edges])
    return QuotientPoset(poset=quotient, block_map=_block_map(sp.blocks, labels))


def as_preorder(sp: SetPartition, p: Poset) -> MonotonePartition:
    """
    The preorder generated by p's order and the block equivalence.

    Raises:
        NotRegularError: if the closure merges blocks (the partition is not regular)
    """
    check_covers_vertices(sp, p)
    graph = nx.DiGraph()
    graph.add_nodes_from(p.vertices)
    graph.add_edges_from(cover_pairs(p))
    for block in sp.blocks:
        graph.add_edges_from((a, b) for a in block for b in block if a != b)
    closure = nx.transitive_closure(graph, reflexive=True)
    mp = MonotonePartition(base=p, preorder=frozenset(closure.edges()))
    if {frozenset(b) for b in mp.blocks()} != {frozenset(b) for b in sp.blocks}:
        raise NotRegularError(
            f"closing {[list(b) for b in sp.blocks]} merges blocks into {[list(b) for b in mp.blocks()]}"
        )
    return mp


def quotient_of(item: Union[MonotonePartition, SetPartition], base: Optional[Poset] = None) -> QuotientPoset:
    """Quotient of either partition kind; set partitions need their base poset."""
    if isinstance(item, MonotonePartition):
        return partition_to_poset(item)
    if base is None:
        raise ValueError("a set partition needs its base poset to form a quotient")
    return regular_to_poset(item, base)


def describe_partition(item: Union[MonotonePartition, SetPartition], base: Optional[Poset] = None) -> str:
    """Block-label chains such as `xy<z`; bare blocks joined by `|` without a base."""
    if isinstance(item, SetPartition) and base is None:
        return "|".join(block_labels(item.blocks))
    return quotient_of(item, base).describe()


def _extension_key(order: Sequence[str], p: Poset) -> List[Pair]:
    """Sorted pairs a linear extension adds to p; all extensions add equally many."""
    index = p.index
    added = [
        (order[i], order[j])
        for i in range(len(order)) for j in range(i + 1, len(order))
        if (order[i], order[j]) not in p.relation
    ]
    return sorted((index[a], index[b]) for a, b in added)


def linear_extensions(p: Poset) -> List[QuotientPoset]:
    """
    Linear extensions of p as chains of singleton blocks.

    These are exactly the antisymmetric, total monotone partitions, listed in
    the same relative order the monotone enumeration produces them.
    """
    if len(p) == 0:
        return [QuotientPoset(poset=Poset(), block_map={})]
    orders = [list(order) for order in nx.all_topological_sorts(hasse_digraph(p))]
    orders.sort(key=lambda order: _extension_key(order, p))
    logger.debug(f"Found {len(orders)} linear extensions of a {len(p)}-element poset")
    result = []
    for order in orders:
        chain_poset = Poset(
            vertices=tuple(order),
            relation=frozenset((order[i], order[j]) for i in range(len(order)) for j in range(i, len(order))),
        )
        result.append(QuotientPoset(poset=chain_poset, block_map={v: v for v in order}))
    return result

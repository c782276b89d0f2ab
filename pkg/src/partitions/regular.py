"""
Regular Partition Enumeration

A set partition of a poset is regular when its block digraph (B -> B' iff
some x in B is below some y in B', B != B') is acyclic. Every set partition
of the vertex set is analyzed, walking restricted growth strings in
lexicographic order; the kept partitions are then ordered by block count,
descending, so the discrete partition comes first and the single block last.
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..common.config import get_settings, resolve_limit
from ..common.errors import GuardExceeded, PartitionMismatchError
from ..common.schema import EnumerationReport, PartitionKind, Poset, SetPartition
from ..posets.core import cover_pairs

logger = logging.getLogger(__name__)


def restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """
    All restricted growth strings of length n in lexicographic order.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); each string encodes one set
    partition (a[i] is the block of the i-th element).
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    prefix_max = [0] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == prefix_max[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        prefix_max[i] = max(prefix_max[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            prefix_max[j] = prefix_max[i]


def bell_count(n: int) -> int:
    """Number of set partitions of an n-set, via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def partition_from_rgs(rgs: Sequence[int], p: Poset) -> SetPartition:
    """Blocks ordered by least member, members in canonical order."""
    blocks: List[List[str]] = [[] for _ in range(max(rgs, default=-1) + 1)]
    for label, block in zip(p.vertices, rgs):
        blocks[block].append(label)
    return SetPartition(blocks=tuple(tuple(b) for b in blocks))


def _acyclic_blocks(rgs: Sequence[int], covers: Sequence[Tuple[int, int]]) -> bool:
    """Kahn's algorithm over the block digraph induced by the cover edges."""
    k = max(rgs, default=-1) + 1
    successors: List[set] = [set() for _ in range(k)]
    for i, j in covers:
        bi, bj = rgs[i], rgs[j]
        if bi != bj:
            successors[bi].add(bj)
    indegree = [0] * k
    for targets in successors:
        for t in targets:
            indegree[t] += 1
    ready = [b for b in range(k) if indegree[b] == 0]
    seen = 0
    while ready:
        b = ready.pop()
        seen += 1
        for t in successors[b]:
            indegree[t] -= 1
            if indegree[t] == 0:
                ready.append(t)
    return seen == k


def check_covers_vertices(sp: SetPartition, p: Poset) -> None:
    """
    Raises:
        PartitionMismatchError: if the blocks do not cover exactly p's vertices
    """
    if sp.labels() != frozenset(p.vertices) or sum(len(b) for b in sp.blocks) != len(p):
        raise PartitionMismatchError(
            f"blocks {[list(b) for b in sp.blocks]} do not partition the vertices {list(p.vertices)}"
        )


def block_digraph(sp: SetPartition, p: Poset) -> nx.DiGraph:
    """Digraph over block numbers with an edge per order-related pair of blocks."""
    check_covers_vertices(sp, p)
    block_of = sp.block_of()
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(sp.blocks)))
    graph.add_edges_from(
        (block_of[a], block_of[b]) for a, b in cover_pairs(p) if block_of[a] != block_of[b]
    )
    return graph


def is_regular(sp: SetPartition, p: Poset) -> bool:
    return nx.is_directed_acyclic_graph(block_digraph(sp, p))


def check_regular_guard(p: Poset, max_vertices: Optional[int] = None, force: bool = False) -> None:
    limit = resolve_limit(max_vertices, get_settings().regular_max_vertices)
    if len(p) > limit and not force:
        raise GuardExceeded("regular enumeration poset", len(p), limit)


def iter_regular_partitions(
    p: Poset,
    max_vertices: Optional[int] = None,
    force: bool = False,
) -> Iterator[SetPartition]:
    """Stream regular partitions in restricted-growth-string order."""
    check_regular_guard(p, max_vertices, force)
    index = p.index
    covers = [(index[a], index[b]) for a, b in cover_pairs(p)]
    for rgs in restricted_growth_strings(len(p)):
        if _acyclic_blocks(rgs, covers):
            yield partition_from_rgs(rgs, p)


def regular_partitions(
    p: Poset,
    max_vertices: Optional[int] = None,
    force: bool = False,
) -> Tuple[List[SetPartition], EnumerationReport]:
    """
    Generate all regular partitions of a poset.

    Returns:
        (partitions by block count descending, report with analyzed = Bell(|p|))
    """
    check_regular_guard(p, max_vertices, force)
    logger.info(f"Enumerating regular partitions of a {len(p)}-element poset")
    items = list(iter_regular_partitions(p, max_vertices, force))
    items.sort(key=lambda sp: -len(sp.blocks))
    report = EnumerationReport(kind=PartitionKind.REGULAR, analyzed=bell_count(len(p)), found=len(items))
    logger.info(report.trace_line())
    return items, report


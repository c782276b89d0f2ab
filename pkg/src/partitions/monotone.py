"""
Monotone Partition Enumeration

The monotone partitions of a poset are the preorders on its vertex set that
contain its order. Candidates are the order relation plus any subset S of the
pairs (a, b), a != b, missing from it; every subset is analyzed, and the
transitive ones are kept.

Candidates are visited by |S| ascending, ties in lexicographic order of the
sorted pair list, and evaluated in numpy batches (one batched matrix product
per batch) without changing the emitted order.
"""
import itertools
import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..common.config import get_settings, resolve_limit
from ..common.errors import GuardExceeded
from ..common.schema import EnumerationReport, MonotonePartition, Pair, PartitionKind, Poset

logger = logging.getLogger(__name__)


def candidate_pairs(p: Poset) -> List[Pair]:
    """Ordered pairs of distinct vertices not in the order, canonically sorted."""
    vertices = p.vertices
    return [
        (a, b) for a in vertices for b in vertices
        if a != b and (a, b) not in p.relation
    ]


def check_monotone_guard(p: Poset, max_candidates: Optional[int] = None, force: bool = False) -> int:
    """
    Refuse searches over too many candidate pairs.

    Returns:
        Number of candidate pairs

    Raises:
        GuardExceeded: if the count is above the limit and force is off
    """
    count = len(candidate_pairs(p))
    limit = resolve_limit(max_candidates, get_settings().monotone_max_candidates)
    if count > limit and not force:
        raise GuardExceeded("monotone candidate set", count, limit)
    return count


def transitive_rows(base: np.ndarray, rows: np.ndarray, cols: np.ndarray, chosen: np.ndarray) -> np.ndarray:
    """
    Evaluate a batch of candidate relations.

    Args:
        base: n x n boolean order matrix
        rows, cols: positions of every candidate pair
        chosen: (batch, k) indices of the pairs added by each candidate

    Returns:
        Boolean vector, True where base plus the chosen pairs is transitive
    """
    size = chosen.shape[0]
    n = base.shape[0]
    rel = np.broadcast_to(base, (size, n, n)).copy()
    if chosen.shape[1]:
        rel[np.arange(size)[:, None], rows[chosen], cols[chosen]] = True
    counts = rel.astype(np.int32)
    two_step = np.matmul(counts, counts) > 0
    return ~np.any(two_step & ~rel, axis=(1, 2))


def iter_monotone_partitions(
    p: Poset,
    max_candidates: Optional[int] = None,
    force: bool = False,
    batch_size: Optional[int] = None,
) -> Iterator[MonotonePartition]:
    """
    Stream the monotone partitions of p in canonical order.

    Args:
        p: Poset to partition
        max_candidates: Guard override on the number of candidate pairs
        force: Ignore the guard
        batch_size: Candidates per numpy batch (default from settings)

    Yields:
        MonotonePartition instances
    """
    check_monotone_guard(p, max_candidates, force)
    batch_size = resolve_limit(batch_size, get_settings().batch_size)
    candidates = candidate_pairs(p)
    index = p.index
    base = p.to_matrix()
    rows = np.array([index[a] for a, _ in candidates], dtype=np.intp)
    cols = np.array([index[b] for _, b in candidates], dtype=np.intp)

    for k in range(len(candidates) + 1):
        combos = itertools.combinations(range(len(candidates)), k)
        while True:
            batch = list(itertools.islice(combos, batch_size))
            if not batch:
                break
            chosen = np.array(batch, dtype=np.intp).reshape(len(batch), k)
            keep = transitive_rows(base, rows, cols, chosen)
            logger.debug(f"|S|={k}: batch of {len(batch)} candidates, {int(keep.sum())} transitive")
            for combo, ok in zip(batch, keep):
                if ok:
                    added = frozenset(candidates[i] for i in combo)
                    yield MonotonePartition(base=p, preorder=p.relation | added)


def monotone_partitions(
    p: Poset,
    max_candidates: Optional[int] = None,
    force: bool = False,
    batch_size: Optional[int] = None,
) -> Tuple[List[MonotonePartition], EnumerationReport]:
    """
    Generate all monotone partitions of a poset.

    Returns:
        (partitions in canonical order, report with analyzed = 2^|candidates|)
    """
    count = check_monotone_guard(p, max_candidates, force)
    logger.info(f"Enumerating monotone partitions of a {len(p)}-element poset ({count} candidate pairs)")
    items = list(iter_monotone_partitions(p, max_candidates, force, batch_size))
    report = EnumerationReport(kind=PartitionKind.MONOTONE, analyzed=2 ** count, found=len(items))
    logger.info(report.trace_line())
    return items, report

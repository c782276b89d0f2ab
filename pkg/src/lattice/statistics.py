"""
Lattice Statistics

Möbius values from the bottom, atoms, coatoms and Whitney levels of a
partition lattice. Every function also takes a plain bounded Poset, whose
positions are its vertices in canonical order.
"""
import logging
from typing import List, Union

import numpy as np
import pandas as pd

from ..common.errors import NotALatticeError
from ..common.schema import PartitionLattice, Poset
from .builder import captions

logger = logging.getLogger(__name__)

OrderLike = Union[PartitionLattice, Poset]

STATISTICS_COLUMNS = ["position", "partition", "height", "moebius", "atom", "coatom"]


def leq_matrix(order: OrderLike) -> np.ndarray:
    if isinstance(order, PartitionLattice):
        return order.leq_matrix()
    return order.to_matrix()


def strict_matrix(leq: np.ndarray) -> np.ndarray:
    return leq & ~np.eye(leq.shape[0], dtype=bool)


def cover_matrix(leq: np.ndarray) -> np.ndarray:
    """[i, j] set iff j covers i."""
    strict = strict_matrix(leq).astype(np.float32)
    return (strict > 0) & ~((strict @ strict) > 0)


def topological_positions(leq: np.ndarray) -> np.ndarray:
    """Positions sorted by down-set size; every element follows everything below it."""
    return np.argsort(leq.sum(axis=0), kind="stable")


def bottom_position(order: OrderLike) -> int:
    """0-based position of the least element."""
    leq = leq_matrix(order)
    found = np.flatnonzero(leq.all(axis=1))
    if not len(found):
        raise NotALatticeError("order has no bottom element")
    return int(found[0])


def top_position(order: OrderLike) -> int:
    leq = leq_matrix(order)
    found = np.flatnonzero(leq.all(axis=0))
    if not len(found):
        raise NotALatticeError("order has no top element")
    return int(found[0])


def moebius(order: OrderLike) -> List[int]:
    """
    mu(bottom, x) for every position x.

    mu(bottom, bottom) = 1 and mu(bottom, x) = -sum of mu(bottom, z) over z < x.

    Raises:
        NotALatticeError: if there is no bottom element
    """
    leq = leq_matrix(order)
    bottom = bottom_position(order)
    strict = strict_matrix(leq)
    mu = np.zeros(leq.shape[0], dtype=np.int64)
    for x in topological_positions(leq):
        mu[x] = 1 if x == bottom else -mu[strict[:, x]].sum()
    return mu.tolist()


def heights(order: OrderLike) -> List[int]:
    """Length of the longest chain ending at each position; minimal elements have height 1."""
    leq = leq_matrix(order)
    strict = strict_matrix(leq)
    result = np.zeros(leq.shape[0], dtype=np.int64)
    for x in topological_positions(leq):
        below = result[strict[:, x]]
        result[x] = 1 + (below.max() if len(below) else 0)
    return result.tolist()


def atoms_positions(order: OrderLike) -> List[int]:
    """1-based positions covering the bottom."""
    leq = leq_matrix(order)
    covers = cover_matrix(leq)
    return [int(j) + 1 for j in np.flatnonzero(covers[bottom_position(order)])]


def coatoms_positions(order: OrderLike) -> List[int]:
    """1-based positions covered by the top."""
    leq = leq_matrix(order)
    covers = cover_matrix(leq)
    return [int(i) + 1 for i in np.flatnonzero(covers[:, top_position(order)])]


def whitney_levels(order: OrderLike) -> List[int]:
    """Height of each position, in position order."""
    return heights(order)


def whitney_numbers(order: OrderLike) -> List[int]:
    """Number of positions at each height 1..max."""
    levels = heights(order)
    if not levels:
        return []
    return np.bincount(np.asarray(levels), minlength=max(levels) + 1)[1:].tolist()


def is_ranked(order: OrderLike) -> bool:
    """True iff every cover raises the height by exactly one."""
    leq = leq_matrix(order)
    levels = np.asarray(heights(order))
    rows, cols = np.nonzero(cover_matrix(leq))
    return bool(np.all(levels[cols] == levels[rows] + 1))


def lattice_statistics(order: OrderLike) -> pd.DataFrame:
    """
    One row per position with its caption, height, Möbius value and atom/coatom flags.

    Returns:
        DataFrame with STATISTICS_COLUMNS
    """
    if isinstance(order, PartitionLattice):
        names = captions(order)
        labels = [names[str(k)] for k in range(1, len(order) + 1)]
    else:
        labels = list(order.vertices)
    atoms = set(atoms_positions(order))
    coatoms = set(coatoms_positions(order))
    frame = pd.DataFrame(
        {
            "position": range(1, len(labels) + 1),
            "partition": labels,
            "height": heights(order),
            "moebius": moebius(order),
        }
    )
    frame["atom"] = frame["position"].isin(atoms)
    frame["coatom"] = frame["position"].isin(coatoms)
    logger.debug(f"Computed statistics for {len(frame)} lattice positions")
    return frame[STATISTICS_COLUMNS]

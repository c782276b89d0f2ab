"""
Partition Lattice Construction

Both partition kinds are relations on the base vertex set: a monotone
partition is its preorder, a regular partition its block equivalence. In
both cases the lattice order is inclusion of those relations (for set
partitions this is refinement). Inclusion for all pairs is one matrix
product over flattened relation vectors.
"""
import logging
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from ..common.config import get_settings, resolve_limit
from ..common.errors import NotALatticeError
from ..common.schema import MonotonePartition, PartitionKind, PartitionLattice, Poset, SetPartition
from ..partitions.quotient import describe_partition
from ..posets.hasse import hasse_dot

logger = logging.getLogger(__name__)

Partition = Union[MonotonePartition, SetPartition]


def relation_vectors(items: Sequence[Partition], kind: PartitionKind, base: Poset) -> np.ndarray:
    """
    Flatten each partition into its n*n relation indicator.

    Returns:
        Boolean array of shape (len(items), n*n)
    """
    n = len(base)
    index = base.index
    vectors = np.zeros((len(items), n, n), dtype=bool)
    for k, item in enumerate(items):
        if kind == PartitionKind.MONOTONE:
            for a, b in item.preorder:
                vectors[k, index[a], index[b]] = True
        else:
            for block in item.blocks:
                positions = [index[v] for v in block]
                vectors[k][np.ix_(positions, positions)] = True
    return vectors.reshape(len(items), n * n)


def inclusion_order(vectors: np.ndarray) -> np.ndarray:
    """[i, j] set iff relation i is contained in relation j."""
    present = vectors.astype(np.float32)
    absent = (~vectors).astype(np.float32)
    return (present @ absent.T) == 0


def row_masks(matrix: np.ndarray) -> List[int]:
    """Each boolean row as a Python int bitmask (bit j = column j)."""
    return [
        int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
        for row in matrix
    ]


def check_bounded(leq: np.ndarray) -> None:
    n = leq.shape[0]
    if n == 0:
        raise NotALatticeError("an empty order has no bottom")
    if not np.any(leq.all(axis=1)):
        raise NotALatticeError("order has no bottom element")
    if not np.any(leq.all(axis=0)):
        raise NotALatticeError("order has no top element")


def check_meets_and_joins(leq: np.ndarray) -> None:
    """
    Every pair needs a join and a meet.

    The upper bounds of i and j form a principal up-set exactly when their
    join exists, so the check is a lookup of up[i] & up[j] among the up-sets.

    Raises:
        NotALatticeError: naming the first offending pair (1-based positions)
    """
    up = row_masks(leq)
    down = row_masks(leq.T)
    up_sets = set(up)
    down_sets = set(down)
    n = len(up)
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] & up[j] not in up_sets:
                raise NotALatticeError(f"positions {i + 1} and {j + 1} have no join")
            if down[i] & down[j] not in down_sets:
                raise NotALatticeError(f"positions {i + 1} and {j + 1} have no meet")


def order_from_matrix(leq: np.ndarray) -> Poset:
    """Poset over position labels "1".."n"."""
    labels = tuple(str(i) for i in range(1, leq.shape[0] + 1))
    rows, cols = np.nonzero(leq)
    return Poset(
        vertices=labels,
        relation=frozenset((labels[i], labels[j]) for i, j in zip(rows.tolist(), cols.tolist())),
    )


def build_lattice(
    items: Sequence[Partition],
    kind: Union[PartitionKind, str],
    base: Optional[Poset] = None,
    check_limit: Optional[int] = None,
) -> PartitionLattice:
    """
    Order a complete partition list into a lattice.

    Args:
        items: Full output of monotone_partitions or regular_partitions
        kind: "monotone" or "regular"
        base: The partitioned poset (inferred for monotone partitions)
        check_limit: Largest lattice whose meets and joins are verified exhaustively

    Returns:
        PartitionLattice with positions 1..len(items)

    Raises:
        NotALatticeError: if the order is unbounded or a pair lacks a meet or join
    """
    kind = PartitionKind(kind)
    if not items:
        raise ValueError("cannot build a lattice from an empty partition list")
    expected = MonotonePartition if kind == PartitionKind.MONOTONE else SetPartition
    stray = [k + 1 for k, item in enumerate(items) if not isinstance(item, expected)]
    if stray:
        raise ValueError(f"{kind.value} lattice got other partition types at positions {stray}")
    if kind == PartitionKind.MONOTONE:
        base = base or items[0].base
    elif base is None:
        vertices = tuple(v for block in items[0].blocks for v in block)
        base = Poset(vertices=vertices, relation=frozenset((v, v) for v in vertices))

    leq = inclusion_order(relation_vectors(items, kind, base))
    check_bounded(leq)
    limit = resolve_limit(check_limit, get_settings().lattice_check_max)
    if len(items) <= limit:
        check_meets_and_joins(leq)
    else:
        logger.warning(f"Skipping exhaustive meet/join check: {len(items)} elements > {limit}")

    lattice = PartitionLattice(kind=kind, items=tuple(items), order=order_from_matrix(leq), base=base)
    lattice._leq = leq
    logger.info(f"Built {kind.value} partition lattice with {len(items)} elements")
    return lattice


def captions(lattice: PartitionLattice) -> Dict[str, str]:
    """Position label -> block-label description of its partition."""
    base = lattice.base if lattice.kind == PartitionKind.REGULAR else None
    return {
        str(k): describe_partition(item, base)
        for k, item in enumerate(lattice.items, 1)
    }


def lattice_dot(lattice: PartitionLattice) -> str:
    """Hasse diagram of the lattice; node text is `position: partition`."""
    text = {position: f"{position}: {caption}" for position, caption in captions(lattice).items()}
    return hasse_dot([lattice.order], 1, captions=[text], titles=[f"{lattice.kind} partitions"], name="lattice")

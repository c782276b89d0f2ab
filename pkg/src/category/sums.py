"""
Coproducts

In both categories the coproduct is the disjoint union. A label that occurs
in more than one summand is tagged `label#k` (k = 1-based summand index) in
every summand where it occurs; other labels are kept. A tag that lands on an
existing label is repeated until the label is new.
"""
import logging
from typing import Dict, List, Sequence

from ..common.schema import Poset, PosetMap
from ..posets.core import tag_collisions
from .maps import require_forest

logger = logging.getLogger(__name__)


def summand_labels(ps: Sequence[Poset]) -> List[Dict[str, str]]:
    """Per summand, old label -> label in the sum."""
    tags = [k for k, p in enumerate(ps, 1) for _ in p.vertices]
    renamed = iter(tag_collisions([v for p in ps for v in p.vertices], tags))
    return [{v: next(renamed) for v in p.vertices} for p in ps]


def poset_sum(ps: Sequence[Poset]) -> Poset:
    """
    Disjoint union; vertices keep summand order, then canonical order within each.

    Returns:
        Poset whose order is the union of the (relabelled) summand orders
    """
    renames = summand_labels(ps)
    vertices = tuple(rename[v] for p, rename in zip(ps, renames) for v in p.vertices)
    relation = frozenset(
        (rename[a], rename[b]) for p, rename in zip(ps, renames) for a, b in p.relation
    )
    tagged = sum(1 for rename in renames for v, new in rename.items() if v != new)
    if tagged:
        logger.debug(f"Tagged {tagged} colliding labels in a sum of {len(ps)} posets")
    return Poset(vertices=vertices, relation=relation)


def forest_sum(ps: Sequence[Poset]) -> Poset:
    """
    Disjoint union of forests.

    Raises:
        NotAForestError: if a summand is not a forest
    """
    for p in ps:
        require_forest(p)
    return poset_sum(ps)


def sum_injections(ps: Sequence[Poset]) -> List[PosetMap]:
    """The coproduct injections, one per summand."""
    total = poset_sum(ps)
    return [
        PosetMap(source=p, target=total, assignment=dict(rename))
        for p, rename in zip(ps, summand_labels(ps))
    ]

"""
Products

Posets with monotone maps: the Cartesian product with the componentwise
order, labels "(a,b)".

Forests with open maps: elements are synchronized chains. Starting from a
pair of roots, each step moves one or both components to an upper cover, so
the first components of a trace are exactly the down-set of the top's first
component (likewise for the second). One chain is below another iff it is an
initial segment of it, which makes the product a forest again.

n-ary products fold left over the binary ones.
"""
import logging
from functools import reduce
from typing import Dict, Iterator, List, Sequence, Union

from ..common.schema import Category, Pair, Poset, PosetMap, ProductCone, SyncChain
from ..posets.core import minimal_elements, upper_covers
from .maps import require_forest

logger = logging.getLogger(__name__)


def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def _fold(ps: Sequence[Poset], binary) -> Poset:
    if not ps:
        raise ValueError("a product needs at least one poset")
    return reduce(binary, ps[1:], ps[0])


def _binary_poset_product(p: Poset, q: Poset) -> Poset:
    vertices = tuple(pair_label(a, b) for a in p.vertices for b in q.vertices)
    relation = frozenset(
        (pair_label(a, b), pair_label(c, d))
        for a, c in p.relation
        for b, d in q.relation
    )
    return Poset(vertices=vertices, relation=relation)


def poset_product(ps: Sequence[Poset]) -> Poset:
    """Cartesian product ordered componentwise; any empty factor gives the empty poset."""
    result = _fold(ps, _binary_poset_product)
    logger.debug(f"Poset product of {len(ps)} factors has {len(result)} elements")
    return result


def poset_product_cone(p: Poset, q: Poset) -> ProductCone:
    apex = _binary_poset_product(p, q)
    first = {pair_label(a, b): a for a in p.vertices for b in q.vertices}
    second = {pair_label(a, b): b for a in p.vertices for b in q.vertices}
    return ProductCone(
        category=Category.POSET,
        apex=apex,
        projections=(
            PosetMap(source=apex, target=p, assignment=first),
            PosetMap(source=apex, target=q, assignment=second),
        ),
    )


def _steps(f: Poset, g: Poset, top: Pair) -> Iterator[Pair]:
    """Successor pairs: advance the first, the second, or both components."""
    x, y = top
    xs = upper_covers(f, x)
    ys = upper_covers(g, y)
    for x2 in xs:
        yield (x2, y)
    for y2 in ys:
        yield (x, y2)
    for x2 in xs:
        for y2 in ys:
            yield (x2, y2)


def sync_chains(f: Poset, g: Poset) -> List[SyncChain]:
    """
    All synchronized chains of two forests, in depth-first preorder.

    Raises:
        NotAForestError: if either input is not a forest
    """
    require_forest(f)
    require_forest(g)
    chains: List[SyncChain] = []
    stack = [
        SyncChain(trace=((x, y),))
        for x in reversed(minimal_elements(f))
        for y in reversed(minimal_elements(g))
    ]
    while stack:
        chain = stack.pop()
        chains.append(chain)
        stack.extend(chain.extend(step) for step in reversed(list(_steps(f, g, chain.top))))
    return chains


def _chain_poset(chains: Sequence[SyncChain]) -> Poset:
    labels: Dict[tuple, str] = {chain.trace: chain.label for chain in chains}
    relation = frozenset(
        (labels[chain.trace[:k]], chain.label)
        for chain in chains
        for k in range(1, len(chain.trace) + 1)
    )
    return Poset(vertices=tuple(chain.label for chain in chains), relation=relation)


def forest_product_cone(f: Poset, g: Poset) -> ProductCone:
    """Forest product with the projections taking a chain to its top's components."""
    chains = sync_chains(f, g)
    apex = _chain_poset(chains)
    return ProductCone(
        category=Category.FOREST,
        apex=apex,
        projections=(
            PosetMap(source=apex, target=f, assignment={c.label: c.top[0] for c in chains}),
            PosetMap(source=apex, target=g, assignment={c.label: c.top[1] for c in chains}),
        ),
    )


def forest_product(f: Poset, g: Poset) -> Poset:
    """
    Product in the category of forests and open maps.

    Raises:
        NotAForestError: if either input is not a forest
    """
    apex = _chain_poset(sync_chains(f, g))
    logger.debug(f"Forest product of {len(f)} and {len(g)} elements has {len(apex)} elements")
    return apex


def forest_product_many(ps: Sequence[Poset]) -> Poset:
    return _fold(ps, forest_product)


def product_cone(category: Union[Category, str], p: Poset, q: Poset) -> ProductCone:
    if Category(category) == Category.FOREST:
        return forest_product_cone(p, q)
    return poset_product_cone(p, q)


def product(category: Union[Category, str], ps: Sequence[Poset]) -> Poset:
    """n-ary product in the named category."""
    if Category(category) == Category.FOREST:
        return forest_product_many(ps)
    return poset_product(ps)

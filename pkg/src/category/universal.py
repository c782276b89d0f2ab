"""
Universal Property Check

A cone (apex, pi1, pi2) over p and q is a product iff for every test object T
and every pair of maps f: T -> p, g: T -> q there is exactly one map
h: T -> apex with pi1 . h = f and pi2 . h = g. For each pair the search only
tries, at every vertex t, the apex elements over (f(t), g(t)), and stops at
the second lift.
"""
import logging
from collections import defaultdict
from itertools import islice
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..common.schema import Category, Poset
from .maps import check_map_guard, is_category_map, order_masks, require_forest, search_images
from .products import product_cone

logger = logging.getLogger(__name__)


def check_product_universal(
    category: Union[Category, str],
    p: Poset,
    q: Poset,
    witnesses: Sequence[Poset],
    max_source: Optional[int] = None,
    force: bool = False,
) -> bool:
    """
    Verify the product of p and q against a family of test objects.

    Args:
        category: "poset" (monotone maps) or "forest" (open maps)
        p, q: Factors
        witnesses: Test objects T
        max_source: Guard override on |T|

    Returns:
        True iff both projections are maps of the category and every pair
        (f, g) factors through exactly one h

    Raises:
        NotAForestError: if a forest-category input is not a forest
        GuardExceeded: if a witness is above the map-enumeration guard
    """
    category = Category(category)
    for t in witnesses:
        check_map_guard(t, max_source, force)
    if category == Category.FOREST:
        for poset in (p, q, *witnesses):
            require_forest(poset)

    cone = product_cone(category, p, q)
    first, second = cone.projections
    if not (is_category_map(category, first) and is_category_map(category, second)):
        logger.info(f"Projections of the {category.value} cone are not maps of the category")
        return False

    p_index, q_index = p.index, q.index
    fibres: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for k, v in enumerate(cone.apex.vertices):
        fibres[(p_index[first(v)], q_index[second(v)])].append(k)
    apex_masks, p_masks, q_masks = order_masks(cone.apex), order_masks(p), order_masks(q)
    open_only = category == Category.FOREST

    for k, t in enumerate(witnesses, 1):
        t_masks = order_masks(t)
        into_p = list(search_images(t_masks, p_masks, open_only=open_only))
        into_q = list(search_images(t_masks, q_masks, open_only=open_only))
        for f in into_p:
            for g in into_q:
                candidates = [fibres.get(pair, ()) for pair in zip(f, g)]
                lifts = sum(1 for _ in islice(search_images(t_masks, apex_masks, candidates, open_only), 2))
                if lifts != 1:
                    logger.info(
                        f"Witness {k} ({len(t)} elements): pair {f}, {g} factors "
                        f"{'more than once' if lifts else 'through no map'}"
                    )
                    return False
        logger.debug(f"Witness {k}: {len(into_p) * len(into_q)} pairs factor uniquely")
    return True

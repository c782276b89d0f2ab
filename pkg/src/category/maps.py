"""
Maps Between Posets

Predicates for the two categories (monotone maps, open maps) and exhaustive
enumeration of their hom-sets. Enumeration backtracks over the source's
canonical order, trying target vertices in the target's canonical order, so
maps come out in lexicographic assignment order.
"""
import logging
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..common.config import get_settings, resolve_limit
from ..common.errors import GuardExceeded, NotAForestError
from ..common.schema import Category, Poset, PosetMap
from ..posets.core import first_non_forest_vertex

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


def is_monotone_map(m: PosetMap) -> bool:
    return m.preserves_order()


def is_open_map(m: PosetMap) -> bool:
    """Monotone, and the image of every down-set is the down-set of the image."""
    return m.preserves_order() and m.preserves_down_sets()


def is_category_map(category: Union[Category, str], m: PosetMap) -> bool:
    if Category(category) == Category.FOREST:
        return is_open_map(m)
    return is_monotone_map(m)


def require_forest(p: Poset) -> None:
    """
    Raises:
        NotAForestError: naming the first vertex with two lower covers
    """
    bad = first_non_forest_vertex(p)
    if bad is not None:
        raise NotAForestError(bad)


def check_map_guard(source: Poset, max_source: Optional[int] = None, force: bool = False) -> None:
    limit = resolve_limit(max_source, get_settings().map_max_source)
    if len(source) > limit and not force:
        raise GuardExceeded("map enumeration source", len(source), limit)


class OrderMasks(NamedTuple):
    """Up- and down-set bitmasks of a poset, by canonical position."""
    up: List[int]
    down: List[int]


def order_masks(p: Poset) -> OrderMasks:
    return OrderMasks(
        up=[p.up_mask(v) for v in p.vertices],
        down=[p.down_mask(v) for v in p.vertices],
    )


def _opens(source_down: Sequence[int], target_down: Sequence[int], images: Sequence[int]) -> bool:
    for i, down in enumerate(source_down):
        mask = 0
        for j, t in enumerate(images):
            if down >> j & 1:
                mask |= 1 << t
        if mask != target_down[images[i]]:
            return False
    return True


def search_images(
    source: OrderMasks,
    target: OrderMasks,
    candidates: Optional[Sequence[Sequence[int]]] = None,
    open_only: bool = False,
) -> Iterator[Images]:
    """
    Image index tuples of monotone (or open) maps, lexicographically.

    A partial assignment is extended only while it preserves the order among
    the vertices already placed; openness is checked once a map is complete.

    Args:
        source: Masks of the source poset
        target: Masks of the target poset
        candidates: Per source position, the ascending target positions it may take
            (default: all of them)
        open_only: Keep only open maps
    """
    n, m = len(source.up), len(target.up)
    if n == 0:
        yield ()
        return
    up, down, target_up = source.up, source.down, target.up
    images = [0] * n

    def place(i: int) -> Iterator[Images]:
        for t in range(m) if candidates is None else candidates[i]:
            fits = True
            for j in range(i):
                if down[i] >> j & 1 and not target_up[images[j]] >> t & 1:
                    fits = False
                    break
                if up[i] >> j & 1 and not target_up[t] >> images[j] & 1:
                    fits = False
                    break
            if not fits:
                continue
            images[i] = t
            if i + 1 < n:
                yield from place(i + 1)
            elif not open_only or _opens(down, target.down, images):
                yield tuple(images)

    yield from place(0)


def iter_monotone_images(source: Poset, target: Poset) -> Iterator[Images]:
    """Image index tuples of all monotone maps, lexicographically."""
    return search_images(order_masks(source), order_masks(target))


def iter_category_images(category: Union[Category, str], source: Poset, target: Poset) -> Iterator[Images]:
    """Image tuples of the category's maps source -> target."""
    open_only = Category(category) == Category.FOREST
    return search_images(order_masks(source), order_masks(target), open_only=open_only)


def _as_map(source: Poset, target: Poset, images: Images) -> PosetMap:
    return PosetMap(
        source=source,
        target=target,
        assignment={v: target.vertices[t] for v, t in zip(source.vertices, images)},
    )


def monotone_maps(
    p: Poset,
    q: Poset,
    max_source: Optional[int] = None,
    force: bool = False,
) -> List[PosetMap]:
    """
    Every monotone map p -> q.

    Raises:
        GuardExceeded: if |p| is above the map-enumeration guard
    """
    check_map_guard(p, max_source, force)
    maps = [_as_map(p, q, images) for images in iter_monotone_images(p, q)]
    logger.debug(f"Found {len(maps)} monotone maps from {len(p)} to {len(q)} elements")
    return maps


def open_maps(
    f: Poset,
    g: Poset,
    max_source: Optional[int] = None,
    force: bool = False,
) -> List[PosetMap]:
    """
    Every open map between two forests.

    Raises:
        NotAForestError: if either poset is not a forest
        GuardExceeded: if |f| is above the map-enumeration guard
    """
    require_forest(f)
    require_forest(g)
    check_map_guard(f, max_source, force)
    maps = [_as_map(f, g, images) for images in iter_category_images(Category.FOREST, f, g)]
    logger.debug(f"Found {len(maps)} open maps from {len(f)} to {len(g)} elements")
    return maps

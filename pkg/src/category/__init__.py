"""
Category Operations

Provides:
- poset_sum / forest_sum: coproducts (disjoint unions)
- poset_product / forest_product: products for monotone and open maps
- monotone_maps / open_maps: exhaustive hom-sets
- check_product_universal: factorization oracle for a product cone
"""

from .maps import (
    is_category_map,
    is_monotone_map,
    is_open_map,
    iter_category_images,
    monotone_maps,
    open_maps,
    require_forest,
)
from .products import (
    forest_product,
    forest_product_cone,
    forest_product_many,
    pair_label,
    poset_product,
    poset_product_cone,
    product,
    product_cone,
    sync_chains,
)
from .sums import forest_sum, poset_sum, sum_injections
from .universal import check_product_universal

__all__ = [
    "is_category_map",
    "is_monotone_map",
    "is_open_map",
    "iter_category_images",
    "monotone_maps",
    "open_maps",
    "require_forest",
    "forest_product",
    "forest_product_cone",
    "forest_product_many",
    "pair_label",
    "poset_product",
    "poset_product_cone",
    "product",
    "product_cone",
    "sync_chains",
    "forest_sum",
    "poset_sum",
    "sum_injections",
    "check_product_universal",
]

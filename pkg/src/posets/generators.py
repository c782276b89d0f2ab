"""
Common Poset Generators

Chains, antichains, Boolean algebras and the M-family (bottom, top and an
antichain of middle elements between them).
"""
import string
from typing import List

from ..common.schema import Poset
from .core import build_poset, poset_from_pairs

EMPTY_SUBSET_LABEL = "{}"


def _require_nonnegative(n: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what} needs n >= 0, got {n}")


def chain(n: int) -> Poset:
    """Total order 1 < 2 < ... < n."""
    _require_nonnegative(n, "chain")
    labels = [str(i) for i in range(1, n + 1)]
    return Poset(
        vertices=tuple(labels),
        relation=frozenset((labels[i], labels[j]) for i in range(n) for j in range(i, n)),
    )


def antichain(n: int) -> Poset:
    """n pairwise incomparable vertices 1..n."""
    _require_nonnegative(n, "antichain")
    labels = tuple(str(i) for i in range(1, n + 1))
    return Poset(vertices=labels, relation=frozenset((v, v) for v in labels))


def subset_label(mask: int, n: int) -> str:
    """Bitstring label of a subset of an n-set; `{}` when n = 0."""
    return format(mask, f"0{n}b") if n else EMPTY_SUBSET_LABEL


def boolean_algebra(n: int) -> Poset:
    """
    All subsets of an n-set ordered by inclusion.

    Labels are n-digit bitstrings listed in increasing binary value,
    so the empty set comes first and the full set last.
    """
    _require_nonnegative(n, "boolean_algebra")
    size = 1 << n
    labels = [subset_label(s, n) for s in range(size)]
    return Poset(
        vertices=tuple(labels),
        relation=frozenset(
            (labels[s], labels[t]) for s in range(size) for t in range(size) if s & t == s
        ),
    )


def middle_labels(i: int) -> List[str]:
    """Names for the middle antichain: a..z without r and t, then m25, m26, ..."""
    letters = [c for c in string.ascii_lowercase if c not in ("r", "t")]
    if i <= len(letters):
        return letters[:i]
    return letters + [f"m{k}" for k in range(len(letters) + 1, i + 1)]


def m_poset(i: int) -> Poset:
    """
    Bottom r, top t and i pairwise incomparable middle elements.

    m_poset(1) is the 3-chain r < a < t, m_poset(2) the diamond.
    """
    if i < 1:
        raise ValueError(f"m_poset needs i >= 1, got {i}")
    middles = middle_labels(i)
    pairs = [("r", m) for m in middles] + [(m, "t") for m in reversed(middles)]
    order = ["r"] + middles + ["t"]
    return build_poset(order, pairs)


def diamond() -> Poset:
    """r < a < t, r < b < t."""
    return m_poset(2)


def poset_b2() -> Poset:
    """x < y, x < z."""
    return poset_from_pairs([("x", "y"), ("x", "z")])


def poset_p4() -> Poset:
    """Two diamonds sharing their bottom x: x < a, b < y and x < c, d < z."""
    return poset_from_pairs([
        ("x", "a"), ("x", "b"), ("b", "y"), ("a", "y"),
        ("x", "c"), ("x", "d"), ("c", "z"), ("d", "z"),
    ])

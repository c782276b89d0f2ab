"""
Hasse Diagram DOT Emitter

Writes one DOT digraph holding a cluster per poset. Clusters are grouped into
rows of `columns`; inside a cluster covering edges point upward and vertices
of equal height share a rank.
"""
from typing import Dict, List, Mapping, Optional, Sequence

from ..common.schema import Poset
from .core import cover_pairs, heights

INDENT = "  "


def quote(text: str) -> str:
    """DOT double-quoted string."""
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _cluster_lines(
    k: int,
    p: Poset,
    caption: Optional[Mapping[str, str]],
    title: Optional[str],
) -> List[str]:
    pad = INDENT * 2
    node_id = {v: f"p{k}_{i}" for i, v in enumerate(p.vertices)}
    lines = [f"{INDENT}subgraph cluster_{k} {{"]
    lines.append(f"{pad}label={quote(title if title is not None else str(k))};")
    for v in p.vertices:
        text = caption.get(v, v) if caption else v
        lines.append(f"{pad}{node_id[v]} [label={quote(text)}];")

    levels: Dict[int, List[str]] = {}
    for v, h in heights(p).items():
        levels.setdefault(h, []).append(v)
    for h in sorted(levels):
        members = sorted(levels[h], key=p.index.__getitem__)
        if len(members) > 1:
            lines.append(f"{pad}{{ rank=same; " + " ".join(node_id[v] + ";" for v in members) + " }")

    for a, b in cover_pairs(p):
        lines.append(f"{pad}{node_id[a]} -> {node_id[b]};")
    lines.append(f"{INDENT}}}")
    return lines


def hasse_dot(
    posets: Sequence[Poset],
    columns: int = 1,
    captions: Optional[Sequence[Optional[Mapping[str, str]]]] = None,
    titles: Optional[Sequence[str]] = None,
    name: str = "posets",
) -> str:
    """
    Render Hasse diagrams as DOT text.

    Args:
        posets: Posets to draw, one cluster each
        columns: Clusters per row (positive)
        captions: Optional per-poset label -> displayed text overrides
        titles: Optional per-poset cluster titles (default: 1-based index)
        name: Graph name

    Returns:
        DOT source; identical input gives identical output
    """
    if columns < 1:
        raise ValueError(f"columns must be positive, got {columns}")
    lines = [f"digraph {name} {{", f"{INDENT}rankdir=BT;", f"{INDENT}node [shape=plaintext];"]
    for start in range(0, len(posets), columns):
        row = start // columns + 1
        lines.append(f"{INDENT}// row {row}")
        for k in range(start + 1, min(start + columns, len(posets)) + 1):
            caption = captions[k - 1] if captions else None
            title = titles[k - 1] if titles else None
            lines.extend(_cluster_lines(k, posets[k - 1], caption, title))
    lines.append("}")
    return "\n".join(lines) + "\n"

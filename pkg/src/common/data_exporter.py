"""
Poset Data Exporter

Reads and writes the poset text format and exports results:
- text: `v LABEL` declares a vertex, `r A B` declares A <= B; a token
  starting with '#' comments out the rest of the line
- JSON: any schema model via model_dump
- TSV: pandas DataFrames (lattice statistics, case-study tables)

A path of "-" means standard input or standard output.
"""
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd
from pydantic import BaseModel

from .errors import ParseError
from .schema import COMMENT_MARKER, Pair, Poset, validate_label

logger = logging.getLogger(__name__)

STDIO = "-"

PathLike = Union[str, Path]


def _strip_comment(line: str) -> List[str]:
    tokens = []
    for token in line.split():
        if token.startswith(COMMENT_MARKER):
            break
        tokens.append(token)
    return tokens


def parse_poset_text(text: str, source: Optional[str] = None) -> Poset:
    """
    Parse the poset text format.

    Vertices are ordered by first appearance over `v` and `r` lines together.

    Raises:
        ParseError: on an unknown directive, a wrong token count or a bad label
        CycleError: if the declared relation is not antisymmetric
    """
    # Local import; posets.core depends on this package's schema.
    from ..posets.core import build_poset

    order: dict = {}
    pairs: List[Pair] = []
    for line_number, line in enumerate(text.splitlines(), 1):
        tokens = _strip_comment(line)
        if not tokens:
            continue
        directive, args = tokens[0], tokens[1:]
        expected = {"v": 1, "r": 2}.get(directive)
        if expected is None:
            raise ParseError(f"unknown directive {directive!r} (expected 'v' or 'r')", line_number, source)
        if len(args) != expected:
            raise ParseError(f"{directive!r} takes {expected} label(s), got {len(args)}", line_number, source)
        try:
            labels = [validate_label(a) for a in args]
        except ValueError as e:
            raise ParseError(str(e), line_number, source) from e
        for label in labels:
            order.setdefault(label, None)
        if directive == "r":
            pairs.append((labels[0], labels[1]))

    poset = build_poset(list(order), pairs)
    logger.debug(f"Parsed {len(poset)} vertices from {source or 'text'}")
    return poset


def read_poset(path: PathLike) -> Poset:
    """
    Read a poset file, or standard input for "-".

    Raises:
        FileNotFoundError: if the file does not exist
        ParseError, CycleError: on invalid content
    """
    if str(path) == STDIO:
        return parse_poset_text(sys.stdin.read(), "<stdin>")
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        return parse_poset_text(f.read(), str(path))


def format_poset(p: Poset) -> str:
    """Every vertex as a `v` line, then the covering pairs as `r` lines."""
    from ..posets.core import cover_pairs

    lines = [f"v {v}" for v in p.vertices]
    lines.extend(f"r {a} {b}" for a, b in cover_pairs(p))
    return "\n".join(lines) + ("\n" if lines else "")


def write_text(text: str, path: Optional[PathLike] = None) -> Optional[Path]:
    """Write to a file, or to standard output when path is None or "-"."""
    if path is None or str(path) == STDIO:
        sys.stdout.write(text)
        return None
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Saved file: {path}")
    return path


def write_poset(p: Poset, path: Optional[PathLike] = None) -> Optional[Path]:
    return write_text(format_poset(p), path)


def to_json(value: Union[BaseModel, List[BaseModel]]) -> str:
    """JSON text of a model or list of models."""
    if isinstance(value, BaseModel):
        data = value.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in value]
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def save_json(value: Union[BaseModel, List[BaseModel]], path: Optional[PathLike] = None) -> Optional[Path]:
    return write_text(to_json(value), path)


def export_tsv(frame: pd.DataFrame, path: Optional[PathLike] = None) -> Optional[Path]:
    """
    Write a DataFrame as tab-separated values without the index.

    Returns:
        Path of the written file, None for standard output
    """
    if path is None or str(path) == STDIO:
        frame.to_csv(sys.stdout, index=False, sep="\t")
        return None
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, sep="\t")
    logger.info(f"Saved TSV file: {path} ({len(frame)} rows)")
    return path


def read_tsv(path: PathLike) -> pd.DataFrame:
    return pd.read_csv(path, sep="\t")

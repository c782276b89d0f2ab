"""
Case Studies

Two reproducible experiments:
- chains: both partition lattices of chain(n) are Boolean lattices B_{n-1}
- mfamily: M_i (bottom, i incomparable middles, top) has
  B_{i+2} - B_{i+1} + 1 regular partitions
"""
import logging
from typing import List, Sequence

import pandas as pd

from .common.schema import ChainsCaseRow, MFamilyRow
from .lattice import build_lattice
from .partitions import bell_count, monotone_partitions, regular_partitions
from .posets import are_isomorphic, boolean_algebra, chain, m_poset

logger = logging.getLogger(__name__)


def bell(n: int) -> int:
    """
    The n-th Bell number (exact).

    Raises:
        ValueError: if n is negative
    """
    if n < 0:
        raise ValueError(f"Bell numbers need n >= 0, got {n}")
    return bell_count(n)


def m_family_formula_table(max_i: int) -> List[int]:
    """bell(i+2) - bell(i+1) + 1 for i = 1..max_i."""
    if max_i < 1:
        raise ValueError(f"max_i must be at least 1, got {max_i}")
    return [bell(i + 2) - bell(i + 1) + 1 for i in range(1, max_i + 1)]


def chains_case_study(max_n: int = 4, force: bool = False) -> List[ChainsCaseRow]:
    """Enumerate both partition kinds of chain(2..max_n) and compare lattices with B_{n-1}."""
    rows = []
    for n in range(2, max_n + 1):
        p = chain(n)
        boolean = boolean_algebra(n - 1)
        monotone, monotone_report = monotone_partitions(p, force=force)
        regular, regular_report = regular_partitions(p, force=force)
        rows.append(ChainsCaseRow(
            n=n,
            monotone_analyzed=monotone_report.analyzed,
            monotone_found=monotone_report.found,
            regular_analyzed=regular_report.analyzed,
            regular_found=regular_report.found,
            monotone_is_boolean=are_isomorphic(build_lattice(monotone, "monotone").order, boolean),
            regular_is_boolean=are_isomorphic(build_lattice(regular, "regular", base=p).order, boolean),
        ))
        logger.info(f"chain({n}): {monotone_report.trace_line()} / {regular_report.trace_line()}")
    return rows


def mfamily_case_study(max_i: int = 5, force: bool = False) -> List[MFamilyRow]:
    """Enumerate regular partitions of M_1..M_max_i next to the formula table."""
    formula = m_family_formula_table(max_i)
    rows = []
    for i in range(1, max_i + 1):
        p = m_poset(i)
        _, report = regular_partitions(p, force=force)
        rows.append(MFamilyRow(
            i=i,
            vertices=len(p),
            analyzed=report.analyzed,
            regular_found=report.found,
            formula=formula[i - 1],
        ))
        logger.info(f"M{i}: {report.trace_line()} (formula {formula[i - 1]})")
    return rows


def rows_to_frame(rows: Sequence) -> pd.DataFrame:
    """Case-study rows as a DataFrame, one column per model field."""
    frame = pd.DataFrame([row.model_dump() for row in rows])
    if isinstance(rows[0] if rows else None, MFamilyRow):
        frame["matches"] = [row.matches for row in rows]
    return frame

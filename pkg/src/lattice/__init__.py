"""
Partition Lattices

Provides:
- build_lattice: order a full partition list by relation inclusion
- moebius, atoms_positions, coatoms_positions, whitney_levels: statistics
- lattice_statistics: the same as a pandas DataFrame
"""

from .builder import build_lattice, captions, inclusion_order, lattice_dot
from .statistics import (
    STATISTICS_COLUMNS,
    atoms_positions,
    bottom_position,
    coatoms_positions,
    cover_matrix,
    heights,
    is_ranked,
    lattice_statistics,
    moebius,
    top_position,
    whitney_levels,
    whitney_numbers,
)

__all__ = [
    "build_lattice",
    "captions",
    "inclusion_order",
    "lattice_dot",
    "STATISTICS_COLUMNS",
    "atoms_positions",
    "bottom_position",
    "coatoms_positions",
    "cover_matrix",
    "heights",
    "is_ranked",
    "lattice_statistics",
    "moebius",
    "top_position",
    "whitney_levels",
    "whitney_numbers",
]

"""
Common schema, configuration, errors and exporters for the poset toolkit.

Provides:
- Poset and the partition / lattice / map models (schema)
- ToolkitSettings: environment-driven guards (config)
- PosetToolkitError hierarchy with CLI exit codes (errors)
- Poset text reader/writer, JSON and TSV export (data_exporter)
"""

from .config import ToolkitSettings, get_settings, resolve_limit
from .data_exporter import (
    export_tsv,
    format_poset,
    parse_poset_text,
    read_poset,
    save_json,
    to_json,
    write_poset,
    write_text,
)
from .errors import (
    CaseStudyError,
    CycleError,
    DomainError,
    GuardExceeded,
    NotAForestError,
    NotALatticeError,
    NotRegularError,
    ParseError,
    PartitionMismatchError,
    PosetInputError,
    PosetToolkitError,
    UsageError,
)
from .schema import (
    Category,
    ChainsCaseRow,
    CoverPair,
    EnumerationReport,
    MFamilyRow,
    MonotonePartition,
    OpenMapWitness,
    PartitionKind,
    PartitionLattice,
    Poset,
    PosetMap,
    ProductCone,
    QuotientPoset,
    SetPartition,
    SyncChain,
    validate_label,
)

__all__ = [
    "ToolkitSettings",
    "get_settings",
    "resolve_limit",
    "export_tsv",
    "format_poset",
    "parse_poset_text",
    "read_poset",
    "save_json",
    "to_json",
    "write_poset",
    "write_text",
    "CaseStudyError",
    "CycleError",
    "DomainError",
    "GuardExceeded",
    "NotAForestError",
    "NotALatticeError",
    "NotRegularError",
    "ParseError",
    "PartitionMismatchError",
    "PosetInputError",
    "PosetToolkitError",
    "UsageError",
    "Category",
    "ChainsCaseRow",
    "CoverPair",
    "EnumerationReport",
    "MFamilyRow",
    "MonotonePartition",
    "OpenMapWitness",
    "PartitionKind",
    "PartitionLattice",
    "Poset",
    "PosetMap",
    "ProductCone",
    "QuotientPoset",
    "SetPartition",
    "SyncChain",
    "validate_label",
]

"""
Error Hierarchy

All toolkit failures derive from PosetToolkitError. The CLI maps the three
families to exit codes:
- PosetInputError: malformed input (parse failure, cycle, bad usage) -> 1
- DomainError: input well-formed but outside an operation's domain -> 2
- GuardExceeded: enumeration refused because of its size -> 3
"""
from typing import Optional, Sequence


class PosetToolkitError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code: int = 1


class PosetInputError(PosetToolkitError):
    """Input could not be turned into a valid poset or command."""

    exit_code = 1


class ParseError(PosetInputError):
    """A poset text file contains an unreadable line."""

    def __init__(self, message: str, line_number: Optional[int] = None, source: Optional[str] = None):
        self.line_number = line_number
        self.source = source
        location = ""
        if source:
            location += f"{source}:"
        if line_number is not None:
            location += f"{line_number}:"
        super().__init__(f"{location} {message}" if location else message)


class CycleError(PosetInputError):
    """The reflexive-transitive closure of a relation is not antisymmetric."""

    def __init__(self, cycle: Sequence[str]):
        self.cycle = list(cycle)
        path = " <= ".join(self.cycle + self.cycle[:1])
        super().__init__(f"relation is not antisymmetric: {path}")


class UsageError(PosetInputError):
    """Command line arguments were rejected."""


class DomainError(PosetToolkitError):
    """Operation called outside its domain."""

    exit_code = 2


class NotAForestError(DomainError):
    """A forest operation received a poset with a non-chain down-set."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"not a forest: the down-set of {label!r} is not a chain")


class NotRegularError(DomainError):
    """A set partition whose block digraph has a cycle."""


class NotALatticeError(DomainError):
    """A pair of elements lacks a meet or a join, or the order is unbounded."""


class PartitionMismatchError(DomainError):
    """A set partition does not cover exactly the vertices of its poset."""


class CaseStudyError(DomainError):
    """A case study row contradicts its expected value."""


class GuardExceeded(PosetToolkitError):
    """An exponential search was refused by a size guard."""

    exit_code = 3

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what} size {size} exceeds the guard {limit} (use --force or raise the limit)"
        )

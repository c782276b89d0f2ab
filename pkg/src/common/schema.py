"""
Schema Definitions

Pydantic models for every value the toolkit passes around:
- Poset / CoverPair: finite partial orders with explicit reflexive pairs
- MonotonePartition / SetPartition / QuotientPoset: partitions of a poset
- EnumerationReport: search-space bookkeeping of an enumeration
- PartitionLattice: the lattice formed by all partitions of one kind
- PosetMap / OpenMapWitness / SyncChain / ProductCone: category operations
- ChainsCaseRow / MFamilyRow: case-study results

All models are frozen; invariants are checked by validators on construction.
"""
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import numpy as np

try:
    from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_serializer, field_validator, model_validator
except ImportError:
    raise ImportError(
        "pydantic is required. Install with: pip install pydantic"
    )

Pair = Tuple[str, str]

COMMENT_MARKER = "#"


def validate_label(value) -> str:
    """
    Normalize and check a vertex label.

    Integers are accepted and converted, so `[(1, 2)]` and `[("1", "2")]`
    describe the same poset.

    Raises:
        ValueError: if the label is empty, contains whitespace or starts with the comment marker
    """
    if value is None:
        raise ValueError("label is required")
    label = str(value)
    if not label:
        raise ValueError("label cannot be empty")
    if not label.isprintable() or any(ch.isspace() for ch in label):
        raise ValueError(f"label must be printable without whitespace: {label!r}")
    if label.startswith(COMMENT_MARKER):
        raise ValueError(f"label cannot start with {COMMENT_MARKER!r}: {label!r}")
    return label


class PartitionKind(str, Enum):
    """The two notions of poset partition the toolkit enumerates."""
    MONOTONE = "monotone"
    REGULAR = "regular"


class Category(str, Enum):
    """Categories for products and coproducts."""
    POSET = "poset"  # posets and monotone maps
    FOREST = "forest"  # forests and open maps


class CoverPair(BaseModel):
    """One edge of a Hasse diagram: `upper` covers `lower`."""
    lower: str = Field(..., description="Covered element")
    upper: str = Field(..., description="Covering element")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("lower", "upper", mode="before")
    @classmethod
    def check_label(cls, v):
        return validate_label(v)

    @model_validator(mode="after")
    def check_distinct(self):
        if self.lower == self.upper:
            raise ValueError(f"a cover pair needs two distinct labels, got {self.lower!r} twice")
        return self

    def as_tuple(self) -> Pair:
        return (self.lower, self.upper)


class Poset(BaseModel):
    """
    Finite partially ordered set.

    `vertices` fixes the canonical order used by every sorted output;
    `relation` is the full order relation, reflexive pairs included.
    Use `src.posets.poset_from_pairs` to build one from a generating relation.
    """
    vertices: Tuple[str, ...] = Field(default=(), description="Labels in canonical order")
    relation: FrozenSet[Pair] = Field(default=frozenset(), description="Full order relation")

    model_config = ConfigDict(frozen=True, extra="forbid")

    _cache: Optional[Tuple[Dict[str, int], Tuple[int, ...], Tuple[int, ...]]] = PrivateAttr(default=None)

    @field_validator("vertices", mode="before")
    @classmethod
    def normalize_vertices(cls, v):
        """Labels are validated and must be unique."""
        if v is None:
            return ()
        labels = tuple(validate_label(x) for x in v)
        if len(set(labels)) != len(labels):
            seen = set()
            dupes = [x for x in labels if x in seen or seen.add(x)]
            raise ValueError(f"duplicate vertex labels: {sorted(set(dupes))}")
        return labels

    @field_validator("relation", mode="before")
    @classmethod
    def normalize_relation(cls, v):
        if v is None:
            return frozenset()
        return frozenset((validate_label(a), validate_label(b)) for a, b in v)

    @model_validator(mode="after")
    def check_partial_order(self):
        """Reflexive, antisymmetric and transitive over exactly `vertices`."""
        index = {label: i for i, label in enumerate(self.vertices)}
        up = [0] * len(index)
        down = [0] * len(index)
        for a, b in self.relation:
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise ValueError(f"relation mentions unknown vertex {missing!r}")
            up[index[a]] |= 1 << index[b]
            down[index[b]] |= 1 << index[a]
        for label, i in index.items():
            if not (up[i] >> i) & 1:
                raise ValueError(f"relation is not reflexive at {label!r}")
        for a, b in self.relation:
            i, j = index[a], index[b]
            if i != j and (up[j] >> i) & 1:
                raise ValueError(f"relation is not antisymmetric: {a!r} and {b!r}")
            if up[j] & ~up[i]:
                raise ValueError(f"relation is not transitive above {a!r} <= {b!r}")
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.vertices == other.vertices and self.relation == other.relation

    def __hash__(self) -> int:
        return hash((self.vertices, self.relation))

    def __len__(self) -> int:
        return len(self.vertices)

    def _order_cache(self) -> Tuple[Dict[str, int], Tuple[int, ...], Tuple[int, ...]]:
        if self._cache is None:
            index = {label: i for i, label in enumerate(self.vertices)}
            up = [0] * len(index)
            down = [0] * len(index)
            for a, b in self.relation:
                up[index[a]] |= 1 << index[b]
                down[index[b]] |= 1 << index[a]
            self._cache = (index, tuple(up), tuple(down))
        return self._cache

    def __contains__(self, label) -> bool:
        return label in self.index

    @property
    def index(self) -> Dict[str, int]:
        """Canonical position of each label."""
        return self._order_cache()[0]

    def up_mask(self, label: str) -> int:
        """Bitmask over canonical positions of {y : label <= y}."""
        index, up, _ = self._order_cache()
        return up[index[label]]

    def down_mask(self, label: str) -> int:
        """Bitmask over canonical positions of {y : y <= label}."""
        index, _, down = self._order_cache()
        return down[index[label]]

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self.relation

    def labels_of(self, mask: int) -> List[str]:
        """Decode a position bitmask into labels, canonical order."""
        return [label for i, label in enumerate(self.vertices) if (mask >> i) & 1]

    def down_set(self, label: str) -> List[str]:
        return self.labels_of(self.down_mask(label))

    def up_set(self, label: str) -> List[str]:
        return self.labels_of(self.up_mask(label))

    @field_serializer("relation")
    def serialize_relation(self, relation: FrozenSet[Pair]) -> List[List[str]]:
        return [list(pair) for pair in sorted(relation, key=self.sort_key)]

    def sort_key(self, pair: Pair) -> Tuple[int, int]:
        index = self.index
        return (index[pair[0]], index[pair[1]])

    def to_matrix(self) -> np.ndarray:
        """Boolean n x n matrix with entry [i, j] set iff vertex i <= vertex j."""
        n = len(self.vertices)
        index = self.index
        matrix = np.zeros((n, n), dtype=bool)
        for a, b in self.relation:
            matrix[index[a], index[b]] = True
        return matrix

    def __repr__(self) -> str:
        strict = len(self.relation) - len(self.vertices)
        return f"Poset(vertices={list(self.vertices)}, strict_pairs={strict})"


class EnumerationReport(BaseModel):
    """Counts displayed after an enumeration."""
    kind: PartitionKind
    analyzed: int = Field(..., ge=0, description="Candidate structures examined")
    found: int = Field(..., ge=0, description="Valid partitions kept")

    model_config = ConfigDict(frozen=True, extra="forbid", use_enum_values=True)

    def trace_line(self) -> str:
        return f"Analyzed: {self.analyzed} - Partitions: {self.found}"


class MonotonePartition(BaseModel):
    """
    A preorder on the base poset's vertices containing its order.

    Blocks are the classes of the symmetric part; antisymmetry is not required.
    """
    base: Poset
    preorder: FrozenSet[Pair]

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_serializer("preorder")
    def serialize_preorder(self, preorder: FrozenSet[Pair]) -> List[List[str]]:
        return [list(pair) for pair in sorted(preorder, key=self.base.sort_key)]

    @field_validator("preorder", mode="before")
    @classmethod
    def normalize_preorder(cls, v):
        return frozenset((validate_label(a), validate_label(b)) for a, b in v)

    @model_validator(mode="after")
    def check_preorder(self):
        missing = self.base.relation - self.preorder
        if missing:
            a, b = min(missing, key=self.base.sort_key)
            raise ValueError(f"preorder must contain the base order, missing {a!r} <= {b!r}")
        index = self.base.index
        up = [0] * len(index)
        for a, b in self.preorder:
            if a not in index or b not in index:
                raise ValueError(f"preorder mentions unknown vertex in ({a!r}, {b!r})")
            up[index[a]] |= 1 << index[b]
        for a, b in self.preorder:
            if up[index[b]] & ~up[index[a]]:
                raise ValueError(f"preorder is not transitive above {a!r} <= {b!r}")
        return self

    def __hash__(self) -> int:
        return hash((self.base, self.preorder))

    def added_pairs(self) -> List[Pair]:
        """Pairs beyond the base order, canonically sorted."""
        return sorted(self.preorder - self.base.relation, key=self.base.sort_key)

    def blocks(self) -> List[Tuple[str, ...]]:
        """Equivalence classes of a ~ b iff a <= b and b <= a, canonical form."""
        assigned = set()
        blocks = []
        for a in self.base.vertices:
            if a in assigned:
                continue
            block = tuple(
                b for b in self.base.vertices
                if (a, b) in self.preorder and (b, a) in self.preorder
            )
            assigned.update(block)
            blocks.append(block)
        return blocks

    def is_antisymmetric(self) -> bool:
        return all(len(block) == 1 for block in self.blocks())

    def is_total(self) -> bool:
        vertices = self.base.vertices
        return all(
            (a, b) in self.preorder or (b, a) in self.preorder
            for i, a in enumerate(vertices) for b in vertices[i + 1:]
        )


class SetPartition(BaseModel):
    """Blocks of a vertex set, a candidate regular partition."""
    blocks: Tuple[Tuple[str, ...], ...]

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("blocks", mode="before")
    @classmethod
    def normalize_blocks(cls, v):
        blocks = tuple(tuple(validate_label(x) for x in block) for block in v)
        seen = set()
        for block in blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            for label in block:
                if label in seen:
                    raise ValueError(f"blocks must be disjoint, {label!r} appears twice")
                seen.add(label)
        return blocks

    @classmethod
    def canonical(cls, blocks: Iterable[Iterable[str]], poset: Poset) -> "SetPartition":
        """
        Build the canonical form with respect to a poset's vertex order.

        Each block is sorted by canonical position and blocks by their least member.
        """
        index = poset.index
        ordered = [tuple(sorted(block, key=index.__getitem__)) for block in blocks]
        ordered.sort(key=lambda block: index[block[0]])
        return cls(blocks=tuple(ordered))

    def block_of(self) -> Dict[str, int]:
        """Label -> block number."""
        return {label: k for k, block in enumerate(self.blocks) for label in block}

    def labels(self) -> FrozenSet[str]:
        return frozenset(label for block in self.blocks for label in block)

    def __len__(self) -> int:
        return len(self.blocks)


class QuotientPoset(BaseModel):
    """Poset of blocks; each block label concatenates its members' labels."""
    poset: Poset
    block_map: Dict[str, str] = Field(..., description="Vertex label -> block label")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def check_block_map(self):
        unknown = set(self.block_map.values()) - set(self.poset.vertices)
        if unknown:
            raise ValueError(f"block_map targets unknown blocks: {sorted(unknown)}")
        return self

    def members(self, block_label: str) -> List[str]:
        return [label for label, block in self.block_map.items() if block == block_label]

    def blocks(self) -> List[Tuple[str, ...]]:
        return [tuple(self.members(block)) for block in self.poset.vertices]

    def describe(self) -> str:
        """
        Render as cover chains, e.g. `xy<z` or `x<y x<z`.

        Blocks with no cover pair are listed on their own.
        """
        pieces = []
        touched = set()
        for a in self.poset.vertices:
            for b in self.poset.vertices:
                if a != b and self.poset.leq(a, b) and not any(
                    c not in (a, b) and self.poset.leq(a, c) and self.poset.leq(c, b)
                    for c in self.poset.vertices
                ):
                    pieces.append(f"{a}<{b}")
                    touched.update((a, b))
        pieces.extend(v for v in self.poset.vertices if v not in touched)
        return " ".join(pieces)


Partition = Union[MonotonePartition, SetPartition]


class PartitionLattice(BaseModel):
    """
    All partitions of one kind, ordered into a lattice.

    Positions are 1-based; `order` is a poset over the labels "1".."n".
    """
    kind: PartitionKind
    items: Tuple[Partition, ...]
    order: Poset
    base: Optional[Poset] = None

    model_config = ConfigDict(frozen=True, extra="forbid", use_enum_values=True)

    _leq: Optional[np.ndarray] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def check_positions(self):
        expected = tuple(str(i) for i in range(1, len(self.items) + 1))
        if self.order.vertices != expected:
            raise ValueError("lattice order must be over positions 1..n in order")
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartitionLattice):
            return NotImplemented
        return (self.kind, self.items, self.order) == (other.kind, other.items, other.order)

    def __hash__(self) -> int:
        return hash((self.kind, self.items, self.order))

    def __len__(self) -> int:
        return len(self.items)

    def leq_matrix(self) -> np.ndarray:
        """Boolean matrix, [i, j] set iff item i+1 <= item j+1."""
        if self._leq is None:
            self._leq = self.order.to_matrix()
        return self._leq


class PosetMap(BaseModel):
    """
    A total assignment between two posets' vertex sets.

    Membership in a category (monotone, open) is decided by the predicates,
    not on construction.
    """
    source: Poset
    target: Poset
    assignment: Dict[str, str]

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def check_total(self):
        if set(self.assignment) != set(self.source.vertices):
            raise ValueError("assignment must be defined on exactly the source vertices")
        stray = set(self.assignment.values()) - set(self.target.vertices)
        if stray:
            raise ValueError(f"assignment leaves the target: {sorted(stray)}")
        return self

    def __call__(self, label: str) -> str:
        return self.assignment[label]

    def images(self) -> Tuple[str, ...]:
        """Images in the source's canonical order."""
        return tuple(self.assignment[v] for v in self.source.vertices)

    def image_mask(self, labels: Iterable[str]) -> int:
        index = self.target.index
        mask = 0
        for label in labels:
            mask |= 1 << index[self.assignment[label]]
        return mask

    def preserves_order(self) -> bool:
        """a <= b in source implies f(a) <= f(b) in target."""
        return all(self.target.leq(self(a), self(b)) for a, b in self.source.relation)

    def preserves_down_sets(self) -> bool:
        """f(down x) = down f(x) for every source vertex."""
        return all(
            self.image_mask(self.source.down_set(x)) == self.target.down_mask(self(x))
            for x in self.source.vertices
        )

    def compose(self, other: "PosetMap") -> "PosetMap":
        """`other` after `self`."""
        return PosetMap(
            source=self.source,
            target=other.target,
            assignment={v: other(self(v)) for v in self.source.vertices},
        )


class OpenMapWitness(BaseModel):
    """A map between forests certified monotone and open."""
    map: PosetMap

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def check_open(self):
        if not self.map.preserves_order():
            raise ValueError("map is not monotone")
        if not self.map.preserves_down_sets():
            raise ValueError("map is not open")
        return self


class SyncChain(BaseModel):
    """
    Element of a forest product: a chain in the componentwise product of two
    forests whose projections are exactly the down-sets of its top's components.
    """
    trace: Tuple[Pair, ...]

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("trace", mode="before")
    @classmethod
    def check_nonempty(cls, v):
        pairs = tuple((validate_label(a), validate_label(b)) for a, b in v)
        if not pairs:
            raise ValueError("trace cannot be empty")
        return pairs

    @property
    def top(self) -> Pair:
        return self.trace[-1]

    @property
    def label(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.trace)

    def extend(self, pair: Pair) -> "SyncChain":
        return SyncChain(trace=self.trace + (pair,))

    def is_prefix_of(self, other: "SyncChain") -> bool:
        return other.trace[:len(self.trace)] == self.trace

    def is_valid_for(self, f: Poset, g: Poset) -> bool:
        """Check the chain, top and exact-projection invariants against two forests."""
        for (a, b), (c, d) in zip(self.trace, self.trace[1:]):
            if (a, b) == (c, d) or not (f.leq(a, c) and g.leq(b, d)):
                return False
        x, y = self.top
        firsts = {a for a, _ in self.trace}
        seconds = {b for _, b in self.trace}
        return firsts == set(f.down_set(x)) and seconds == set(g.down_set(y))


class ProductCone(BaseModel):
    """A product object together with its two projections."""
    category: Category
    apex: Poset
    projections: Tuple[PosetMap, PosetMap]

    model_config = ConfigDict(frozen=True, extra="forbid", use_enum_values=True)


class ChainsCaseRow(BaseModel):
    """Partition counts of chain(n) and whether both lattices are Boolean."""
    n: int = Field(..., ge=1)
    monotone_analyzed: int
    monotone_found: int
    regular_analyzed: int
    regular_found: int
    monotone_is_boolean: bool
    regular_is_boolean: bool

    model_config = ConfigDict(frozen=True, extra="forbid")


class MFamilyRow(BaseModel):
    """Regular partition count of M_i next to the Bell-number formula."""
    i: int = Field(..., ge=1)
    vertices: int
    analyzed: int
    regular_found: int
    formula: int

    model_config = ConfigDict(frozen=True, extra="forbid")

    @property
    def matches(self) -> bool:
        return self.regular_found == self.formula

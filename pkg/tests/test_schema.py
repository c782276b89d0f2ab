"""
Tests for schema definitions, settings and the error hierarchy.
"""
import pytest
from pydantic import ValidationError

from src.common.config import ToolkitSettings, get_settings, resolve_limit
from src.common.errors import (
    CycleError,
    DomainError,
    GuardExceeded,
    NotAForestError,
    ParseError,
    PosetInputError,
    UsageError,
)
from src.common.schema import (
    EnumerationReport,
    MonotonePartition,
    OpenMapWitness,
    PartitionKind,
    Poset,
    PosetMap,
    QuotientPoset,
    SetPartition,
    SyncChain,
    validate_label,
)
from src.posets import chain, poset_from_pairs


class TestLabels:
    """Tests for label validation."""

    def test_integers_become_strings(self):
        """Test integer labels are converted."""
        assert validate_label(3) == "3"

    def test_rejects_empty_and_whitespace(self):
        """Test empty and whitespace labels are rejected."""
        for bad in ("", "a b", "a\tb", None):
            with pytest.raises(ValueError):
                validate_label(bad)

    def test_comment_marker_only_rejected_in_front(self):
        """Test '#' may appear inside a label but not start it."""
        assert validate_label("a#2") == "a#2"
        with pytest.raises(ValueError):
            validate_label("#a")


class TestPoset:
    """Tests for the Poset model."""

    def test_valid_poset(self):
        """Test a reflexive, antisymmetric, transitive relation is accepted."""
        p = Poset(vertices=("x", "y"), relation=frozenset({("x", "x"), ("y", "y"), ("x", "y")}))
        assert len(p) == 2
        assert p.leq("x", "y")
        assert not p.leq("y", "x")
        assert "x" in p

    def test_missing_reflexive_pair(self):
        """Test relations without (v, v) are rejected."""
        with pytest.raises(ValidationError):
            Poset(vertices=("x",), relation=frozenset())

    def test_not_transitive(self):
        """Test a non-transitive relation is rejected."""
        rel = {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")}
        with pytest.raises(ValidationError):
            Poset(vertices=("a", "b", "c"), relation=frozenset(rel))

    def test_not_antisymmetric(self):
        """Test a 2-cycle is rejected."""
        rel = {("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")}
        with pytest.raises(ValidationError):
            Poset(vertices=("a", "b"), relation=frozenset(rel))

    def test_unknown_vertex_in_relation(self):
        """Test relation labels must be declared vertices."""
        with pytest.raises(ValidationError):
            Poset(vertices=("a",), relation=frozenset({("a", "a"), ("b", "b")}))

    def test_duplicate_vertices(self):
        """Test duplicate labels are rejected."""
        with pytest.raises(ValidationError):
            Poset(vertices=("a", "a"), relation=frozenset({("a", "a")}))

    def test_masks_and_sets(self):
        """Test bitmask helpers follow canonical positions."""
        p = poset_from_pairs([("x", "y"), ("x", "z")])
        assert p.index == {"x": 0, "y": 1, "z": 2}
        assert p.up_mask("x") == 0b111
        assert p.down_mask("z") == 0b101
        assert p.down_set("y") == ["x", "y"]
        assert p.up_set("y") == ["y"]

    def test_equality_ignores_cache(self):
        """Test equal posets compare equal whether or not caches were filled."""
        p, q = chain(3), chain(3)
        p.index
        assert p == q
        assert hash(p) == hash(q)

    def test_vertex_order_matters(self):
        """Test the canonical order is part of identity."""
        p = Poset(vertices=("a", "b"), relation=frozenset({("a", "a"), ("b", "b")}))
        q = Poset(vertices=("b", "a"), relation=frozenset({("a", "a"), ("b", "b")}))
        assert p != q

    def test_json_relation_sorted(self):
        """Test JSON output lists relation pairs in canonical order."""
        data = chain(2).model_dump(mode="json")
        assert data["vertices"] == ["1", "2"]
        assert data["relation"] == [["1", "1"], ["1", "2"], ["2", "2"]]

    def test_frozen(self):
        """Test posets are immutable."""
        p = chain(2)
        with pytest.raises(ValidationError):
            p.vertices = ("a",)


class TestPartitionModels:
    """Tests for MonotonePartition, SetPartition and QuotientPoset."""

    def test_monotone_blocks(self, b2):
        """Test blocks are the symmetric classes of the preorder."""
        mp = MonotonePartition(base=b2, preorder=b2.relation | {("y", "x"), ("y", "z")})
        assert mp.blocks() == [("x", "y"), ("z",)]
        assert sorted(mp.added_pairs()) == [("y", "x"), ("y", "z")]
        assert not mp.is_antisymmetric()

    def test_monotone_must_contain_base(self, b2):
        """Test a preorder missing base pairs is rejected."""
        with pytest.raises(ValidationError):
            MonotonePartition(base=b2, preorder=frozenset((v, v) for v in b2.vertices))

    def test_monotone_must_be_transitive(self, b2):
        """Test an intransitive candidate is rejected."""
        with pytest.raises(ValidationError):
            MonotonePartition(base=b2, preorder=b2.relation | {("y", "x")})

    def test_total_antisymmetric_preorder(self, b2):
        """Test a linear extension is recognised."""
        mp = MonotonePartition(base=b2, preorder=b2.relation | {("y", "z")})
        assert mp.is_antisymmetric()
        assert mp.is_total()

    def test_set_partition_disjoint(self):
        """Test overlapping blocks are rejected."""
        with pytest.raises(ValidationError):
            SetPartition(blocks=(("a", "b"), ("b",)))

    def test_set_partition_nonempty(self):
        """Test empty blocks are rejected."""
        with pytest.raises(ValidationError):
            SetPartition(blocks=(("a",), ()))

    def test_canonical_form(self, b2):
        """Test canonical blocks follow the base poset's order."""
        sp = SetPartition.canonical([["z", "x"], ["y"]], b2)
        assert sp.blocks == (("x", "z"), ("y",))
        assert sp.block_of() == {"x": 0, "z": 0, "y": 1}

    def test_quotient_describe(self):
        """Test cover chains and isolated blocks are rendered."""
        q = QuotientPoset(
            poset=poset_from_pairs([("xy", "z")], extra_vertices=["w"]),
            block_map={"x": "xy", "y": "xy", "z": "z", "w": "w"},
        )
        assert q.describe() == "xy<z w"
        assert q.members("xy") == ["x", "y"]

    def test_trace_line(self):
        """Test the enumeration trace format."""
        report = EnumerationReport(kind=PartitionKind.MONOTONE, analyzed=16, found=7)
        assert report.trace_line() == "Analyzed: 16 - Partitions: 7"


class TestMapModels:
    """Tests for PosetMap, OpenMapWitness and SyncChain."""

    def test_map_must_be_total(self):
        """Test missing source vertices are rejected."""
        with pytest.raises(ValidationError):
            PosetMap(source=chain(2), target=chain(2), assignment={"1": "1"})

    def test_map_must_stay_in_target(self):
        """Test images outside the target are rejected."""
        with pytest.raises(ValidationError):
            PosetMap(source=chain(1), target=chain(1), assignment={"1": "9"})

    def test_non_monotone_map_is_allowed(self):
        """Test construction does not enforce monotonicity."""
        m = PosetMap(source=chain(2), target=chain(2), assignment={"1": "2", "2": "1"})
        assert not m.preserves_order()

    def test_compose(self):
        """Test composition applies self first."""
        up = PosetMap(source=chain(2), target=chain(2), assignment={"1": "2", "2": "2"})
        down = PosetMap(source=chain(2), target=chain(2), assignment={"1": "1", "2": "1"})
        assert up.compose(down).images() == ("1", "1")

    def test_open_witness_rejects_non_open(self):
        """Test a monotone but not open map cannot be certified."""
        m = PosetMap(source=chain(2), target=chain(2), assignment={"1": "2", "2": "2"})
        with pytest.raises(ValidationError):
            OpenMapWitness(map=m)
        OpenMapWitness(map=PosetMap(source=chain(2), target=chain(2), assignment={"1": "1", "2": "2"}))

    def test_sync_chain(self):
        """Test trace helpers and the validity check."""
        z = SyncChain(trace=(("1", "1"),)).extend(("2", "1")).extend(("2", "2"))
        assert z.top == ("2", "2")
        assert z.label == "(1,1)(2,1)(2,2)"
        assert SyncChain(trace=(("1", "1"),)).is_prefix_of(z)
        assert z.is_valid_for(chain(2), chain(2))
        skipping = SyncChain(trace=(("1", "1"), ("2", "2"), ("2", "2")))
        assert not skipping.is_valid_for(chain(2), chain(2))
        with pytest.raises(ValidationError):
            SyncChain(trace=())


class TestSettings:
    """Tests for environment-driven settings."""

    def test_defaults(self):
        """Test default guards."""
        settings = ToolkitSettings()
        assert settings.regular_max_vertices == 10
        assert settings.monotone_max_candidates == 24
        assert settings.map_max_source == 6
        assert settings.lattice_check_max == 600
        assert settings.log_level == "INFO"

    def test_from_env(self, monkeypatch):
        """Test POSET_TOOLKIT_* overrides."""
        monkeypatch.setenv("POSET_TOOLKIT_REGULAR_MAX_VERTICES", "4")
        monkeypatch.setenv("POSET_TOOLKIT_LOG_LEVEL", "debug")
        settings = get_settings()
        assert settings.regular_max_vertices == 4
        assert settings.log_level == "DEBUG"

    def test_invalid_log_level(self):
        """Test unknown log levels are rejected."""
        with pytest.raises(ValidationError):
            ToolkitSettings(log_level="LOUD")

    def test_resolve_limit(self):
        """Test explicit limits win."""
        assert resolve_limit(None, 10) == 10
        assert resolve_limit(3, 10) == 3


class TestErrors:
    """Tests for the error hierarchy and exit codes."""

    def test_exit_codes(self):
        """Test each family maps to its exit code."""
        assert ParseError("bad").exit_code == 1
        assert CycleError(["a", "b"]).exit_code == 1
        assert UsageError("x").exit_code == 1
        assert NotAForestError("t").exit_code == 2
        assert GuardExceeded("search", 30, 24).exit_code == 3

    def test_families(self):
        """Test subclassing."""
        assert issubclass(ParseError, PosetInputError)
        assert issubclass(NotAForestError, DomainError)

    def test_messages(self):
        """Test messages carry locations and cycles."""
        assert str(ParseError("unknown directive", 3, "b2.poset")) == "b2.poset:3: unknown directive"
        assert str(CycleError(["a", "b"])) == "relation is not antisymmetric: a <= b <= a"

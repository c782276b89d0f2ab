"""
Tests for monotone and regular partition enumeration, quotients and linear
extensions, checked against brute-force oracles.
"""
import pytest

from src.common.errors import GuardExceeded, NotRegularError, PartitionMismatchError
from src.common.schema import SetPartition
from src.partitions import (
    as_preorder,
    bell_count,
    candidate_pairs,
    describe_partition,
    is_regular,
    iter_monotone_partitions,
    linear_extensions,
    monotone_partitions,
    partition_to_poset,
    regular_partitions,
    regular_to_poset,
    restricted_growth_strings,
)
from src.posets import antichain, are_isomorphic, chain, empty_poset, m_poset, poset_from_pairs, relation

from oracles import brute_linear_extensions, brute_monotone, brute_regular, count_set_partitions, sample_posets


def counts(report):
    return report.analyzed, report.found


class TestMonotonePartitions:
    """Tests for monotone partition enumeration."""

    def test_b2(self, b2):
        """Test B2 has 7 monotone partitions out of 16 candidates."""
        items, report = monotone_partitions(b2)
        assert counts(report) == (16, 7)
        assert report.trace_line() == "Analyzed: 16 - Partitions: 7"
        assert len(items) == 7

    def test_b2_order(self, b2):
        """Test the canonical order by added pairs."""
        items, _ = monotone_partitions(b2)
        assert [mp.added_pairs() for mp in items] == [
            [],
            [("y", "z")],
            [("z", "y")],
            [("y", "x"), ("y", "z")],
            [("y", "z"), ("z", "y")],
            [("z", "x"), ("z", "y")],
            [("y", "x"), ("y", "z"), ("z", "x"), ("z", "y")],
        ]

    @pytest.mark.parametrize("n,expected", [(2, (2, 2)), (3, (8, 4)), (4, (64, 8))])
    def test_chains(self, n, expected):
        """Test chain counts 2/2, 8/4, 64/8."""
        _, report = monotone_partitions(chain(n))
        assert counts(report) == expected

    def test_singleton_and_empty(self):
        """Test trivial posets have one partition."""
        assert counts(monotone_partitions(chain(1))[1]) == (1, 1)
        items, report = monotone_partitions(empty_poset())
        assert counts(report) == (1, 1)
        assert items[0].preorder == frozenset()

    def test_antichain3(self):
        """Test 29 preorders on three labelled points."""
        _, report = monotone_partitions(antichain(3))
        assert counts(report) == (64, 29)

    @pytest.mark.parametrize("p", sample_posets())
    def test_matches_brute_force(self, p):
        """Test the enumeration equals the transitivity filter, in order."""
        items, report = monotone_partitions(p)
        expected = brute_monotone(p)
        assert [mp.preorder for mp in items] == expected
        assert report.analyzed == 2 ** len(candidate_pairs(p))

    def test_batch_size_does_not_change_order(self, b2):
        """Test small numpy batches emit the same sequence."""
        assert list(iter_monotone_partitions(b2, batch_size=1)) == monotone_partitions(b2)[0]

    def test_guard(self, p4):
        """Test large candidate sets are refused unless forced or raised."""
        with pytest.raises(GuardExceeded) as info:
            monotone_partitions(p4)
        assert info.value.size == 32
        assert info.value.limit == 24

    def test_guard_from_env(self, monkeypatch, b2):
        """Test the guard follows POSET_TOOLKIT_MONOTONE_MAX_CANDIDATES."""
        monkeypatch.setenv("POSET_TOOLKIT_MONOTONE_MAX_CANDIDATES", "3")
        with pytest.raises(GuardExceeded):
            monotone_partitions(b2)
        assert counts(monotone_partitions(b2, force=True)[1]) == (16, 7)


class TestRegularPartitions:
    """Tests for regular partition enumeration."""

    def test_b2(self, b2):
        """Test B2 has 5 regular partitions out of 5."""
        items, report = regular_partitions(b2)
        assert counts(report) == (5, 5)
        assert report.trace_line() == "Analyzed: 5 - Partitions: 5"
        assert items[0].blocks == (("x",), ("y",), ("z",))
        assert items[-1].blocks == (("x", "y", "z"),)

    @pytest.mark.parametrize("n,expected", [(2, (2, 2)), (3, (5, 4)), (4, (15, 8))])
    def test_chains(self, n, expected):
        """Test chain counts 2/2, 5/4, 15/8."""
        _, report = regular_partitions(chain(n))
        assert counts(report) == expected

    def test_m2(self, m2):
        """Test the diamond has 11 regular partitions out of 15."""
        assert counts(regular_partitions(m2)[1]) == (15, 11)

    def test_p4(self, p4):
        """Test P4 has 491 regular partitions out of 877."""
        items, report = regular_partitions(p4)
        assert counts(report) == (877, 491)
        block_counts = [len(sp) for sp in items]
        assert block_counts == sorted(block_counts, reverse=True)

    @pytest.mark.parametrize("n", range(5))
    def test_antichain(self, n):
        """Test every set partition of an antichain is regular."""
        assert counts(regular_partitions(antichain(n))[1]) == (bell_count(n), bell_count(n))

    def test_empty(self):
        """Test the empty poset has one empty partition."""
        items, report = regular_partitions(empty_poset())
        assert counts(report) == (1, 1)
        assert items[0].blocks == ()

    @pytest.mark.parametrize("p", sample_posets())
    def test_matches_brute_force(self, p):
        """Test the enumeration equals the block-digraph filter."""
        items, report = regular_partitions(p)
        found = {frozenset(frozenset(b) for b in sp.blocks) for sp in items}
        assert found == brute_regular(p)
        assert len(found) == len(items)
        assert report.analyzed == count_set_partitions(len(p))

    def test_guard(self):
        """Test large posets are refused."""
        with pytest.raises(GuardExceeded):
            regular_partitions(antichain(11))

    def test_rgs(self):
        """Test restricted growth strings are lexicographic and counted by Bell numbers."""
        assert list(restricted_growth_strings(3)) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2),
        ]
        assert [sum(1 for _ in restricted_growth_strings(n)) for n in range(7)] == [
            bell_count(n) for n in range(7)
        ]

    def test_is_regular(self):
        """Test the acyclicity test directly."""
        p = poset_from_pairs([("a", "b"), ("b", "c")])
        assert is_regular(SetPartition(blocks=(("a", "b"), ("c",))), p)
        assert not is_regular(SetPartition(blocks=(("a", "c"), ("b",))), p)

    def test_mismatched_partition(self, b2):
        """Test blocks must cover exactly the vertices."""
        with pytest.raises(PartitionMismatchError):
            is_regular(SetPartition(blocks=(("x", "y"),)), b2)


class TestQuotients:
    """Tests for quotient posets and conversions."""

    def test_b2_position_4(self, b2):
        """Test the partition adding (y,x),(y,z) is the chain xy < z."""
        items, _ = monotone_partitions(b2)
        q = partition_to_poset(items[3])
        assert q.poset.vertices == ("xy", "z")
        assert relation(q.poset) == [("xy", "xy"), ("xy", "z"), ("z", "z")]
        assert q.block_map == {"x": "xy", "y": "xy", "z": "z"}
        assert describe_partition(items[3]) == "xy<z"

    def test_colliding_block_labels(self):
        """Test blocks {1, 2} and {12} are told apart by their block numbers."""
        p = poset_from_pairs([], extra_vertices=["1", "2", "12"])
        sp = SetPartition(blocks=(("1", "2"), ("12",)))
        q = regular_to_poset(sp, p)
        assert q.poset.vertices == ("12#1", "12#2")
        assert q.block_map == {"1": "12#1", "2": "12#1", "12": "12#2"}
        assert describe_partition(sp, p) == "12#1 12#2"
        assert describe_partition(sp) == "12#1|12#2"
        assert partition_to_poset(as_preorder(sp, p)) == q

    def test_merged_block_matches_vertex(self):
        """Test merging a < b beside a vertex named ab still yields a quotient."""
        p = poset_from_pairs([("a", "b")], extra_vertices=["ab"])
        items, _ = monotone_partitions(p)
        for mp in items:
            assert len(partition_to_poset(mp).poset) == len(mp.blocks())
        merged = next(mp for mp in items if mp.blocks() == [("a", "b"), ("ab",)])
        assert describe_partition(merged) == "ab#1 ab#2"

    def test_all_regular_quotients_with_colliding_labels(self):
        """Test every regular partition of {1, 2, 12} has a quotient."""
        p = poset_from_pairs([], extra_vertices=["1", "2", "12"])
        items, report = regular_partitions(p)
        assert counts(report) == (5, 5)
        assert [describe_partition(sp, p) for sp in items] == [
            "1 2 12", "12#1 12#2", "112 2", "1 212", "1212",
        ]

    def test_identity_and_full(self, b2):
        """Test the extreme partitions."""
        items, _ = monotone_partitions(b2)
        assert are_isomorphic(partition_to_poset(items[0]).poset, b2)
        assert partition_to_poset(items[-1]).poset.vertices == ("xyz",)

    def test_regular_to_poset(self):
        """Test {ab|c} of a<b<c is the chain ab < c."""
        p = poset_from_pairs([("a", "b"), ("b", "c")])
        q = regular_to_poset(SetPartition(blocks=(("a", "b"), ("c",))), p)
        assert relation(q.poset) == [("ab", "ab"), ("ab", "c"), ("c", "c")]

    def test_not_regular(self):
        """Test {ac|b} of a<b<c is rejected."""
        p = poset_from_pairs([("a", "b"), ("b", "c")])
        sp = SetPartition(blocks=(("a", "c"), ("b",)))
        with pytest.raises(NotRegularError):
            regular_to_poset(sp, p)
        with pytest.raises(NotRegularError):
            as_preorder(sp, p)

    def test_discrete_quotient(self, b2):
        """Test the discrete partition reproduces the poset."""
        sp = SetPartition(blocks=(("x",), ("y",), ("z",)))
        assert regular_to_poset(sp, b2).poset == b2
        assert as_preorder(sp, b2).preorder == b2.relation

    def test_as_preorder_b2(self, b2):
        """Test {xy|z} closes to the added pairs (y,x),(y,z)."""
        mp = as_preorder(SetPartition(blocks=(("x", "y"), ("z",))), b2)
        assert mp.added_pairs() == [("y", "x"), ("y", "z")]

    def test_single_block(self, b2):
        """Test one block closes to the full preorder."""
        mp = as_preorder(SetPartition(blocks=(("x", "y", "z"),)), b2)
        assert len(mp.preorder) == 9

    def test_non_canonical_blocks(self, b2):
        """Test block order and member order do not matter."""
        mp = as_preorder(SetPartition(blocks=(("z",), ("y", "x"))), b2)
        assert mp.blocks() == [("x", "y"), ("z",)]

    @pytest.mark.parametrize("p", sample_posets())
    def test_regular_embeds_into_monotone(self, p):
        """Test every regular partition is a monotone one with the same blocks and order."""
        monotone = {mp.preorder for mp in monotone_partitions(p)[0]}
        for sp in regular_partitions(p)[0]:
            mp = as_preorder(sp, p)
            assert mp.preorder in monotone
            assert [tuple(b) for b in mp.blocks()] == list(sp.blocks)
            assert partition_to_poset(mp) == regular_to_poset(sp, p)

    @pytest.mark.parametrize("p", sample_posets())
    def test_projection_is_monotone_surjection(self, p):
        """Test vertex -> block is order preserving and onto."""
        for mp in monotone_partitions(p)[0]:
            q = partition_to_poset(mp)
            assert set(q.block_map.values()) == set(q.poset.vertices)
            assert all(q.poset.leq(q.block_map[a], q.block_map[b]) for a, b in p.relation)


class TestLinearExtensions:
    """Tests for linear extensions."""

    def test_b2(self, b2):
        """Test B2 has two linear extensions in canonical order."""
        chains = linear_extensions(b2)
        assert [q.poset.vertices for q in chains] == [("x", "y", "z"), ("x", "z", "y")]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_chain(self, n):
        """Test a chain is its only linear extension."""
        assert len(linear_extensions(chain(n))) == 1

    def test_antichain(self):
        """Test all permutations extend an antichain."""
        assert len(linear_extensions(antichain(3))) == 6

    def test_empty(self):
        """Test the empty poset has one empty extension."""
        assert len(linear_extensions(empty_poset())) == 1

    @pytest.mark.parametrize("p", sample_posets() + [m_poset(4), antichain(4)])
    def test_matches_permutation_oracle(self, p):
        """Test counts against a permutation filter."""
        assert len(linear_extensions(p)) == brute_linear_extensions(p)

    @pytest.mark.parametrize("p", sample_posets())
    def test_matches_total_monotone_partitions(self, p):
        """Test extensions are the total antisymmetric preorders, in the same order."""
        totals = [
            mp for mp in monotone_partitions(p)[0]
            if mp.is_antisymmetric() and mp.is_total()
        ]
        expected = [
            tuple(sorted(p.vertices, key=lambda v: sum((a, v) in mp.preorder for a in p.vertices)))
            for mp in totals
        ]
        assert [q.poset.vertices for q in linear_extensions(p)] == expected

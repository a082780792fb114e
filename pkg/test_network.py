# test_network.py
import pytest

from network import (
    NodeSet,
    Partition,
    WeightedGraph,
    clique_union,
    format_edge_list,
    from_edge_list,
    half_regular,
    iter_partitions,
    iter_partitions_of,
    noisy_partition_graph,
    parse_edge_list,
    partition_graph,
    read_edge_list,
    write_edge_list,
)
from network.errors import GraphFormatError, InvalidPartitionError, NotSimpleGraphError
from network.nodeset import canonical
from network.partition import iter_block_masks
from network.rng import make_rng


class TestNodeSet:
    def test_members_and_bits(self):
        s = NodeSet([3, 0, 3])
        assert s.members == (0, 3)
        assert s.bits == 0b1001
        assert len(s) == 2
        assert 3 in s and 1 not in s

    def test_set_algebra(self):
        a, b = NodeSet([0, 1]), NodeSet([1, 2])
        assert a | b == NodeSet([0, 1, 2])
        assert a & b == NodeSet([1])
        assert a - b == NodeSet([0])
        assert not a.isdisjoint(b)
        assert NodeSet([1]) <= a
        assert NodeSet([1]) < a and not a < a

    def test_hashable_as_key(self):
        d = {NodeSet([1, 2]): "x"}
        assert d[NodeSet([2, 1])] == "x"

    def test_canonical_order(self):
        sets = [NodeSet([1]), NodeSet([0, 2]), NodeSet([0])]
        assert canonical(sets) == [NodeSet([0]), NodeSet([0, 2]), NodeSet([1])]

    def test_without_and_min(self):
        s = NodeSet([2, 4, 5])
        assert s.without(4) == NodeSet([2, 5])
        assert s.min() == 2 and s.max() == 5

    def test_check_range(self):
        with pytest.raises(ValueError):
            NodeSet([0, 5]).check_range(5)

    def test_negative_member_rejected(self):
        with pytest.raises(ValueError):
            NodeSet([-1])


class TestWeightedGraph:
    def test_half_regular_shape(self, hr6):
        assert hr6.n == 6
        assert hr6.edge_count == 9
        assert list(hr6.degrees()) == [3] * 6
        assert hr6.weight(0, 3) == 1.0 and hr6.weight(0, 4) == 0.0

    @pytest.mark.parametrize("n", [6, 8, 10])
    def test_half_regular_edge_count(self, n):
        assert half_regular(n).edge_count == n * n // 4

    @pytest.mark.parametrize("n", [4, 5, 7])
    def test_half_regular_rejects_bad_n(self, n):
        with pytest.raises(ValueError):
            half_regular(n)

    def test_clustering_coefficient(self, hr6):
        # two triangles; each node closes 1 of its 3 triples
        assert hr6.triangle_count() == 2
        assert hr6.clustering_coefficient() == pytest.approx(1 / 3)

    def test_clustering_coefficient_needs_triples(self):
        with pytest.raises(ValueError):
            WeightedGraph.from_edges(4, [(0, 1), (2, 3)]).clustering_coefficient()

    def test_group_degree_and_spanned_weight(self, hr6):
        A = NodeSet([0, 1, 3])
        assert hr6.group_degree(A) == 9
        assert hr6.spanned_edge_weight(A) == 2
        assert hr6.induced_edge_count(A) == 2

    def test_neighborhood(self, hr6):
        assert hr6.neighborhood(0) == NodeSet([1, 2, 3])

    def test_neighborhood_needs_simple_graph(self):
        g = WeightedGraph(2, {(0, 1): 0.5})
        with pytest.raises(NotSimpleGraphError):
            g.neighborhood(0)

    def test_invalid_weights(self):
        with pytest.raises(ValueError):
            WeightedGraph(2, {(0, 1): 1.5})
        with pytest.raises(ValueError):
            WeightedGraph(2, {(0, 0): 1.0})
        with pytest.raises(ValueError):
            WeightedGraph(2, {(0, 1): 1.0, (1, 0): 1.0})

    def test_zero_weights_not_stored(self):
        g = WeightedGraph(3, {(0, 1): 0.0, (1, 2): 0.25})
        assert g.edge_count == 1
        assert g.strength(1) == 0.25
        assert not g.is_simple

    def test_connected_components(self):
        g = WeightedGraph.from_edges(5, [(0, 1), (3, 4)])
        assert g.connected_components() == Partition([[0, 1], [2], [3, 4]])
        assert g.is_connected_subset(NodeSet([0, 1]))
        assert not g.is_connected_subset(NodeSet([1, 3]))

    def test_from_matrix_roundtrip(self, hr6):
        assert WeightedGraph.from_matrix(hr6.matrix) == hr6

    def test_matrix_is_read_only(self, hr6):
        with pytest.raises(ValueError):
            hr6.matrix[0, 1] = 0.0


class TestEdgeList:
    def test_parse_simple_and_weighted(self):
        g = parse_edge_list("# comment\n0 1\n\n1 2 0.5\n")
        assert g.n == 3
        assert g.weight(0, 1) == 1.0
        assert g.weight(1, 2) == 0.5

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("0 1\n1 1\n", 2, "self-loop"),
            ("0 1\n1 x\n", 2, "integers"),
            ("0 1 2.0\n", 1, "outside [0, 1]"),
            ("0 1\n1 0\n", 2, "duplicate"),
            ("0 1 2 3\n", 1, "fields"),
            ("0 1 abc\n", 1, "not a number"),
        ],
    )
    def test_parse_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(GraphFormatError) as info:
            parse_edge_list(text)
        assert info.value.line_number == line
        assert fragment in str(info.value)
        assert str(info.value).startswith(f"line {line}:")

    def test_from_edge_list(self):
        g = from_edge_list("0 1\n1 2 0.5\n")
        assert g == parse_edge_list("0 1\n1 2 0.5\n")
        assert g.n == 3 and g.weight(1, 2) == 0.5
        with pytest.raises(GraphFormatError):
            from_edge_list("0 0\n")

    def test_gap_in_ids_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("0 2\n")

    def test_isolated_nodes_via_zero_weight(self):
        g = parse_edge_list("0 1 0\n2 3 0\n")
        assert g.n == 4 and g.edge_count == 0

    @pytest.mark.parametrize(
        "graph",
        [
            half_regular(8),
            WeightedGraph.empty(4),
            WeightedGraph.empty(3),
            WeightedGraph(4, {(0, 1): 0.25, (2, 3): 1.0}),
            WeightedGraph.from_edges(5, [(1, 2)]),
        ],
    )
    def test_format_parses_back(self, graph):
        assert parse_edge_list(format_edge_list(graph)) == graph

    def test_write_and_read(self, tmp_path, hr6):
        path = tmp_path / "hr6.txt"
        write_edge_list(hr6, str(path))
        assert read_edge_list(str(path)) == hr6
        assert path.read_text().startswith("# n=6 edges=9")


class TestPartition:
    def test_canonical_blocks(self):
        P = Partition([[3, 4], [0, 2], [1]])
        assert P.to_lists() == [[0, 2], [1], [3, 4]]
        assert P == Partition([[1], [4, 3], [2, 0]])
        assert P.block_of(4) == NodeSet([3, 4])

    @pytest.mark.parametrize(
        "blocks",
        [[[0, 1], [1, 2]], [[0], [2]], [[0], []]],
    )
    def test_invalid_blocks(self, blocks):
        with pytest.raises(InvalidPartitionError):
            Partition(blocks)

    def test_bottom_top_and_refinement(self):
        bottom, top = Partition.bottom(4), Partition.top(4)
        middle = Partition.single_block_bottom(NodeSet([1, 2]), 4)
        assert len(bottom) == 4 and len(top) == 1
        assert middle.to_lists() == [[0], [1, 2], [3]]
        assert bottom.refines(middle) and middle.refines(top)
        assert not top.refines(middle)

    @pytest.mark.parametrize("n, bell", [(1, 1), (3, 5), (4, 15), (5, 52), (6, 203)])
    def test_bell_numbers(self, n, bell):
        partitions = list(iter_partitions(n))
        assert len(partitions) == bell
        assert len(set(partitions)) == bell

    def test_enumeration_starts_with_top(self):
        assert next(iter_partitions(4)) == Partition.top(4)
        assert [list(map(list, p)) for p in iter_partitions_of([5])] == [[[5]]]

    def test_block_masks_match_partitions(self):
        from_masks = {Partition(NodeSet.from_bits(m) for m in masks) for masks in iter_block_masks(5)}
        assert from_masks == set(iter_partitions(5))

    def test_from_labels(self):
        assert Partition.from_labels([1, 0, 1, 2]) == Partition([[0, 2], [1], [3]])


class TestGenerators:
    def test_partition_graph(self):
        g = partition_graph([[0, 1], [2, 3]], 4)
        assert sorted(g.edges()) == [(0, 1), (2, 3)]

    def test_partition_graph_size_mismatch(self):
        with pytest.raises(InvalidPartitionError):
            partition_graph([[0, 1]], 3)

    def test_noisy_extremes(self):
        blocks = [[0, 1, 2], [3, 4]]
        assert noisy_partition_graph(blocks, 1.0, 0.0, seed=3) == WeightedGraph.complete(5)
        assert noisy_partition_graph(blocks, 0.0, 0.0, seed=3) == partition_graph(blocks, 5)
        assert noisy_partition_graph(blocks, 0.0, 1.0, seed=3) == WeightedGraph.empty(5)

    def test_noisy_is_seeded(self):
        blocks = [[0, 1, 2, 3], [4, 5, 6, 7]]
        a = noisy_partition_graph(blocks, 0.3, 0.3, seed=11)
        assert a == noisy_partition_graph(blocks, 0.3, 0.3, seed=11)

    def test_clique_union(self):
        result = clique_union([[0, 1, 2], [2, 3, 4], [0, 1]])
        assert result.graph.edge_count == 6
        assert result.clique_type == {3: 2}

    def test_clique_union_must_cover(self):
        with pytest.raises(ValueError):
            clique_union([[0, 1], [3, 4]])

    def test_make_rng_rejects_negative_seed(self):
        with pytest.raises(ValueError):
            make_rng(-1)
        assert make_rng(5).integers(1000) == make_rng(5).integers(1000)

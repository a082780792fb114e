# test_mle.py

import numpy as np
import pytest

from conftest import halves, random_simple_graph
from network import NodeSet, Partition, WeightedGraph, half_regular, iter_partitions
from network.errors import CapExceededError, InvalidCoverError, UnsupportedCaseError
from mle import (
    FuzzyCover,
    MembershipDistribution,
    average_derivative,
    big_f,
    big_f_quadratic,
    conditional_score,
    cover_from_lists,
    derivative_iA,
    is_fuzzy_clustering,
    mle_derivative,
    mle_point,
    node_share,
    objective_without,
    pairs_cover,
    partition_to_cover,
    saturate,
    saturate_pair,
    uniform_cover,
)
from mle.config import LOAD_MASS_TOLERANCE
from scores import common_neighbor_score, cubic_triangle_score, dual_weight_score, modularity_score
from search import brute_force_optimum, brute_force_worst


def all_scores(graph):
    return [
        modularity_score(graph),
        dual_weight_score(graph),
        common_neighbor_score(graph),
        cubic_triangle_score(graph, beta=0.5),
    ]


def random_cover(n, seed, max_support=3):
    """Every node spreads random mass over a few random subsets containing it."""
    rng = np.random.default_rng(seed)
    masses = []
    for i in range(n):
        mass = {}
        for _ in range(int(rng.integers(1, max_support + 1))):
            others = [j for j in range(n) if j != i and rng.random() < 0.4]
            mass[NodeSet(others).with_node(i)] = float(rng.random()) + 0.05
        masses.append(mass)
    return FuzzyCover.from_masses(masses, normalize=True)


def random_fuzzy_clustering(n, seed, extra=3):
    """A random partition plus a few random subsets; every member of a chosen subset puts mass on it."""
    rng = np.random.default_rng(seed)
    family = set(Partition.from_labels(rng.integers(0, 3, size=n).tolist()))
    for _ in range(extra):
        family.add(NodeSet(np.flatnonzero(rng.random(n) < 0.5).tolist() or [int(rng.integers(n))]))
    masses = [{A: float(rng.random()) + 0.05 for A in family if i in A} for i in range(n)]
    return FuzzyCover.from_masses(masses, normalize=True)


def indicator(n, A):
    x = np.zeros(n)
    x[list(A)] = 1.0
    return x


class TestCover:
    def test_distribution_validation(self):
        with pytest.raises(InvalidCoverError):
            MembershipDistribution(0, {NodeSet([1, 2]): 1.0})
        with pytest.raises(InvalidCoverError):
            MembershipDistribution(0, {NodeSet([0]): 0.5})
        with pytest.raises(InvalidCoverError):
            MembershipDistribution(0, {NodeSet([0]): -0.5, NodeSet([0, 1]): 1.5})

    def test_normalize_prunes_and_rescales(self):
        d = MembershipDistribution(0, {NodeSet([0]): 2.0, NodeSet([0, 1]): 2.0, NodeSet([0, 2]): 1e-15}, normalize=True)
        assert dict(d.mass) == {NodeSet([0]): 0.5, NodeSet([0, 1]): 0.5}
        assert not d.is_point()

    def test_positions_must_match_nodes(self):
        with pytest.raises(InvalidCoverError):
            FuzzyCover([MembershipDistribution.point(1, NodeSet([1]))])

    def test_uniform_cover(self):
        q = uniform_cover(5)
        assert all(len(d) == 16 for d in q)
        assert q.mass(2, NodeSet([0, 2, 4])) == pytest.approx(2.0 ** -4)
        assert len(q.support()) == 31
        assert q.group_mass(NodeSet(range(5))) == pytest.approx(5 / 16)

    def test_uniform_cover_cap(self):
        with pytest.raises(CapExceededError):
            uniform_cover(15)

    def test_pairs_cover(self):
        q = pairs_cover(4)
        assert q.mass(0, NodeSet([0, 3])) == pytest.approx(1 / 3)
        assert q.is_fuzzy_clustering()

    def test_partition_cover_is_fuzzy_clustering(self):
        q = partition_to_cover(Partition([[0, 2], [1]]))
        assert is_fuzzy_clustering(q)
        assert q.groups() == {NodeSet([0, 2]): {0: 1.0, 2: 1.0}, NodeSet([1]): {1: 1.0}}

    def test_violations(self):
        q = FuzzyCover.from_masses(
            [
                {NodeSet([0, 1, 2]): 1.0},
                {NodeSet([0, 1, 2]): 1.0},
                {NodeSet([2]): 1.0},
            ]
        )
        assert q.violations() == [NodeSet([0, 1, 2])]
        assert not q.is_fuzzy_clustering()

    def test_member_masses_include_zeros(self):
        q = partition_to_cover(Partition([[0, 1], [2]]))
        idx, x = q.member_masses(NodeSet([0, 1, 2]))
        assert list(idx) == [0, 1, 2]
        assert list(x) == [0.0, 0.0, 0.0]

    def test_cover_from_lists_tolerance(self):
        entries = [[([0], 0.5), ([0, 1], 0.5000004)], [([1], 1.0)]]
        q = cover_from_lists(entries, LOAD_MASS_TOLERANCE)
        assert q.dist(0).total == pytest.approx(1.0)
        with pytest.raises(InvalidCoverError):
            cover_from_lists([[([0], 0.9)], [([1], 1.0)]], LOAD_MASS_TOLERANCE)


class TestMultilinearExtension:
    @pytest.mark.parametrize("n", [5, 8])
    def test_agrees_with_score_on_vertices(self, n):
        graph = random_simple_graph(n, 0.5, seed=n)
        for s in all_scores(graph):
            for mask in range(1 << n):
                A = NodeSet.from_bits(mask)
                assert mle_point(s, indicator(n, A)) == pytest.approx(s.eval_set(A), abs=1e-9)

    def test_derivative_at_vertices(self):
        graph = random_simple_graph(6, 0.5, seed=21)
        s = cubic_triangle_score(graph, beta=0.5)
        for B in [NodeSet([0, 1, 2]), NodeSet([1, 3, 4, 5]), NodeSet()]:
            for i in range(6):
                expected = s.eval_set(B) - s.eval_set(B.without(i)) if i in B else s.eval_set(B.with_node(i)) - s.eval_set(B)
                assert mle_derivative(s, indicator(6, B), i) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("seed", range(10))
    def test_affine_in_each_coordinate(self, seed):
        rng = np.random.default_rng(seed)
        n = 4 + seed % 4
        graph = random_simple_graph(n, 0.5, seed=seed)
        for s in all_scores(graph):
            x = rng.random(n)
            for i in range(n):
                ends = []
                for value in (0.0, 1.0):
                    y = x.copy()
                    y[i] = value
                    ends.append(mle_point(s, y))
                t = float(rng.random())
                y = x.copy()
                y[i] = t
                assert mle_point(s, y) == pytest.approx((1 - t) * ends[0] + t * ends[1], abs=1e-9)
                y[i] = 0.5
                assert mle_point(s, y) == pytest.approx((ends[0] + ends[1]) / 2, abs=1e-9)

    def test_point_must_be_in_unit_cube(self, hr6):
        s = modularity_score(hr6)
        with pytest.raises(ValueError):
            mle_point(s, np.full(6, 1.5))
        with pytest.raises(ValueError):
            mle_point(s, np.zeros(5))


class TestObjective:
    def test_partition_cover_gives_partition_value(self, hr6):
        for s in all_scores(hr6):
            assert big_f(s, partition_to_cover(halves(6))) == pytest.approx(s.eval_partition(halves(6)))

    def test_quadratic_form_agrees(self):
        for seed in range(100):
            graph = random_simple_graph(4 + seed % 4, 0.5, seed=seed)
            s = dual_weight_score(graph) if seed % 2 else common_neighbor_score(graph)
            q = random_cover(graph.n, seed)
            assert big_f(s, q) == pytest.approx(big_f_quadratic(s, q), abs=1e-9)

    @pytest.mark.parametrize("n", [3, 5, 7, 8])
    def test_extension_over_every_partition(self, n):
        graph = random_simple_graph(n, 0.5, seed=30 + n)
        for s in all_scores(graph):
            for P in iter_partitions(n):
                assert big_f(s, partition_to_cover(P)) == pytest.approx(s.eval_partition(P), abs=1e-9)

    @pytest.mark.parametrize("seed", range(50))
    def test_bracketed_by_worst_and_best_partition(self, seed):
        n = 3 + seed % 5
        graph = random_simple_graph(n, 0.5, seed=seed)
        q = random_fuzzy_clustering(n, seed + 300)
        assert q.is_fuzzy_clustering()
        for s in all_scores(graph):
            _, worst = brute_force_worst(s)
            _, best = brute_force_optimum(s)
            value = big_f(s, q)
            assert worst - 1e-9 <= value <= best + 1e-9

    def test_quadratic_form_rejects_cubic(self, k3):
        s = cubic_triangle_score(k3, beta=0.5)
        with pytest.raises(UnsupportedCaseError):
            big_f_quadratic(s, uniform_cover(3))

    @pytest.mark.parametrize("seed", range(5))
    def test_derivative_forms_agree(self, seed):
        graph = random_simple_graph(6, 0.5, seed=seed)
        s = cubic_triangle_score(graph, beta=0.5)
        q = random_cover(6, seed + 100)
        for A in q.support()[:8]:
            for i in A:
                direct = derivative_iA(s, q, i, A)
                assert direct == pytest.approx(derivative_iA(s, q, i, A, form="difference"), abs=1e-9)
                assert direct == pytest.approx(conditional_score(s, q, i, A), abs=1e-12)

    @pytest.mark.parametrize("seed", range(5))
    def test_objective_splits_around_a_node(self, seed):
        s = dual_weight_score(random_simple_graph(6, 0.5, seed=seed))
        q = random_cover(6, seed + 200)
        for i in range(6):
            assert big_f(s, q) == pytest.approx(objective_without(s, q, i) + node_share(s, q, i), abs=1e-9)

    def test_derivative_needs_membership(self, hr6):
        s = modularity_score(hr6)
        with pytest.raises(ValueError):
            conditional_score(s, uniform_cover(6), 0, NodeSet([1, 2]))
        with pytest.raises(ValueError):
            derivative_iA(s, uniform_cover(6), 0, NodeSet([0]), form="secant")

    @pytest.mark.parametrize("n", [6, 8])
    def test_average_derivative_on_uniform_cover(self, n):
        s = modularity_score(half_regular(n))
        q = uniform_cover(n)
        matching = NodeSet([0, n // 2])
        assert average_derivative(s, q, matching) == pytest.approx(-(1 / n**2) * (1 - 1 / 2 ** (n - 2)), abs=1e-12)
        for size in (2, 3, n // 2):
            A = NodeSet(range(size))
            expected = -(1 / n**2) * (1 - (size - 1) / 2 ** (n - 2))
            assert average_derivative(s, q, A) == pytest.approx(expected, abs=1e-12)

    def test_average_derivative_of_empty_set(self, hr6):
        with pytest.raises(ValueError):
            average_derivative(modularity_score(hr6), uniform_cover(6), NodeSet())


def two_carrier_cover(n, seed):
    """Nodes 0 and 1 carry A = {0, 1, 2, ...}; everyone else sits on a singleton."""
    rng = np.random.default_rng(seed)
    size = int(rng.integers(3, n + 1))
    A = NodeSet(range(size))
    pair = NodeSet([0, 1])
    masses = []
    for i in (0, 1):
        masses.append({A: rng.random() + 0.05, pair: rng.random(), NodeSet.single(i): rng.random()})
    for k in range(2, n):
        masses.append({NodeSet.single(k): 1.0})
    return FuzzyCover.from_masses(masses, normalize=True), A


class TestSaturation:
    @pytest.mark.parametrize("seed", range(50))
    def test_objective_preserved(self, seed):
        n = 4 + seed % 3
        graph = random_simple_graph(n, 0.5, seed=seed)
        s = dual_weight_score(graph) if seed % 2 else cubic_triangle_score(graph, beta=0.5)
        q, A = two_carrier_cover(n, seed)
        result = saturate_pair(s, q, A)
        assert A not in result.support()
        assert result.is_fuzzy_clustering()
        assert big_f(s, result) == pytest.approx(big_f(s, q), abs=1e-9)
        for i in range(n):
            assert result.dist(i).total == pytest.approx(1.0)

    def test_clamped_pair_masses(self):
        s = dual_weight_score(WeightedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        A, B = NodeSet([0, 1, 2]), NodeSet([0, 3])
        q = FuzzyCover.from_masses(
            [
                {A: 0.3, B: 0.7},
                {A: 1.0},
                {NodeSet([2]): 1.0},
                {B: 1.0},
            ]
        )
        result = saturate_pair(s, q, A)
        assert result.mass(0, NodeSet([0, 1])) == pytest.approx(0.3)
        assert result.mass(1, NodeSet([0, 1])) == pytest.approx(1.0)
        assert big_f(s, result) == pytest.approx(big_f(s, q), abs=1e-12)

    def test_untouched_subset_returns_same_cover(self, hr6):
        q = partition_to_cover(halves(6))
        assert saturate_pair(modularity_score(hr6), q, NodeSet([0, 4])) is q

    def test_single_carrier_unsupported(self):
        s = dual_weight_score(WeightedGraph.complete(3))
        q = FuzzyCover.from_masses([{NodeSet([0, 1, 2]): 1.0}, {NodeSet([1]): 1.0}, {NodeSet([2]): 1.0}])
        with pytest.raises(UnsupportedCaseError):
            saturate_pair(s, q, NodeSet([0, 1, 2]))

    def test_saturate_fixes_every_violation(self):
        s = dual_weight_score(WeightedGraph.complete(5))
        A, B = NodeSet([0, 1, 2]), NodeSet([2, 3, 4])
        q = FuzzyCover.from_masses(
            [
                {A: 0.5, NodeSet([0]): 0.5},
                {A: 0.5, NodeSet([1]): 0.5},
                {NodeSet([2]): 1.0},
                {B: 0.4, NodeSet([3]): 0.6},
                {B: 0.8, NodeSet([4]): 0.2},
            ]
        )
        result = saturate(s, q)
        assert result.is_fuzzy_clustering()
        assert big_f(s, result) == pytest.approx(big_f(s, q), abs=1e-12)

# mle/objective.py

"""
The multilinear extension f^v, the cover objective F^V and its derivatives.

F^V(q) = sum over support subsets A of f^v(q^A), where q^A collects the masses
the members of A put on A. The derivative of F^V in direction (i, A) is the
conditional score v_{q-i}(A) (the score of A for node i when every other member
joins with its own mass).
"""

import logging
from typing import Dict, Mapping, Sequence

import numpy as np

from network.errors import UnsupportedCaseError
from network.nodeset import NodeSet
from scores.cluster_score import ClusterScore

from .cover import FuzzyCover, MembershipDistribution

logger = logging.getLogger(__name__)


def _check_point(score: ClusterScore, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (score.n,):
        raise ValueError(f"point must have {score.n} coordinates, got shape {x.shape}")
    if np.any(x < 0) or np.any(x > 1):
        raise ValueError("every coordinate of the point must lie in [0, 1]")
    return x


def mle_point(score: ClusterScore, x) -> float:
    """f^v(x) = sum x_i mu1_i + sum x_i x_j mu2_ij + sum x_i x_j x_k mu3_ijk."""
    x = _check_point(score, x)
    return score.restricted_polynomial(np.arange(score.n), x)


def mle_derivative(score: ClusterScore, x, i: int) -> float:
    """i-th derivative of the multilinear extension: f(x, x_i=1) - f(x, x_i=0)."""
    x = _check_point(score, x)
    hi, lo = x.copy(), x.copy()
    hi[i], lo[i] = 1.0, 0.0
    idx = np.arange(score.n)
    return score.restricted_polynomial(idx, hi) - score.restricted_polynomial(idx, lo)


def _sum_groups(score: ClusterScore, groups: Mapping[NodeSet, Mapping[int, float]]) -> float:
    total = 0.0
    for members in groups.values():
        idx = np.fromiter(members, dtype=np.int64, count=len(members))
        x = np.fromiter(members.values(), dtype=float, count=len(members))
        total += score.restricted_polynomial(idx, x)
    return total


def _objective(score: ClusterScore, masses: Sequence[Mapping[NodeSet, float]]) -> float:
    """F^V over raw per-node mass maps; a node may hold no mass at all."""
    groups: Dict[NodeSet, Dict[int, float]] = {}
    for i, mass in enumerate(masses):
        for A, m in mass.items():
            if m:
                groups.setdefault(A, {})[i] = m
    return _sum_groups(score, groups)


def _check_sizes(score: ClusterScore, q: FuzzyCover) -> None:
    if q.n != score.n:
        raise ValueError(f"cover has {q.n} nodes, score has {score.n}")


def big_f(score: ClusterScore, q: FuzzyCover) -> float:
    _check_sizes(score, q)
    return _sum_groups(score, q.groups())


def big_f_quadratic(score: ClusterScore, q: FuzzyCover) -> float:
    """
    Reduced form for quadratic scores:
    sum_i v({i}) + sum_ij mu2_ij * sum_{A containing i, j} q_i^A q_j^A.
    """
    if not score.is_quadratic:
        raise UnsupportedCaseError("the reduced objective is defined for quadratic scores only")
    _check_sizes(score, q)
    co_mass = np.zeros((score.n, score.n))
    for A, members in q.groups().items():
        if len(members) < 2:
            continue
        idx = np.fromiter(members, dtype=np.int64, count=len(members))
        x = np.fromiter(members.values(), dtype=float, count=len(members))
        co_mass[np.ix_(idx, idx)] += np.outer(x, x)
    np.fill_diagonal(co_mass, 0.0)
    return float(score.mu1.sum() + 0.5 * np.sum(score.mu2 * co_mass))


def conditional_score(score: ClusterScore, q: FuzzyCover, i: int, A: NodeSet) -> float:
    """v_{q-i}(A) = mu1_i + sum_j q_j^A mu2_ij + sum_jk q_j^A q_k^A mu3_ijk."""
    A = A if isinstance(A, NodeSet) else NodeSet(A)
    if i not in A:
        raise ValueError(f"node {i} is not a member of {A!r}")
    _check_sizes(score, q)
    idx, x = q.member_masses(A)
    position = int(np.searchsorted(idx, i))
    return float(score.conditional_scores(idx, x)[position])


def derivative_iA(score: ClusterScore, q: FuzzyCover, i: int, A: NodeSet, form: str = "direct") -> float:
    """
    Derivative of F^V in direction (i, A).

    form="direct" reads the conditional score; form="difference" evaluates
    F^V with q_i moved entirely onto A minus F^V with node i holding no mass.
    """
    A = A if isinstance(A, NodeSet) else NodeSet(A)
    if form == "direct":
        return conditional_score(score, q, i, A)
    if form != "difference":
        raise ValueError(f"unknown derivative form '{form}'")
    if i not in A:
        raise ValueError(f"node {i} is not a member of {A!r}")
    _check_sizes(score, q)
    masses = q.as_masses()
    masses[i] = {A: 1.0}
    with_point = _objective(score, masses)
    masses[i] = {}
    without = _objective(score, masses)
    return with_point - without


def average_derivative(score: ClusterScore, q: FuzzyCover, A: NodeSet) -> float:
    """Mean over the members of A of their (i, A)-derivatives."""
    A = A if isinstance(A, NodeSet) else NodeSet(A)
    if not A:
        raise ValueError("average derivative of the empty set is undefined")
    _check_sizes(score, q)
    idx, x = q.member_masses(A)
    return float(score.conditional_scores(idx, x).mean())


def node_share(score: ClusterScore, q: FuzzyCover, i: int) -> float:
    """F^V_i: sum_A q_i^A v_{q-i}(A), node i's part of the objective."""
    dist: MembershipDistribution = q.dist(i)
    return float(sum(m * conditional_score(score, q, i, A) for A, m in dist.items()))


def objective_without(score: ClusterScore, q: FuzzyCover, i: int) -> float:
    """F^V_{-i}: the objective with node i's mass removed."""
    masses = q.as_masses()
    masses[i] = {}
    return _objective(score, masses)

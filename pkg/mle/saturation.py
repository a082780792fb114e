# mle/saturation.py

"""
Turning a fuzzy cover into a fuzzy clustering without changing F^V.

Only subsets carried by exactly two of their members are handled. The mass
the two members i, j put on such a subset A moves to the pair {i, j} and to
the singletons {i}, {j}, with the pair masses chosen so that the product
q_i^{ij} q_j^{ij} absorbs q_i^A q_j^A. Per-node totals are unchanged, so the
linear part of F^V is unchanged too.
"""

import logging
from math import sqrt

from network.errors import UnsupportedCaseError
from network.nodeset import NodeSet
from scores.cluster_score import ClusterScore

from .cover import FuzzyCover, MembershipDistribution
from .objective import big_f

logger = logging.getLogger(__name__)


def _pair_masses(product: float, total_i: float, total_j: float):
    """Pair masses (a, b) with a * b = product, a <= total_i, b <= total_j."""
    root = sqrt(product)
    if root <= total_i and root <= total_j:
        return root, root
    # product <= total_i * total_j, so clamping one side keeps the other feasible
    if total_i < total_j:
        return total_i, product / total_i
    return product / total_j, total_j


def saturate_pair(score: ClusterScore, q: FuzzyCover, A: NodeSet) -> FuzzyCover:
    """
    Remove subset A from the support when exactly two members carry it.

    Returns q unchanged when no member puts mass on A.
    """
    A = A if isinstance(A, NodeSet) else NodeSet(A)
    carriers = sorted(i for i in A if q.mass(i, A) > 0)
    if not carriers:
        return q
    if len(carriers) != 2 or len(carriers) == len(A):
        raise UnsupportedCaseError(
            f"saturation handles subsets carried by exactly two members out of three or more; "
            f"{A!r} is carried by {len(carriers)} of {len(A)}"
        )

    i, j = carriers
    pair = NodeSet((i, j))
    single_i, single_j = NodeSet.single(i), NodeSet.single(j)
    qi, qj = dict(q.dist(i).mass), dict(q.dist(j).mass)

    total_i = qi.get(pair, 0.0) + qi.get(single_i, 0.0) + qi[A]
    total_j = qj.get(pair, 0.0) + qj.get(single_j, 0.0) + qj[A]
    product = qi.get(pair, 0.0) * qj.get(pair, 0.0) + qi[A] * qj[A]
    new_i, new_j = _pair_masses(product, total_i, total_j)

    for mass, node_pair, single, total in ((qi, new_i, single_i, total_i), (qj, new_j, single_j, total_j)):
        del mass[A]
        mass[pair] = node_pair
        mass[single] = max(total - node_pair, 0.0)

    result = q.replace(i, MembershipDistribution(i, qi, normalize=True))
    result = result.replace(j, MembershipDistribution(j, qj, normalize=True))

    if logger.isEnabledFor(logging.DEBUG):
        before, after = big_f(score, q), big_f(score, result)
        logger.debug(f"[Saturation] {A!r} -> {pair!r}: F^V {before:.12g} -> {after:.12g}")
    return result


def saturate(score: ClusterScore, q: FuzzyCover) -> FuzzyCover:
    """Apply saturate_pair until q is a fuzzy clustering."""
    while True:
        violations = q.violations()
        if not violations:
            return q
        q = saturate_pair(score, q, violations[0])

# supervisor/two_stage.py

"""
Overlapping modules from repeated GreedyClustering runs.

Stage one searches for small modules only: every run starts from the
threshold initialization over a family of small candidate subsets, jittered
per run. Stage two searches for large modules only: every run starts from
covers spread over the unions of stage-one blocks that exceed a size
threshold, jittered per run in the same way. The weighted family of both
stages is the overlapping output.
"""

import logging
from typing import List, Optional

import numpy as np

from network.graph import WeightedGraph
from network.nodeset import NodeSet
from network.rng import make_rng
from mle.cover import FuzzyCover, MembershipDistribution
from scores.cluster_score import ClusterScore
from search.initialization import CandidateFamily, init_threshold, per_member_score, shifted_weights

from supervisor.config import DEFAULT_RUNS, DEFAULT_VARTHETA, JITTER, LARGE_INIT_MODES, OMEGA_MAX_MEMBERS
from supervisor.dispatcher import multi_run
from supervisor.family import WeightedFamily
from supervisor.omega import omega

logger = logging.getLogger(__name__)


def perturb_cover(q: FuzzyCover, seed: int, jitter: float = JITTER) -> FuzzyCover:
    """Scale every mass by exp(u), u ~ U[-jitter, jitter], then renormalize each node."""
    if jitter < 0:
        raise ValueError("jitter must be non-negative")
    rng = make_rng(seed)
    dists = []
    for dist in q:
        factors = np.exp(rng.uniform(-jitter, jitter, size=len(dist)))
        masses = {A: m * f for (A, m), f in zip(dist.items(), factors.tolist())}
        dists.append(MembershipDistribution(dist.node, masses, normalize=True))
    return FuzzyCover(dists)


def large_module_init(
    family: WeightedFamily,
    vartheta: int,
    mode: str = "uniform",
    max_omega_size: Optional[int] = None,
    max_omega_members: int = OMEGA_MAX_MEMBERS,
    omega_sets: Optional[List[NodeSet]] = None,
) -> FuzzyCover:
    """
    Cover spread over the unions of family members larger than vartheta.

    Each node splits its mass over the qualifying unions containing it,
    uniformly or in proportion to the shifted v(B)/|B| ("score-weighted").
    Nodes in no qualifying union get their singleton.
    """
    if vartheta < 0:
        raise ValueError("vartheta must be a non-negative integer")
    if mode not in LARGE_INIT_MODES:
        raise ValueError(f"unknown large-module init mode '{mode}'; choose from {list(LARGE_INIT_MODES)}")
    if omega_sets is None:
        omega_sets = omega(family, max_omega_size, max_omega_members)
    large = [B for B in omega_sets if len(B) > vartheta]
    if not large:
        logger.warning(f"[TwoStage] no union has more than {vartheta} members; every node keeps its singleton")

    dists = []
    for i in range(family.n):
        candidates = [B for B in large if i in B]
        if not candidates:
            dists.append(MembershipDistribution.point(i, NodeSet.single(i)))
            continue
        if mode == "uniform":
            weights = np.full(len(candidates), 1.0 / len(candidates))
        else:
            weights = shifted_weights([per_member_score(family.score, B) for B in candidates])
            weights = weights / weights.sum()
        dists.append(MembershipDistribution(i, dict(zip(candidates, weights.tolist())), normalize=True))
    return FuzzyCover(dists)


class OverlapSupervisor:
    """
    Runs the small-module stage and then the large-module stage.
    Stage-two runs take seeds and ids after those of stage one.
    """

    def __init__(
        self,
        score: ClusterScore,
        graph: WeightedGraph,
        small_family: Optional[CandidateFamily] = None,
        theta: float = 0.0,
        vartheta: int = DEFAULT_VARTHETA,
        runs: int = DEFAULT_RUNS,
        base_seed: int = 0,
        mode: str = "uniform",
        max_omega_size: Optional[int] = None,
        max_omega_members: int = OMEGA_MAX_MEMBERS,
    ):
        if graph.n != score.n:
            raise ValueError(f"graph has {graph.n} nodes, score has {score.n}")
        if runs < 1:
            raise ValueError("runs must be at least 1")
        if vartheta < 0:
            raise ValueError("vartheta must be a non-negative integer")
        self.score = score
        self.graph = graph
        self.small_family = CandidateFamily.edges_of(graph) if small_family is None else small_family
        self.theta = theta
        self.vartheta = vartheta
        self.runs = runs
        self.base_seed = base_seed
        self.mode = mode
        self.max_omega_size = max_omega_size
        self.max_omega_members = max_omega_members
        self.small_modules: Optional[WeightedFamily] = None
        self.large_modules: Optional[WeightedFamily] = None

    def small_stage(self) -> WeightedFamily:
        base = init_threshold(self.score, self.small_family, self.theta)
        inits = [perturb_cover(base, self.base_seed + r) for r in range(self.runs)]
        self.small_modules = multi_run(self.score, inits, self.base_seed)
        logger.info(f"[TwoStage] small-module stage: {len(self.small_modules)} distinct blocks")
        return self.small_modules

    def large_stage(self) -> WeightedFamily:
        if self.small_modules is None:
            raise RuntimeError("Must run small_stage() before large_stage()")
        base = large_module_init(
            self.small_modules,
            self.vartheta,
            self.mode,
            self.max_omega_size,
            self.max_omega_members,
        )
        seed = self.base_seed + self.runs
        inits = [perturb_cover(base, seed + r) for r in range(self.runs)]
        self.large_modules = multi_run(self.score, inits, seed, run_offset=self.runs)
        logger.info(f"[TwoStage] large-module stage: {len(self.large_modules)} distinct blocks")
        return self.large_modules

    def run(self) -> WeightedFamily:
        family = self.small_stage().merged(self.large_stage())
        overlap = "overlapping" if not family.is_disjoint() else "disjoint"
        logger.info(f"[TwoStage] family of {len(family)} {overlap} modules from {2 * self.runs} runs")
        return family


def two_stage(
    score: ClusterScore,
    graph: WeightedGraph,
    small_family: Optional[CandidateFamily] = None,
    theta: float = 0.0,
    vartheta: int = DEFAULT_VARTHETA,
    runs: int = DEFAULT_RUNS,
    base_seed: int = 0,
    mode: str = "uniform",
    max_omega_size: Optional[int] = None,
    max_omega_members: int = OMEGA_MAX_MEMBERS,
) -> WeightedFamily:
    """Small modules first, then large ones; small_family defaults to the graph's edges."""
    supervisor = OverlapSupervisor(
        score,
        graph,
        small_family,
        theta,
        vartheta,
        runs,
        base_seed,
        mode,
        max_omega_size,
        max_omega_members,
    )
    return supervisor.run()

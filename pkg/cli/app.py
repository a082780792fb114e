# cli/app.py

"""
Batch runner.

    python -m cli cluster graph.txt --score modularity --init full-uniform -o out.yaml
    python -m cli merge graph.txt --seed 7 --trace merge.jsonl
    python -m cli overlap graph.txt --family pairs --vartheta 2 --runs 16
    python -m cli gen half-regular --n 8 -o hr8.txt
    python -m cli oracle graph.txt --score dual-weight
"""

import argparse
import logging
from typing import Callable, Dict, List, Optional

import yaml
from pydantic import ValidationError

from network.errors import CapExceededError
from network.generators import clique_union, half_regular, noisy_partition_graph, partition_graph
from network.edge_list import format_edge_list
from network.graph import WeightedGraph
from network.partition import Partition
from mle.cover import FuzzyCover, pairs_cover, partition_to_cover, uniform_cover
from scores import build_score
from scores.cluster_score import ClusterScore
from search.greedy_clustering import greedy_clustering
from search.greedy_merging import greedy_merging
from search.initialization import CandidateFamily, init_threshold
from search.oracle import brute_force_optimum, is_local_optimum
from supervisor.two_stage import two_stage

from .config import EXIT_CAP, EXIT_IO, EXIT_OK, EXIT_USAGE
from .records import (
    InputFileError,
    PartitionRecord,
    emit,
    family_record,
    load_cover,
    load_graph,
    load_partition,
    to_yaml,
    write_trace,
)
from .run_config import GenConfig, RunConfig, layered_config
from .utils import report_blocks, report_error, report_seed, setup_logger

logger = logging.getLogger(__name__)

FAMILY_BUILDERS: Dict[str, Callable[[WeightedGraph], CandidateFamily]] = {
    "all": lambda g: CandidateFamily.all_subsets(g.n),
    "pairs": lambda g: CandidateFamily.all_pairs(g.n),
    "edges": CandidateFamily.edges_of,
    "singletons": lambda g: CandidateFamily.singletons(g.n),
}


def build_family(kind: str, graph: WeightedGraph) -> CandidateFamily:
    return FAMILY_BUILDERS[kind](graph)


def build_init(config: RunConfig, score: ClusterScore, graph: WeightedGraph) -> FuzzyCover:
    if config.init == "full-uniform":
        return uniform_cover(graph.n)
    if config.init == "pairs":
        return pairs_cover(graph.n)
    if config.init == "threshold":
        return init_threshold(score, build_family(config.family, graph), config.theta)
    if config.init == "file":
        return load_cover(config.init_file, graph.n)
    return partition_to_cover(Partition.bottom(graph.n))


def _load(config: RunConfig):
    if not config.input:
        raise ValueError("an input edge list is required")
    graph = load_graph(config.input)
    score = build_score(config.score, graph, **config.score_params())
    logger.info(f"[Runner] {score!r} on {graph!r} from {config.input}")
    return graph, score


def _partition_record(command: str, config: RunConfig, score: ClusterScore, P: Partition) -> PartitionRecord:
    values = [score.eval_set(block) for block in P]
    report_blocks(f"{command}: {score.label}", P.blocks, values, total=sum(values))
    return PartitionRecord(
        command=command,
        score=score.label,
        params=score.params,
        seed=config.seed,
        n=P.n,
        blocks=P.to_lists(),
        value=float(sum(values)),
        local_optimum=is_local_optimum(score, P),
    )


def cmd_cluster(config: RunConfig) -> PartitionRecord:
    """GreedyClustering from the configured initial cover."""
    graph, score = _load(config)
    init = build_init(config, score, graph)
    report_seed(config.seed)
    partition, trace = greedy_clustering(score, init, config.seed)
    record = _partition_record("cluster", config, score, partition)
    emit(to_yaml(record), config.output)
    if config.trace:
        write_trace(trace, config.trace)
    return record


def cmd_merge(config: RunConfig) -> PartitionRecord:
    """GreedyMerging from the finest partition or a --start partition file."""
    graph, score = _load(config)
    start = load_partition(config.start, graph.n) if config.start else None
    report_seed(config.seed)
    partition, trace = greedy_merging(score, start, config.seed)
    record = _partition_record("merge", config, score, partition)
    emit(to_yaml(record), config.output)
    if config.trace:
        write_trace(trace, config.trace)
    return record


def cmd_overlap(config: RunConfig):
    """Two-stage small-then-large module search; writes the weighted family."""
    graph, score = _load(config)
    report_seed(config.seed)
    family = two_stage(
        score,
        graph,
        small_family=build_family(config.family, graph),
        theta=config.theta,
        vartheta=config.vartheta,
        runs=config.runs,
        base_seed=config.seed,
        mode=config.mode,
        max_omega_size=config.max_omega_size,
        max_omega_members=config.max_omega_members,
    )
    members = family.members()
    report_blocks(f"overlap: {score.label}", members, [family.value(A) for A in members])
    record = family_record(family, config.seed)
    emit(to_yaml(record), config.output)
    return record


def cmd_gen(config: GenConfig) -> WeightedGraph:
    """Benchmark graph as an edge list."""
    if config.kind == "half-regular":
        graph = half_regular(config.n)
    elif config.kind == "partition":
        n = config.n if config.n is not None else 1 + max(i for block in config.blocks for i in block)
        graph = partition_graph(config.blocks, n)
    elif config.kind == "noisy":
        report_seed(config.seed)
        graph = noisy_partition_graph(config.blocks, config.p_add, config.p_del, config.seed)
    else:
        graph = clique_union(config.cliques).graph
    emit(format_edge_list(graph), config.output)
    return graph


def cmd_oracle(config: RunConfig) -> PartitionRecord:
    """Exact optimum by enumerating every partition."""
    _, score = _load(config)
    partition, _ = brute_force_optimum(score)
    record = _partition_record("oracle", config, score, partition)
    record.seed = None
    emit(to_yaml(record), config.output)
    return record


def _add_run_arguments(parser: argparse.ArgumentParser, extra: bool = True) -> None:
    # defaults are None so unset flags fall through to the config layers
    parser.add_argument("input", help="Edge-list file")
    parser.add_argument("--score", help="Score kind: modularity, dual-weight, common-neighbor, cubic-triangle")
    parser.add_argument("--beta", type=float, help="Triangle weight of the cubic score, in (0, 1]")
    parser.add_argument("--config", help="YAML file of run parameters")
    parser.add_argument("-o", "--output", help="Output file (stdout if omitted)")
    if extra:
        parser.add_argument("--seed", type=int, help="RNG seed")
        parser.add_argument("--trace", help="JSON-lines trace file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cli", description="Module search over additive partition functions.")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    cluster = sub.add_parser("cluster", help="GreedyClustering")
    _add_run_arguments(cluster)
    cluster.add_argument("--init", help="full-uniform, pairs, threshold, file or singletons")
    cluster.add_argument("--init-file", dest="init_file", help="Cover file for --init file")
    cluster.add_argument("--family", help="Candidate family for --init threshold: all, pairs, edges, singletons")
    cluster.add_argument("--theta", type=float, help="Per-member score threshold")

    merge = sub.add_parser("merge", help="GreedyMerging")
    _add_run_arguments(merge)
    merge.add_argument("--start", help="Partition file to start merging from")

    overlap = sub.add_parser("overlap", help="Two-stage overlapping module search")
    _add_run_arguments(overlap, extra=False)
    overlap.add_argument("--seed", type=int, help="Base seed of the runs")
    overlap.add_argument("--family", help="Small-module candidate family: all, pairs, edges, singletons")
    overlap.add_argument("--theta", type=float, help="Per-member score threshold of the small stage")
    overlap.add_argument("--vartheta", type=int, help="Large modules have more members than this")
    overlap.add_argument("--runs", type=int, help="Runs per stage")
    overlap.add_argument("--mode", help="Large-module init: uniform or score-weighted")
    overlap.add_argument("--max-omega-size", dest="max_omega_size", type=int, help="Largest union kept")
    overlap.add_argument("--max-omega-members", dest="max_omega_members", type=int, help="Most unions kept")

    oracle = sub.add_parser("oracle", help="Exact optimum (at most 12 nodes)")
    _add_run_arguments(oracle, extra=False)

    gen = sub.add_parser("gen", help="Benchmark graph generator")
    gen.add_argument("kind", help="half-regular, partition, noisy or clique-union")
    gen.add_argument("--n", type=int, help="Number of nodes")
    gen.add_argument("--blocks", type=yaml.safe_load, help="Blocks as a YAML list, e.g. '[[0,1],[2,3]]'")
    gen.add_argument("--cliques", type=yaml.safe_load, help="Cliques as a YAML list")
    gen.add_argument("--p-add", dest="p_add", type=float, default=0.0, help="Probability of a spurious edge")
    gen.add_argument("--p-del", dest="p_del", type=float, default=0.0, help="Probability of a dropped edge")
    gen.add_argument("--seed", type=int, default=0, help="RNG seed")
    gen.add_argument("-o", "--output", help="Output file (stdout if omitted)")
    return parser


COMMANDS = {
    "cluster": cmd_cluster,
    "merge": cmd_merge,
    "overlap": cmd_overlap,
    "oracle": cmd_oracle,
}


def _run(args: argparse.Namespace) -> None:
    options = {k: v for k, v in vars(args).items() if k not in ("command", "verbose", "config")}
    if args.command == "gen":
        cmd_gen(GenConfig.model_validate(options))
        return
    config = layered_config(options, args.config)
    COMMANDS[args.command](config)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    setup_logger(args.verbose)

    try:
        _run(args)
    except (InputFileError, OSError, yaml.YAMLError) as e:
        report_error(str(e))
        return EXIT_IO
    except CapExceededError as e:
        report_error(str(e))
        return EXIT_CAP
    except (ValidationError, ValueError) as e:
        report_error(f"usage error: {e}")
        return EXIT_USAGE
    return EXIT_OK

# cli/run_config.py

import logging
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from scores import SCORE_REGISTRY

from .config import DEFAULTS_FILE

logger = logging.getLogger(__name__)

InitMode = Literal["full-uniform", "pairs", "threshold", "file", "singletons"]
FamilyKind = Literal["all", "pairs", "edges", "singletons"]
LargeInitMode = Literal["uniform", "score-weighted"]
GraphKind = Literal["half-regular", "partition", "noisy", "clique-union"]


class RunConfig(BaseModel):
    """Parameters shared by the cluster, merge, overlap and oracle commands."""

    model_config = ConfigDict(extra="forbid")

    score: str = "modularity"
    beta: float = Field(0.5, gt=0.0, le=1.0)
    init: InitMode = "full-uniform"
    init_file: Optional[str] = None
    family: FamilyKind = "edges"
    theta: float = Field(0.0, allow_inf_nan=False)
    vartheta: int = Field(2, ge=0)
    runs: int = Field(8, ge=1)
    seed: int = Field(0, ge=0)
    max_omega_size: Optional[int] = Field(None, ge=1)
    max_omega_members: int = Field(10000, ge=1)
    mode: LargeInitMode = "uniform"
    input: Optional[str] = None
    output: Optional[str] = None
    trace: Optional[str] = None
    start: Optional[str] = None

    @model_validator(mode="after")
    def check_combinations(self) -> "RunConfig":
        if self.score not in SCORE_REGISTRY:
            raise ValueError(f"unknown score '{self.score}'; choose from {sorted(SCORE_REGISTRY)}")
        if self.init == "file" and not self.init_file:
            raise ValueError("--init file needs --init-file PATH")
        return self

    def score_params(self) -> Dict[str, float]:
        return {"beta": self.beta} if self.score == "cubic-triangle" else {}


class GenConfig(BaseModel):
    """Parameters of the benchmark graph generator command."""

    model_config = ConfigDict(extra="forbid")

    kind: GraphKind
    n: Optional[int] = Field(None, ge=1)
    blocks: Optional[List[List[int]]] = None
    cliques: Optional[List[List[int]]] = None
    p_add: float = Field(0.0, ge=0.0, le=1.0)
    p_del: float = Field(0.0, ge=0.0, le=1.0)
    seed: int = Field(0, ge=0)
    output: Optional[str] = None

    @model_validator(mode="after")
    def check_kind(self) -> "GenConfig":
        if self.kind == "half-regular" and self.n is None:
            raise ValueError("half-regular graphs need --n")
        if self.kind in ("partition", "noisy") and not self.blocks:
            raise ValueError(f"{self.kind} graphs need --blocks")
        if self.kind == "clique-union" and not self.cliques:
            raise ValueError("clique-union graphs need --cliques")
        return self


def load_defaults(path: str = DEFAULTS_FILE) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        return yaml.safe_load(handle) or {}


def layered_config(overrides: Dict[str, Any], config_file: Optional[str] = None) -> RunConfig:
    """
    Packaged defaults, then the optional YAML config file, then the given
    overrides (None values are skipped).
    """
    values = load_defaults()
    if config_file:
        with open(config_file, "r", encoding="utf-8") as handle:
            from_file = yaml.safe_load(handle) or {}
        if not isinstance(from_file, dict):
            raise ValueError(f"{config_file} must hold a mapping of run parameters")
        values.update(from_file)
        logger.debug(f"[Config] loaded {sorted(from_file)} from {config_file}")
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig.model_validate(values)

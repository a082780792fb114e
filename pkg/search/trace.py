# search/trace.py

from typing import Iterable, List, Literal, Optional

from pydantic import BaseModel, Field

from network.nodeset import NodeSet

Action = Literal["merge", "fix-block", "split"]


class TraceStep(BaseModel):
    """One search step: what happened and the objective right after it."""

    t: int
    action: Action
    subsets: List[List[int]]
    objective: float


class SearchTrace(BaseModel):
    seed: int
    steps: List[TraceStep] = Field(default_factory=list)

    def record(self, action: Action, subsets: Iterable[NodeSet], objective: float) -> TraceStep:
        step = TraceStep(
            t=len(self.steps),
            action=action,
            subsets=[list(s) for s in subsets],
            objective=float(objective),
        )
        self.steps.append(step)
        return step

    def objectives(self, action: Optional[Action] = None) -> List[float]:
        return [s.objective for s in self.steps if action is None or s.action == action]

    def actions(self) -> List[str]:
        return [s.action for s in self.steps]

    def to_jsonl(self) -> str:
        return "".join(step.model_dump_json() + "\n" for step in self.steps)

    @classmethod
    def from_jsonl(cls, text: str, seed: int) -> "SearchTrace":
        steps = [TraceStep.model_validate_json(line) for line in text.splitlines() if line.strip()]
        return cls(seed=seed, steps=steps)

"""Outcome types shared by the positivity and obstruction checks."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional


class Positivity(str, Enum):
    AMPLE = "Ample"
    NEF_NOT_AMPLE = "NefNotAmple"
    NOT_NEF = "NotNef"

    @property
    def is_nef(self):
        return self is not Positivity.NOT_NEF


class VerdictValue(str, Enum):
    NOT_AMPLE = "NotAmple"
    AMPLE = "Ample"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TraceStep:
    rule: str
    anchor: str
    detail: str = ""

    def to_dict(self):
        return {"rule": self.rule, "anchor": self.anchor, "detail": self.detail}


@dataclass
class Verdict:
    value: VerdictValue
    trace: List[TraceStep] = field(default_factory=list)
    witness: Optional[Any] = None

    def to_dict(self):
        out = {"verdict": self.value.value, "trace": [s.to_dict() for s in self.trace]}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

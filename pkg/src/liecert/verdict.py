"""Three-valued verdicts with evidence.

A TriState is never a bare boolean: a ``TRUE`` verdict carries a
machine-checkable certificate, a ``FALSE`` verdict carries a witness that an
independent operation can replay, and ``UNKNOWN`` carries the budget that was
exhausted while searching.  Certificates and witnesses are plain dicts with a
``kind`` tag so they can be rendered to JSON untouched.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TriState:
    verdict: Verdict
    certificate: dict | None = None
    witness: dict | None = None
    budget: dict | None = None
    note: str = ""

    def __post_init__(self):
        if self.verdict is Verdict.TRUE and self.certificate is None:
            raise ValueError("TRUE verdict requires a certificate")
        if self.verdict is Verdict.FALSE and self.witness is None:
            raise ValueError("FALSE verdict requires a witness")
        if self.verdict is Verdict.UNKNOWN and self.budget is None:
            raise ValueError("UNKNOWN verdict requires a budget report")

    @property
    def is_true(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def is_false(self) -> bool:
        return self.verdict is Verdict.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def to_jsonable(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.certificate is not None:
            out["certificate"] = jsonable(self.certificate)
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.budget is not None:
            out["budget"] = jsonable(self.budget)
        if self.note:
            out["note"] = self.note
        return out


def true(certificate: dict, note: str = "") -> TriState:
    return TriState(Verdict.TRUE, certificate=certificate, note=note)


def false(witness: dict, note: str = "") -> TriState:
    return TriState(Verdict.FALSE, witness=witness, note=note)


def unknown(budget: dict, note: str = "") -> TriState:
    return TriState(Verdict.UNKNOWN, budget=budget, note=note)


def jsonable(obj):
    """Recursively convert certificate payloads into JSON-ready values.

    Fractions become their canonical string, tuples become lists, and any
    object exposing ``to_jsonable`` delegates to it.  Dict keys are stringified.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_jsonable"):
        return obj.to_jsonable()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Verdict):
        return obj.value
    return str(obj)


@dataclass(frozen=True)
class SearchBudget:
    """Deterministic search limits used by the sampled deciders."""

    max_height: int = 10
    max_candidates: int = 10_000

    def report(self, consumed: int, what: str = "vectors") -> dict:
        return {
            "kind": "search_exhausted",
            "searched": what,
            "candidates": consumed,
            "max_height": self.max_height,
            "max_candidates": self.max_candidates,
        }


DEFAULT_BUDGET = SearchBudget()

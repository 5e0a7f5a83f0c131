"""Append-only reasoning memory: premises plus positive/negative paths.

Initialized from the identified input premises, grown by stored
exploration outcomes. The memory feeds prompt history, the failed-primary
exclusion rule, and the sufficiency check. Under the no-memory ablation
the history views come back empty but premise bookkeeping (which the loop
needs to terminate) stays intact.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .core import Kind, Origin, Polarity, Premise, ReasoningPath, Verdict
from .errors import InternalInvariantViolation

if TYPE_CHECKING:
    from .explore import ExplorationResult


class ReasoningMemory:
    def __init__(self, no_memory: bool = False):
        self.premises: dict[str, Premise] = {}
        self.paths: list[ReasoningPath] = []
        self.iteration_counter = 0
        self.no_memory = no_memory
        self._transform_count = 0
        self._transform_log: list[dict] = []

    @classmethod
    def from_sets(cls, determinate, indeterminate, no_memory: bool = False) -> "ReasoningMemory":
        memory = cls(no_memory=no_memory)
        for premise in (*determinate, *indeterminate):
            memory._insert(premise)
        return memory

    @classmethod
    def from_premises(cls, premises, no_memory: bool = False) -> "ReasoningMemory":
        """Ungrouped initialization, used when identification is ablated."""
        memory = cls(no_memory=no_memory)
        for premise in premises:
            memory._insert(premise)
        return memory

    def _insert(self, premise: Premise):
        if premise.id in self.premises:
            raise InternalInvariantViolation(f"duplicate premise id {premise.id!r}")
        self.premises[premise.id] = premise

    # -- mutation ---------------------------------------------------------

    def store(self, result: "ExplorationResult") -> None:
        """Record one exploration attempt per the admission rule: accepted
        propositions join the premises with a positive path, rejected ones
        leave only a negative path."""
        self.iteration_counter += 1
        admitted = result.verdict.overall and result.boundary_ok
        path = ReasoningPath(
            sources=tuple(result.sources),
            proposition_text=result.proposition.text,
            polarity=Polarity.POSITIVE if admitted else Polarity.NEGATIVE,
            iteration=self.iteration_counter,
        )
        if admitted:
            self._insert(result.proposition)
        self.paths.append(path)

    def add_transformed(self, text: str, iteration: int) -> Premise:
        """Admit a transformation-derived determinate premise (no path)."""
        self._transform_count += 1
        premise = Premise(
            id=f"g{self._transform_count}",
            text=text,
            kind=Kind.DETERMINATE,
            origin=_derived_origin(max(iteration, 1)),
        )
        self._insert(premise)
        self._transform_log.append({"after_iteration": iteration, "id": premise.id,
                                    "text": premise.text})
        return premise

    # -- views ------------------------------------------------------------

    def extract_history(self) -> tuple[ReasoningPath, ...]:
        """All stored paths in iteration order; empty when memory is ablated."""
        if self.no_memory:
            return ()
        return tuple(self.paths)

    def failed_primaries(self) -> set[str]:
        """Primary premises of negative paths; empty when memory is ablated."""
        if self.no_memory:
            return set()
        return {path.primary_id for path in self.paths
                if path.polarity is Polarity.NEGATIVE}

    def determinate_view(self) -> list[Premise]:
        """Determinate premises: inputs first, derived in admission order."""
        return [p for p in self.premises.values() if p.kind is Kind.DETERMINATE]

    def indeterminate_view(self) -> list[Premise]:
        return [p for p in self.premises.values() if p.kind is Kind.INDETERMINATE]

    def all_premises(self) -> list[Premise]:
        return list(self.premises.values())

    def contains_normalized(self, normalized: str) -> bool:
        return any(p.normalized == normalized for p in self.premises.values())

    def derived_count(self) -> int:
        return sum(1 for p in self.premises.values() if not p.origin.is_input)

    def next_derived_id(self) -> str:
        return f"x{self.iteration_counter + 1}"

    # -- serialization ----------------------------------------------------

    def trace_iterations(self) -> list[dict]:
        return [
            {
                "t": path.iteration,
                "primary": path.primary_id,
                "supplements": list(path.sources[1:]),
                "proposition": path.proposition_text,
                "verdict": self._verdict_for(path),
                "polarity": path.polarity.value,
            }
            for path in self.paths
        ]

    def _verdict_for(self, path: ReasoningPath) -> dict:
        # the stored verdicts live on the trace records the controller
        # keeps; memory reconstructs the minimal admitted/rejected view
        admitted = path.polarity is Polarity.POSITIVE
        return Verdict.of(admitted, admitted, admitted).to_dict()

    def transform_log(self) -> list[dict]:
        return list(self._transform_log)

    @classmethod
    def restore(cls, inputs: list[Premise], iterations: list[dict],
                transforms: list[dict] | None = None,
                no_memory: bool = False) -> "ReasoningMemory":
        """Rebuild a memory from its trace records; the round trip is exact."""
        memory = cls.from_premises(inputs, no_memory=no_memory)
        pending = sorted(transforms or [], key=lambda r: r["after_iteration"])
        cursor = 0

        def flush(up_to: int):
            nonlocal cursor
            while cursor < len(pending) and pending[cursor]["after_iteration"] <= up_to:
                record = pending[cursor]
                memory.add_transformed(record["text"], record["after_iteration"])
                cursor += 1

        flush(0)
        for record in sorted(iterations, key=lambda r: r["t"]):
            admitted = record["polarity"] == Polarity.POSITIVE.value
            verdict = Verdict.of(admitted, admitted, admitted)
            proposition = Premise(
                id=f"x{record['t']}",
                text=record["proposition"],
                kind=Kind.DETERMINATE,
                origin=_derived_origin(record["t"]),
            )
            result = _RestoredResult(
                proposition=proposition,
                sources=tuple([record["primary"], *record["supplements"]]),
                verdict=verdict,
                boundary_ok=True,
            )
            memory.store(result)
            flush(record["t"])
        flush(10 ** 9)
        return memory

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReasoningMemory):
            return NotImplemented
        return (self.premises == other.premises
                and self.paths == other.paths
                and self.iteration_counter == other.iteration_counter)


class _RestoredResult:
    """Duck-typed stand-in for ExplorationResult during trace replay."""

    def __init__(self, proposition, sources, verdict, boundary_ok):
        self.proposition = proposition
        self.sources = sources
        self.verdict = verdict
        self.boundary_ok = boundary_ok


def _derived_origin(iteration: int) -> Origin:
    return Origin(derived_at=iteration)

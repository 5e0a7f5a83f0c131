"""Partition input premises into determinate and indeterminate sets.

A premise is determinate when it shares a content term with the
hypothesis and carries no conditional or disjunctive structure; those
statements can feed conclusion derivation directly. Everything else needs
combination first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Kind, Premise, Target
from .errors import BackendUnavailable
from .prioritize import TermProfiler, overlap_score


class IdentifyMode(enum.Enum):
    RULE_BASED = "rule-based"
    BACKEND_DELEGATED = "backend-delegated"


@dataclass(frozen=True)
class IdentificationResult:
    determinate: tuple[Premise, ...]
    indeterminate: tuple[Premise, ...]

    def to_dict(self) -> dict:
        return {
            "determinate": [{"id": p.id, "text": p.text} for p in self.determinate],
            "indeterminate": [{"id": p.id, "text": p.text} for p in self.indeterminate],
        }


def has_connective_structure(normalized: str) -> bool:
    """Surface test for conditional/disjunctive form on normalized text."""
    tokens = normalized.split()
    if tokens and tokens[0] == "if":
        return True
    return " then " in normalized or " or " in normalized or "either " in normalized


def classify_premise(premise: Premise, target: Target, profiler: TermProfiler) -> Kind:
    """Determinate iff the premise shares a noun or adjective with the
    hypothesis and is not conditional/disjunctive."""
    if has_connective_structure(premise.normalized):
        return Kind.INDETERMINATE
    premise_profile = profiler.profile(premise.text)
    hypothesis_profile = profiler.profile(target.hypothesis)
    if premise_profile.shares_term_with(hypothesis_profile):
        return Kind.DETERMINATE
    return Kind.INDETERMINATE


def _labeled(premises: list[tuple[Premise, Kind]]) -> IdentificationResult:
    determinate: list[Premise] = []
    indeterminate: list[Premise] = []
    for premise, kind in premises:
        if kind is Kind.DETERMINATE:
            determinate.append(premise.with_kind(kind, f"d{len(determinate) + 1}"))
        else:
            indeterminate.append(premise.with_kind(kind, f"i{len(indeterminate) + 1}"))
    return IdentificationResult(tuple(determinate), tuple(indeterminate))


def identify_all(premises: list[Premise], target: Target,
                 mode: IdentifyMode, profiler: TermProfiler,
                 backend=None) -> IdentificationResult:
    """Classify every premise; input order is preserved within each class.

    Determinate premises are relabeled d1..dk and indeterminate i1..im, in
    input order. An empty determinate set is repaired by promoting the
    single most relevant premise, so the reasoning loop always has a
    primary to pick.
    """
    if not premises:
        raise ValueError("cannot identify an empty premise list")

    classified: list[tuple[Premise, Kind]] = []
    for index, premise in enumerate(premises):
        if mode is IdentifyMode.BACKEND_DELEGATED and backend is not None:
            try:
                verdict = backend.classify_premise(premise.text, target.hypothesis)
            except BackendUnavailable as exc:
                raise BackendUnavailable(
                    f"identification failed at premise {index + 1}/{len(premises)}: {exc}",
                    partial=_labeled(classified),
                ) from exc
            if verdict is None:
                kind = classify_premise(premise, target, profiler)
            else:
                kind = Kind.DETERMINATE if verdict else Kind.INDETERMINATE
        else:
            kind = classify_premise(premise, target, profiler)
        classified.append((premise, kind))

    if all(kind is Kind.INDETERMINATE for _, kind in classified):
        hypothesis_profile = profiler.profile(target.hypothesis)
        best_index = max(
            range(len(classified)),
            key=lambda i: (overlap_score(profiler.profile(classified[i][0].text),
                                         hypothesis_profile), -i),
        )
        classified[best_index] = (classified[best_index][0], Kind.DETERMINATE)

    return _labeled(classified)

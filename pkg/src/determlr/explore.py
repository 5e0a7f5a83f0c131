"""Proposition generation and the three-fold verification gate.

A proposition must be a valid deduction from its sources, contribute
toward the target, and add information beyond the premises already known.
Checks short-circuit in that order; skipped checks are recorded as False.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Premise, Target, Verdict, normalize
from .errors import ExplorationFailed
from .identify import has_connective_structure
from .memory import ReasoningMemory
from .prioritize import TermProfiler


@dataclass(frozen=True)
class ExplorationResult:
    """One exploration attempt, ready to be stored in memory."""

    proposition: Premise
    sources: tuple[str, ...]
    verdict: Verdict
    boundary_ok: bool = True

    def __post_init__(self):
        if not self.sources:
            raise ValueError("exploration result without sources")


def explore(primary: Premise, supplements: list[Premise], target: Target,
            backend, boundary: tuple[str, ...] = ()) -> str:
    """Produce one declarative statement from the selected premises."""
    texts = [primary.text, *(p.text for p in supplements)]
    proposition = backend.explore(texts, target.hypothesis, boundary)
    if not proposition or not proposition.strip():
        raise ExplorationFailed("backend produced an empty proposition")
    return proposition.strip()


def verify_validity(sources: list[str], proposition: str, backend) -> bool:
    """Is the deduction from the sources to the proposition sanctioned?"""
    return bool(backend.judge_validity(sources, proposition))


def verify_usefulness(proposition: str, target: Target, memory: ReasoningMemory,
                      backend, profiler: TermProfiler) -> bool:
    """Does the proposition move the reasoning toward the target?

    Backends may delegate the judgement; the deterministic route accepts a
    proposition that shares a content term with the hypothesis, or reaches
    one through a single stored rule (one-hop usefulness).
    """
    judged = backend.judge_usefulness(proposition, target.hypothesis)
    if judged is not None:
        return bool(judged)
    prop_profile = profiler.profile(proposition)
    hyp_profile = profiler.profile(target.hypothesis)
    if prop_profile.shares_term_with(hyp_profile):
        return True
    for premise in memory.all_premises():
        if not has_connective_structure(premise.normalized):
            continue
        rule_profile = profiler.profile(premise.text)
        if prop_profile.shares_term_with(rule_profile) and \
                rule_profile.shares_term_with(hyp_profile):
            return True
    return False


def verify_novelty(proposition: str, memory: ReasoningMemory, backend) -> bool:
    """Does the proposition add information beyond the known premises?

    The normalized-text collision check always applies; when the backend
    offers a paraphrase judgement, both must pass.
    """
    if memory.contains_normalized(normalize(proposition)):
        return False
    judged = backend.judge_novelty(proposition, [p.text for p in memory.all_premises()])
    if judged is None:
        return True
    return bool(judged)


def verify(proposition: str, sources: list[Premise], target: Target,
           memory: ReasoningMemory, backend, profiler: TermProfiler) -> Verdict:
    """Three-fold verification with short-circuiting: validity, then
    usefulness, then novelty. Later checks skipped after a failure count
    as False."""
    valid = verify_validity([p.text for p in sources], proposition, backend)
    if not valid:
        return Verdict.of(False, False, False)
    useful = verify_usefulness(proposition, target, memory, backend, profiler)
    if not useful:
        return Verdict.of(True, False, False)
    novel = verify_novelty(proposition, memory, backend)
    return Verdict.of(True, useful, novel)

"""Two-stage premise scoring and selection.

Stage one scores each determinate premise's relevance to the hypothesis
and picks the argmax as the primary premise. Stage two scores every other
premise as a supplement to the primary and keeps those at or above the
threshold.

Scoring is term-overlap counting: 1/4 per shared noun, 3/10 per shared
adjective, capped at 1, plus a 1/4 bonus when the candidate is a
conditional whose antecedent the primary satisfies. Scores are exact
Fractions so conformance tests can assert equality with zero tolerance.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .core import Premise, Target, normalize
from .errors import EmptyDeterminateSet, StatementParseError
from .oracle import Fact, Rule, match_antecedent, parse_statement

NOUN_WEIGHT = Fraction(1, 4)
ADJECTIVE_WEIGHT = Fraction(3, 10)
HYPOTHETICAL_BONUS = Fraction(1, 4)
SCORE_CAP = Fraction(1)
DEFAULT_THETA = Fraction(1, 4)

_WORD = re.compile(r"[a-z0-9_]+")
_CAPITALIZED_RUN = re.compile(r"\b(?:[A-Z][a-z]+ )+[A-Z][a-z]+\b")
_LEADING_DETERMINER = re.compile(r"^(?:The|A|An|If|Then) ")


@dataclass(frozen=True)
class TermProfile:
    """Content terms of one statement, split by part of speech."""

    nouns: frozenset[str]
    adjectives: frozenset[str]

    @property
    def terms(self) -> frozenset[str]:
        return self.nouns | self.adjectives

    def shares_term_with(self, other: "TermProfile") -> bool:
        return bool(self.terms & other.terms)


def _load_wordlist(name: str) -> tuple[str, ...]:
    text = resources.files("determlr.data").joinpath(name).read_text(encoding="utf-8")
    return tuple(line.strip() for line in text.splitlines() if line.strip())


class TermProfiler:
    """Deterministic term tagger: stopword removal plus an adjective lexicon.

    Any non-stopword token absent from the adjective lexicon counts as a
    noun. Multiword entities from the known-entity table (and runs of
    capitalized words in the raw text) are merged into single terms.
    Dataset loaders may extend the entity table.
    """

    def __init__(self, stopwords=None, adjectives=None, entities=None):
        self.stopwords = frozenset(stopwords if stopwords is not None
                                   else _load_wordlist("stopwords.txt"))
        self.adjectives = frozenset(adjectives if adjectives is not None
                                    else _load_wordlist("adjectives.txt"))
        base = tuple(entities) if entities is not None else _load_wordlist("entities.txt")
        # longest first so overlapping entities merge greedily
        self.entities = tuple(sorted(base, key=len, reverse=True))
        self._cache: dict[str, TermProfile] = {}

    def with_entities(self, extra) -> "TermProfiler":
        return TermProfiler(self.stopwords, self.adjectives, tuple(self.entities) + tuple(extra))

    def _merge_entities(self, norm: str, raw: str) -> str:
        found = list(self.entities)
        for run in _CAPITALIZED_RUN.findall(raw):
            run = _LEADING_DETERMINER.sub("", run)
            if " " in run:
                found.append(run.lower())
        for entity in sorted(set(found), key=len, reverse=True):
            norm = re.sub(rf"\b{re.escape(entity)}\b", entity.replace(" ", "_"), norm)
        return norm

    def profile(self, text: str) -> TermProfile:
        cached = self._cache.get(text)
        if cached is not None:
            return cached
        norm = self._merge_entities(normalize(text), text)
        tokens = _WORD.findall(norm)
        nouns: set[str] = set()
        adjectives: set[str] = set()
        for i, token in enumerate(tokens):
            if token in ("a", "an"):
                # determiner when it precedes a content word; otherwise a
                # bare term ("a is true" names an entity called a)
                nxt = tokens[i + 1] if i + 1 < len(tokens) else None
                if nxt is not None and nxt not in self.stopwords:
                    continue
            elif token in self.stopwords:
                continue
            term = token.replace("_", " ")
            if token in self.adjectives:
                adjectives.add(term)
            else:
                nouns.add(term)
        result = TermProfile(frozenset(nouns - adjectives), frozenset(adjectives))
        self._cache[text] = result
        return result


@lru_cache(maxsize=1)
def default_profiler() -> TermProfiler:
    return TermProfiler()


class Stage(enum.Enum):
    RELEVANCE = "relevance"
    SUPPLEMENT = "supplement"


@dataclass(frozen=True)
class ScoredCandidate:
    premise_id: str
    score: Fraction
    stage: Stage

    def __post_init__(self):
        if not 0 <= self.score <= 1:
            raise ValueError(f"score out of range: {self.score}")


@dataclass(frozen=True)
class SelectionResult:
    primary: Premise
    supplements: tuple[Premise, ...]
    scores: dict[str, Fraction]


def overlap_score(left: TermProfile, right: TermProfile) -> Fraction:
    raw = (NOUN_WEIGHT * len(left.nouns & right.nouns)
           + ADJECTIVE_WEIGHT * len(left.adjectives & right.adjectives))
    return min(SCORE_CAP, raw)


def relevance(premise: Premise, target: Target, profiler: TermProfiler) -> Fraction:
    """Shared-term score between a premise and the hypothesis, in [0, 1]."""
    return overlap_score(profiler.profile(premise.text), profiler.profile(target.hypothesis))


_IF_THEN = re.compile(r"^if\s+(.+?)\s*,?\s*then\s+.+$")


def _antecedent_satisfied(primary: Premise, candidate: Premise) -> bool:
    """Whether the primary statement matches the conditional's antecedent,
    with "something"/"it" standing for the primary's subject."""
    try:
        rule = parse_statement(candidate.normalized)
        fact = parse_statement(primary.normalized)
        if isinstance(rule, Rule) and isinstance(fact, Fact):
            return match_antecedent(fact.atom, rule)
    except StatementParseError:
        pass
    # propositional fallback: "A is true." asserts the bare antecedent A
    m = _IF_THEN.match(candidate.normalized)
    if not m:
        return False
    antecedent = m.group(1)
    prim = primary.normalized
    core = prim[:-len(" is true")] if prim.endswith(" is true") else prim
    return antecedent in (prim, core) or prim == f"{antecedent} is true"


def supplement_score(primary: Premise, candidate: Premise,
                     profiler: TermProfiler) -> Fraction:
    """Likelihood of the candidate combining with the primary, in [0, 1]."""
    if candidate.id == primary.id:
        raise ValueError("a premise cannot supplement itself")
    base = (NOUN_WEIGHT * len(profiler.profile(primary.text).nouns
                              & profiler.profile(candidate.text).nouns)
            + ADJECTIVE_WEIGHT * len(profiler.profile(primary.text).adjectives
                                     & profiler.profile(candidate.text).adjectives))
    is_conditional = candidate.normalized.split()[0] == "if" or " then " in candidate.normalized
    if is_conditional and _antecedent_satisfied(primary, candidate):
        base += HYPOTHETICAL_BONUS
    return min(SCORE_CAP, base)


def select_primary(determinate: list[Premise], target: Target,
                   failed_primaries: set[str], profiler: TermProfiler, *,
                   no_priority: bool = False,
                   rng: random.Random | None = None) -> Premise:
    """Argmax-relevance choice from the determinate set.

    Premises recorded as failed primaries are excluded unless that would
    empty the pool. Ties break toward input order. Under the no-priority
    ablation the choice is uniform over the full set (seeded RNG).
    """
    if not determinate:
        raise EmptyDeterminateSet("no determinate premises to select from")
    if no_priority:
        return (rng or random.Random()).choice(list(determinate))
    pool = [p for p in determinate if p.id not in failed_primaries] or list(determinate)
    hypothesis_profile = profiler.profile(target.hypothesis)
    best = None
    best_score = Fraction(-1)
    for premise in pool:
        score = overlap_score(profiler.profile(premise.text), hypothesis_profile)
        if score > best_score:
            best, best_score = premise, score
    return best


def select_supplements(primary: Premise, pool: list[Premise], theta: Fraction,
                       profiler: TermProfiler) -> tuple[list[Premise], dict[str, Fraction]]:
    """Pool members whose supplement score meets the threshold, ordered by
    descending score then input order. Returns the premises and all scores."""
    if not 0 <= theta <= 1:
        raise ValueError(f"theta must lie in [0, 1], got {theta}")
    scores: dict[str, Fraction] = {}
    kept: list[tuple[Fraction, int, Premise]] = []
    for position, candidate in enumerate(pool):
        if candidate.id == primary.id:
            continue
        score = supplement_score(primary, candidate, profiler)
        scores[candidate.id] = score
        if score >= theta:
            kept.append((score, position, candidate))
    kept.sort(key=lambda item: (-item[0], item[1]))
    return [premise for _, _, premise in kept], scores


def as_theta(value: float | str | Fraction) -> Fraction:
    """Exact decimal reading of a threshold ("0.3" means 3/10, not the
    nearest binary float)."""
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))

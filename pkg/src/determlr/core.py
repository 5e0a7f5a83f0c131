"""Domain types shared by every stage of the reasoning pipeline.

All types here are immutable values: safe to share between concurrent
sessions and to use as dict keys where hashable.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace

from .errors import EmptyStatement

_WS_RUN = re.compile(r"\s+")


def normalize(text: str) -> str:
    """Canonicalize a statement for duplication checks and fixture keys.

    Lowercases, strips, collapses whitespace runs to a single space, and
    removes trailing periods. Interior punctuation is preserved.
    """
    if not text or not text.strip():
        raise EmptyStatement("cannot normalize an empty statement")
    out = _WS_RUN.sub(" ", text.strip().lower())
    while out.endswith("."):
        out = out[:-1].rstrip()
    return out


class Kind(enum.Enum):
    DETERMINATE = "determinate"
    INDETERMINATE = "indeterminate"


class Dataset(enum.Enum):
    LOGIQA = "logiqa"
    PROOFWRITER = "proofwriter"
    FOLIO = "folio"
    PRONTOQA = "prontoqa"
    LOGICAL_DEDUCTION = "logicaldeduction"
    CUSTOM = "custom"

    @classmethod
    def from_name(cls, name: str) -> "Dataset":
        key = name.strip().lower().replace("-", "").replace("_", "")
        aliases = {"ld": cls.LOGICAL_DEDUCTION, "proofwriterowa": cls.PROOFWRITER}
        if key in aliases:
            return aliases[key]
        for member in cls:
            if member.value == key:
                return member
        return cls.CUSTOM


@dataclass(frozen=True)
class Origin:
    """Where a premise came from: the problem input, or iteration t of reasoning."""

    derived_at: int | None = None  # None = input premise

    @property
    def is_input(self) -> bool:
        return self.derived_at is None

    def __post_init__(self):
        if self.derived_at is not None and self.derived_at < 1:
            raise ValueError("derivation iteration must be >= 1")


INPUT = Origin()


@dataclass(frozen=True)
class Premise:
    """One known statement, with its determinacy kind and origin.

    ``kind`` may be None for freshly loaded premises, before identification
    has run. A derived premise is always determinate: only verified
    propositions are admitted to the determinate set.
    """

    id: str
    text: str
    kind: Kind | None = None
    origin: Origin = INPUT
    normalized: str = ""

    def __post_init__(self):
        if not self.normalized:
            object.__setattr__(self, "normalized", normalize(self.text))
        if not self.origin.is_input and self.kind is not Kind.DETERMINATE:
            raise ValueError("derived premises must be determinate")

    def with_kind(self, kind: Kind, new_id: str | None = None) -> "Premise":
        return replace(self, kind=kind, id=new_id if new_id is not None else self.id)

    def duplicates(self, other: "Premise") -> bool:
        return self.normalized == other.normalized


@dataclass(frozen=True)
class Target:
    """The conclusion to evaluate, with the question's answer options."""

    hypothesis: str
    question: str = ""
    options: tuple[tuple[str, str], ...] = ()
    answer_key: str | None = None

    def __post_init__(self):
        labels = [label for label, _ in self.options]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate option labels: {labels}")
        if self.answer_key is not None and self.options:
            allowed = set(labels) | {"True", "False", "Unknown"}
            if self.answer_key not in allowed:
                raise ValueError(f"answer key {self.answer_key!r} not among {sorted(allowed)}")

    def option_text(self, label: str) -> str | None:
        for key, text in self.options:
            if key == label:
                return text
        return None


@dataclass(frozen=True)
class ProblemInstance:
    """One benchmark case in canonical form."""

    case_id: str
    dataset: Dataset
    context: str
    premises: tuple[Premise, ...]
    target: Target
    boundary_conditions: tuple[str, ...] = ()

    def __post_init__(self):
        if self.boundary_conditions and self.dataset is not Dataset.LOGICAL_DEDUCTION:
            raise ValueError("boundary conditions are a LogicalDeduction-only field")


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class ReasoningPath:
    """Record linking source premises to an explored proposition.

    ``sources`` lists the primary premise first, then the supplements.
    """

    sources: tuple[str, ...]
    proposition_text: str
    polarity: Polarity
    iteration: int

    def __post_init__(self):
        if not self.sources:
            raise ValueError("a reasoning path needs at least one source premise")

    @property
    def primary_id(self) -> str:
        return self.sources[0]


@dataclass(frozen=True)
class Verdict:
    """Outcome of the three-fold verification of a proposition."""

    valid: bool
    useful: bool
    novel: bool
    overall: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "overall", self.valid and self.useful and self.novel)

    @classmethod
    def of(cls, valid: bool, useful: bool, novel: bool) -> "Verdict":
        return cls(valid=valid, useful=useful, novel=novel)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "useful": self.useful,
            "novel": self.novel,
            "overall": self.overall,
        }


class Ablation(enum.Enum):
    NO_IDENTIFY = "no-identify"
    NO_PRIORITY = "no-priority"
    NO_MEMORY = "no-memory"

    @classmethod
    def from_name(cls, name: str) -> "Ablation":
        key = name.strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown ablation {name!r}")


class BackendChoice(enum.Enum):
    LLM = "llm"
    SYMBOLIC = "symbolic"
    REPLAY = "replay"


@dataclass(frozen=True)
class EngineConfig:
    """Tunables of the reasoning loop.

    ``n_required_determinate`` is the number of derived determinate premises
    to accumulate before concluding; 4 balances accuracy against iteration
    cost. ``theta`` is the supplement-score admission threshold.
    """

    n_required_determinate: int = 4
    max_iterations: int = 25
    theta: float = 0.25
    temperature_default: float = 0.1
    temperature_conclude: float = 0.7
    ablation: frozenset[Ablation] = frozenset()
    backend_choice: BackendChoice = BackendChoice.SYMBOLIC
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {self.theta}")
        if self.n_required_determinate < 1:
            raise ValueError("n_required_determinate must be positive")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")
        # max_iterations = 0 is the degenerate single-shot mode; only then may
        # n exceed the iteration budget.
        if self.max_iterations and self.n_required_determinate > self.max_iterations:
            raise ValueError("n_required_determinate cannot exceed max_iterations")

    def disabled(self, ablation: Ablation) -> bool:
        return ablation in self.ablation

    def to_dict(self) -> dict:
        return {
            "n_required_determinate": self.n_required_determinate,
            "max_iterations": self.max_iterations,
            "theta": self.theta,
            "temperature_default": self.temperature_default,
            "temperature_conclude": self.temperature_conclude,
            "ablation": sorted(a.value for a in self.ablation),
            "backend_choice": self.backend_choice.value,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "EngineConfig":
        kwargs = dict(raw)
        if "ablation" in kwargs:
            kwargs["ablation"] = frozenset(Ablation.from_name(a) for a in kwargs["ablation"])
        if "backend_choice" in kwargs:
            kwargs["backend_choice"] = BackendChoice(kwargs["backend_choice"])
        return cls(**kwargs)


# Label convention for true/false/unknown tasks: option text, lowercased,
# mapped from the oracle's three-valued answer. "uncertain" and "unknown"
# are interchangeable across datasets.
TRUTH_WORDS = {
    "true": "True",
    "false": "False",
    "unknown": "Unknown",
    "uncertain": "Unknown",
}


def truth_label(target: Target, truth: str) -> str:
    """Map a True/False/Unknown verdict onto the case's option labels."""
    wanted = truth.strip().lower()
    for label, text in target.options:
        if TRUTH_WORDS.get(text.strip().lower().rstrip(".")) == TRUTH_WORDS.get(wanted, truth):
            return label
    return truth  # no option list: the bare verdict is the label

"""Clause forms for the symbolic oracle: facts, rules, disjunctions.

An Atom is subject/relation/object with polarity. ``VAR`` marks the single
universally quantified entity a rule may mention ("something"/"it" in the
surface form); it is consistent across a rule's antecedents and consequent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import Inconsistent

VAR = "?x"


@dataclass(frozen=True)
class Atom:
    subject: str
    relation: str
    object: str | None
    positive: bool = True
    # Surface articles, kept only so unparse can round-trip; ignored by
    # equality and unification.
    subject_article: str = field(default="", compare=False)
    object_article: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.relation:
            raise ValueError("atom relation must be non-empty")

    @property
    def has_var(self) -> bool:
        return self.subject == VAR or self.object == VAR

    def negated(self) -> "Atom":
        return Atom(self.subject, self.relation, self.object, not self.positive,
                    self.subject_article, self.object_article)

    def substitute(self, value: str, article: str = "the") -> "Atom":
        """Replace VAR with a concrete entity."""
        subj = value if self.subject == VAR else self.subject
        obj = value if self.object == VAR else self.object
        s_art = article if self.subject == VAR else self.subject_article
        o_art = article if self.object == VAR else self.object_article
        return Atom(subj, self.relation, obj, self.positive, s_art, o_art)

    def key(self) -> tuple:
        return (self.subject, self.relation, self.object, self.positive)

    def signed_key(self) -> tuple:
        """Key without polarity, for contradiction lookups."""
        return (self.subject, self.relation, self.object)

    def unifies(self, ground: "Atom") -> str | None | bool:
        """Try to match this (possibly VAR-bearing) atom against a ground one.

        Returns the VAR binding (str), None when no VAR was needed, or
        False when the atoms do not match.
        """
        if self.relation != ground.relation or self.positive != ground.positive:
            return False
        binding: str | None = None
        for mine, theirs in ((self.subject, ground.subject), (self.object, ground.object)):
            if mine == VAR:
                if theirs is None or theirs == VAR:
                    return False
                if binding is None:
                    binding = theirs
                elif binding != theirs:
                    return False
            elif mine != theirs:
                return False
        return binding


@dataclass(frozen=True)
class Fact:
    atom: Atom


@dataclass(frozen=True)
class Rule:
    antecedents: tuple[Atom, ...]
    consequent: Atom

    def __post_init__(self):
        if not self.antecedents:
            raise ValueError("rule needs at least one antecedent")

    def key(self) -> tuple:
        return (tuple(a.key() for a in self.antecedents), self.consequent.key())


@dataclass(frozen=True)
class Disjunction:
    left: Atom
    right: Atom

    def __post_init__(self):
        if self.left.subject != self.right.subject:
            raise ValueError("disjunction atoms must share a subject")

    def key(self) -> tuple:
        return (self.left.key(), self.right.key())


Clause = Fact | Rule | Disjunction


@dataclass
class Proof:
    """How a derived clause was obtained; enough to re-validate the step."""

    rule_name: str  # modus_ponens | modus_tollens | disjunctive_syllogism | hypothetical_syllogism | given
    via: Clause | None  # the rule/disjunction applied
    sources: tuple[Atom, ...] = ()
    binding: str | None = None

    def to_dict(self) -> dict:
        return {
            "rule": self.rule_name,
            "binding": self.binding,
            "sources": [list(a.key()) for a in self.sources],
        }


class KnowledgeBase:
    """Facts, rules and disjunctions with duplicate elimination and
    contradiction detection at insert time."""

    def __init__(self):
        self.facts: dict[tuple, Atom] = {}
        self.rules: list[Rule] = []
        self.disjunctions: list[Disjunction] = []
        self.proofs: dict[tuple, Proof] = {}
        self._rule_keys: set[tuple] = set()
        self._disjunction_keys: set[tuple] = set()

    def add_fact(self, atom: Atom, proof: Proof | None = None) -> bool:
        """Insert a fact; returns True when it was new."""
        key = atom.key()
        if key in self.facts:
            return False
        opposite = atom.negated().key()
        if opposite in self.facts:
            raise Inconsistent(self.facts[opposite], atom)
        self.facts[key] = atom
        self.proofs[key] = proof or Proof("given", None)
        return True

    def add_rule(self, rule: Rule, proof: Proof | None = None) -> bool:
        key = rule.key()
        if key in self._rule_keys:
            return False
        self._rule_keys.add(key)
        self.rules.append(rule)
        if proof is not None:
            self.proofs[key] = proof
        return True

    def add_disjunction(self, disjunction: Disjunction) -> bool:
        key = disjunction.key()
        if key in self._disjunction_keys:
            return False
        self._disjunction_keys.add(key)
        self.disjunctions.append(disjunction)
        return True

    def add_clause(self, clause: Clause) -> bool:
        if isinstance(clause, Fact):
            return self.add_fact(clause.atom)
        if isinstance(clause, Rule):
            return self.add_rule(clause)
        return self.add_disjunction(clause)

    def holds(self, atom: Atom) -> bool:
        return atom.key() in self.facts

    def has_rule(self, rule: Rule) -> bool:
        return rule.key() in self._rule_keys

    def has_disjunction(self, disjunction: Disjunction) -> bool:
        return disjunction.key() in self._disjunction_keys

    def entities(self) -> list[str]:
        """Every concrete entity mentioned by a fact, in insertion order."""
        seen: dict[str, None] = {}
        for atom in self.facts.values():
            for side in (atom.subject, atom.object):
                if side and side != VAR and side not in seen:
                    seen[side] = None
        return list(seen)

    def copy(self) -> "KnowledgeBase":
        clone = KnowledgeBase()
        clone.facts = dict(self.facts)
        clone.rules = list(self.rules)
        clone.disjunctions = list(self.disjunctions)
        clone.proofs = dict(self.proofs)
        clone._rule_keys = set(self._rule_keys)
        clone._disjunction_keys = set(self._disjunction_keys)
        return clone

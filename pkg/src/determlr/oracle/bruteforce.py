"""Independent closure enumerator used to cross-check the chaining engine.

Deliberately naive: plain tuples, repeated breadth-first passes, no
indexing, no rule composition (composed rules add no ground atoms that
direct chaining misses). Shares nothing with engine.py beyond the clause
dataclasses it reads its input from.
"""

from __future__ import annotations

from .clauses import Atom, Clause, Disjunction, Fact, KnowledgeBase, Rule, VAR

_T = tuple  # atoms as (subject, relation, object, positive)


def _tup(atom: Atom) -> _T:
    return (atom.subject, atom.relation, atom.object, atom.positive)


def _neg(t: _T) -> _T:
    return (t[0], t[1], t[2], not t[3])


def _subst(t: _T, value: str) -> _T:
    subject = value if t[0] == VAR else t[0]
    obj = value if t[2] == VAR else t[2]
    return (subject, t[1], obj, t[3])


def _has_var(t: _T) -> bool:
    return t[0] == VAR or t[2] == VAR


def closure_with_passes(clauses: list[Clause]) -> tuple[set[_T] | None, int]:
    """Breadth-first saturation; returns (atoms, passes) or (None, passes)
    when the closure is contradictory."""
    facts: set[_T] = set()
    rules: list[tuple[tuple[_T, ...], _T]] = []
    disjunctions: list[tuple[_T, _T]] = []
    for clause in clauses:
        if isinstance(clause, Fact):
            facts.add(_tup(clause.atom))
        elif isinstance(clause, Rule):
            rules.append((tuple(_tup(a) for a in clause.antecedents), _tup(clause.consequent)))
        elif isinstance(clause, Disjunction):
            disjunctions.append((_tup(clause.left), _tup(clause.right)))

    passes = 0
    while True:
        passes += 1
        domain = set()
        for t in facts:
            for side in (t[0], t[2]):
                if side and side != VAR:
                    domain.add(side)

        additions: set[_T] = set()
        for ants, cons in rules:
            variable = any(_has_var(a) for a in ants) or _has_var(cons)
            for value in (sorted(domain) if variable else [None]):
                bound = [(_subst(a, value) if value is not None else a) for a in ants]
                if any(_has_var(a) for a in bound):
                    continue
                if all(a in facts for a in bound):
                    conclusion = _subst(cons, value) if value is not None else cons
                    if not _has_var(conclusion) and conclusion not in facts:
                        additions.add(conclusion)
            # Modus tollens mirrors the chaining engine: the binding must
            # come from matching the negated consequent, so a variable that
            # appears only in the body never grounds and never fires.
            if len(ants) == 1:
                if not variable:
                    candidates = [None]
                elif _has_var(cons):
                    candidates = sorted(domain)
                else:
                    candidates = []
                for value in candidates:
                    head = _subst(cons, value) if value is not None else cons
                    body = _subst(ants[0], value) if value is not None else ants[0]
                    if _has_var(head) or _has_var(body):
                        continue
                    if _neg(head) in facts and _neg(body) not in facts:
                        additions.add(_neg(body))
        for left, right in disjunctions:
            if _neg(left) in facts and right not in facts:
                additions.add(right)
            if _neg(right) in facts and left not in facts:
                additions.add(left)

        if not additions:
            break
        facts |= additions

    for t in facts:
        if _neg(t) in facts:
            return None, passes
    return facts, passes


def brute_force_closure(clauses: list[Clause]) -> set[_T] | None:
    """All derivable ground atoms, or None when the closure is contradictory."""
    closure, _ = closure_with_passes(clauses)
    return closure


def brute_force_query(clauses: list[Clause], hypothesis: Atom) -> str:
    """Three-valued answer computed by exhaustive closure."""
    closure = brute_force_closure(clauses)
    if closure is None:
        raise ValueError("contradictory knowledge base")
    t = _tup(hypothesis)
    if t in closure:
        return "True"
    if _neg(t) in closure:
        return "False"
    return "Unknown"


def kb_clauses(kb: KnowledgeBase) -> list[Clause]:
    """Flatten a knowledge base into the clause list the enumerator takes."""
    out: list[Clause] = [Fact(a) for a in kb.facts.values()]
    out.extend(kb.rules)
    out.extend(kb.disjunctions)
    return out

"""Open-world forward chaining over parsed clauses.

Deduction rules applied, in order: modus ponens (with variable
instantiation over entities appearing in facts), modus tollens,
disjunctive syllogism, and hypothetical syllogism (rule composition,
recorded as a derived rule). Every derived fact carries a proof record.
"""

from __future__ import annotations

from ..errors import Inconsistent, StatementParseError
from .clauses import VAR, Atom, Clause, Disjunction, Fact, KnowledgeBase, Proof, Rule
from .parser import parse_statement

DEFAULT_MAX_DEPTH = 10  # dataset derivations are depth <= 5; x2 headroom


def _bindings(rule: Rule, entities: list[str]) -> list[str | None]:
    has_var = rule.consequent.has_var or any(a.has_var for a in rule.antecedents)
    return list(entities) if has_var else [None]


def _grounded(atom: Atom, binding: str | None) -> Atom:
    return atom.substitute(binding) if binding is not None else atom


def _atoms_structurally_equal(a: Atom, b: Atom) -> bool:
    return a.key() == b.key()


def _compose(r1: Rule, r2: Rule) -> Rule | None:
    """Hypothetical syllogism on single-antecedent rules: r1 feeding r2."""
    if len(r2.antecedents) != 1:
        return None
    ant2 = r2.antecedents[0]
    cons1 = r1.consequent
    if _atoms_structurally_equal(cons1, ant2):
        # shared structure, VAR kept consistent across the composition
        return Rule(r1.antecedents, r2.consequent)
    if ant2.has_var and not cons1.has_var:
        binding = ant2.unifies(cons1)
        if binding is False or binding is None:
            return None
        return Rule(r1.antecedents, r2.consequent.substitute(binding))
    if cons1.has_var and not ant2.has_var:
        binding = cons1.unifies(ant2)
        if binding is False or binding is None:
            return None
        return Rule(tuple(a.substitute(binding) for a in r1.antecedents), r2.consequent)
    return None


def forward_chain(kb: KnowledgeBase, max_depth: int = DEFAULT_MAX_DEPTH) -> dict[tuple, Proof]:
    """Saturate ``kb`` in place; returns the newly derived facts' proofs.

    Raises Inconsistent when a derivation contradicts an existing fact.
    """
    derived: dict[tuple, Proof] = {}

    def admit(atom: Atom, proof: Proof) -> bool:
        if kb.add_fact(atom, proof):
            derived[atom.key()] = proof
            return True
        return False

    for _ in range(max_depth):
        changed = False
        entities = kb.entities()

        for rule in list(kb.rules):
            for binding in _bindings(rule, entities):
                ants = [_grounded(a, binding) for a in rule.antecedents]
                if any(a.has_var for a in ants):
                    continue
                if all(kb.holds(a) for a in ants):
                    cons = _grounded(rule.consequent, binding)
                    if cons.has_var or kb.holds(cons):
                        continue
                    admit(cons, Proof("modus_ponens", rule, tuple(ants), binding))
                    changed = True

        for rule in list(kb.rules):
            if len(rule.antecedents) != 1:
                continue
            negated_cons = rule.consequent.negated()
            for fact in list(kb.facts.values()):
                binding = negated_cons.unifies(fact)
                if binding is False:
                    continue
                contra = _grounded(rule.antecedents[0], binding).negated()
                if contra.has_var or kb.holds(contra):
                    continue
                admit(contra, Proof("modus_tollens", rule, (fact,), binding))
                changed = True

        for disjunction in kb.disjunctions:
            for chosen, other in ((disjunction.left, disjunction.right),
                                  (disjunction.right, disjunction.left)):
                ruled_out = other.negated()
                if kb.holds(ruled_out) and not kb.holds(chosen):
                    admit(chosen, Proof("disjunctive_syllogism", disjunction,
                                        (kb.facts[ruled_out.key()],)))
                    changed = True

        for r1 in list(kb.rules):
            if len(r1.antecedents) != 1:
                continue
            for r2 in list(kb.rules):
                if r2 is r1 or len(r2.antecedents) != 1:
                    continue
                composed = _compose(r1, r2)
                if composed is not None and kb.add_rule(
                        composed, Proof("hypothetical_syllogism", r1, (), None)):
                    changed = True

        if not changed:
            break
    return derived


def query(kb: KnowledgeBase, hypothesis: Atom, max_depth: int = DEFAULT_MAX_DEPTH) -> str:
    """Open-world three-valued answer: "True", "False" or "Unknown"."""
    closure = kb.copy()
    forward_chain(closure, max_depth)
    if closure.holds(hypothesis):
        return "True"
    if closure.holds(hypothesis.negated()):
        return "False"
    return "Unknown"


def derive_step(primary: Clause, supplements: list[Clause]) -> Clause | None:
    """One deduction over the selected clauses, or None when nothing applies.

    Rule order: modus ponens, modus tollens, disjunctive syllogism,
    hypothetical syllogism; clause order follows the input order. The
    conclusion must not already be among the given facts/rules.
    """
    pool: list[Clause] = [primary, *supplements]
    facts = [c.atom for c in pool if isinstance(c, Fact)]
    fact_keys = {a.key() for a in facts}
    rules = [c for c in pool if isinstance(c, Rule)]
    rule_keys = {r.key() for r in rules}
    disjunctions = [c for c in pool if isinstance(c, Disjunction)]

    entities: list[str] = []
    for atom in facts:
        for side in (atom.subject, atom.object):
            if side and side != VAR and side not in entities:
                entities.append(side)

    for rule in rules:
        for binding in _bindings(rule, entities):
            ants = [_grounded(a, binding) for a in rule.antecedents]
            if any(a.has_var for a in ants):
                continue
            if all(a.key() in fact_keys for a in ants):
                cons = _grounded(rule.consequent, binding)
                if not cons.has_var and cons.key() not in fact_keys:
                    return Fact(cons)

    for rule in rules:
        if len(rule.antecedents) != 1:
            continue
        negated_cons = rule.consequent.negated()
        for fact in facts:
            binding = negated_cons.unifies(fact)
            if binding is False:
                continue
            contra = _grounded(rule.antecedents[0], binding).negated()
            if not contra.has_var and contra.key() not in fact_keys:
                return Fact(contra)

    for disjunction in disjunctions:
        for chosen, other in ((disjunction.left, disjunction.right),
                              (disjunction.right, disjunction.left)):
            if other.negated().key() in fact_keys and chosen.key() not in fact_keys:
                return Fact(chosen)

    for r1 in rules:
        if len(r1.antecedents) != 1:
            continue
        for r2 in rules:
            if r2 is r1:
                continue
            composed = _compose(r1, r2)
            if composed is not None and composed.key() not in rule_keys:
                return composed

    return None


def check_entailment(sources: list[str], proposition: str,
                     max_depth: int = 2) -> bool:
    """Whether the proposition follows from the source statements alone.

    Depth 2 covers one deduction step with slack. Parse failures and
    contradictory sources yield False.
    """
    kb = KnowledgeBase()
    try:
        for text in sources:
            kb.add_clause(parse_statement(text))
        goal = parse_statement(proposition)
        forward_chain(kb, max_depth)
    except (StatementParseError, Inconsistent):
        return False
    if isinstance(goal, Fact):
        return kb.holds(goal.atom)
    if isinstance(goal, Rule):
        return kb.has_rule(goal)
    return kb.has_disjunction(goal)


def match_antecedent(fact: Atom, rule: Rule) -> bool:
    """Whether some antecedent of the rule unifies with the (ground) fact."""
    return any(ant.unifies(fact) is not False for ant in rule.antecedents)

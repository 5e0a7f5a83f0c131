"""Statement grammar for ProofWriter/PrOntoQA-style English.

Facts:        "[the] SUBJ (is|VERBs) [not] [the] OBJ"
Negation:     "is not X" / "does not VERB X"
Rules:        "if ANT[ and ANT]* then CONS", where "something"/"it" denote
              one shared universally quantified entity
Disjunctions: "SUBJ is either X or Y" or "FACT or FACT" (same subject)
"""

from __future__ import annotations

import re

from ..core import normalize
from ..errors import StatementParseError
from .clauses import Atom, Clause, Disjunction, Fact, Rule, VAR

# Closed verb vocabulary of the supported datasets, base -> third person.
_BASE_TO_THIRD = {
    "chase": "chases",
    "eat": "eats",
    "see": "sees",
    "like": "likes",
    "visit": "visits",
    "need": "needs",
    "want": "wants",
    "love": "loves",
    "hear": "hears",
    "help": "helps",
    "hate": "hates",
    "know": "knows",
    "hunt": "hunts",
    "avoid": "avoids",
    "fear": "fears",
}
_THIRD_TO_BASE = {third: base for base, third in _BASE_TO_THIRD.items()}

_ARTICLES = ("the", "a", "an")
_VAR_WORDS = {"something", "someone", "somebody", "anything", "it"}
_COPULAS = {"is", "are", "was", "were"}

_RULE_RE = re.compile(r"^if\s+(.+?)\s*,?\s*then\s+(.+)$")
_EITHER_RE = re.compile(r"^(.+?)\s+is\s+either\s+(.+?)\s+or\s+(.+)$")


def _tokens(text: str) -> list[str]:
    return text.replace(",", " , ").split()


def _strip_article(tokens: list[str]) -> tuple[str, list[str]]:
    if len(tokens) > 1 and tokens[0] in _ARTICLES:
        return tokens[0], tokens[1:]
    return "", tokens


def _phrase(tokens: list[str]) -> str:
    return " ".join(t for t in tokens if t != ",")


def _parse_atom(text: str, allow_var: bool, source: str) -> Atom:
    toks = [t for t in _tokens(text) if t != ","]
    verb_at = None
    for i in range(1, len(toks)):
        if toks[i] in _COPULAS or toks[i] in ("does", "do") \
                or toks[i] in _THIRD_TO_BASE or toks[i] in _BASE_TO_THIRD:
            verb_at = i
            break
    if verb_at is None:
        raise StatementParseError(source, source.find(text), f"no verb found in {text!r}")

    subj_article, subj_tokens = _strip_article(toks[:verb_at])
    if not subj_tokens:
        raise StatementParseError(source, 0, f"empty subject in {text!r}")
    subject = _phrase(subj_tokens)

    verb = toks[verb_at]
    rest = toks[verb_at + 1:]
    positive = True

    if verb in ("does", "do"):
        if len(rest) < 2 or rest[0] != "not" or rest[1] not in _BASE_TO_THIRD:
            raise StatementParseError(source, 0, f"unsupported do-form in {text!r}")
        positive = False
        relation = _BASE_TO_THIRD[rest[1]]
        rest = rest[2:]
    elif verb in _COPULAS:
        relation = "is"
        if rest and rest[0] == "not":
            positive = False
            rest = rest[1:]
    else:
        relation = verb if verb in _THIRD_TO_BASE else _BASE_TO_THIRD[verb]

    obj_article, obj_tokens = _strip_article(rest) if rest else ("", [])
    obj = _phrase(obj_tokens) if obj_tokens else None
    if obj is None and relation != "is":
        raise StatementParseError(source, 0, f"transitive verb without object in {text!r}")
    if obj is None:
        raise StatementParseError(source, 0, f"copula without complement in {text!r}")

    if allow_var:
        if subject in _VAR_WORDS:
            subject, subj_article = VAR, ""
        if obj in _VAR_WORDS:
            obj, obj_article = VAR, ""
    return Atom(subject, relation, obj, positive, subj_article, obj_article)


def parse_statement(text: str) -> Clause:
    """Parse one normalized statement into a Fact, Rule or Disjunction."""
    norm = normalize(text)

    rule_match = _RULE_RE.match(norm)
    if rule_match:
        ant_text, cons_text = rule_match.groups()
        ant_parts = re.split(r"\s*,?\s+and\s+", ant_text)
        antecedents = tuple(_parse_atom(p, allow_var=True, source=norm) for p in ant_parts)
        consequent = _parse_atom(cons_text, allow_var=True, source=norm)
        return Rule(antecedents, consequent)

    either_match = _EITHER_RE.match(norm)
    if either_match:
        subj_text, left_text, right_text = either_match.groups()
        subj_article, subj_tokens = _strip_article(subj_text.split())
        subject = _phrase(subj_tokens)
        if not subject:
            raise StatementParseError(norm, 0, "empty disjunction subject")
        l_article, l_tokens = _strip_article(left_text.split())
        r_article, r_tokens = _strip_article(right_text.split())
        left = Atom(subject, "is", _phrase(l_tokens), True, subj_article, l_article)
        right = Atom(subject, "is", _phrase(r_tokens), True, subj_article, r_article)
        return Disjunction(left, right)

    if " or " in norm:
        left_text, right_text = norm.split(" or ", 1)
        left = _parse_atom(left_text, allow_var=False, source=norm)
        try:
            right = _parse_atom(right_text, allow_var=False, source=norm)
        except StatementParseError:
            # "the cat is red or blue": bare right side reuses subject+relation
            r_article, r_tokens = _strip_article(right_text.split())
            right = Atom(left.subject, left.relation, _phrase(r_tokens), True,
                         left.subject_article, r_article)
        if left.subject != right.subject:
            raise StatementParseError(norm, norm.find(" or "),
                                      "disjunction sides name different subjects")
        return Disjunction(left, right)

    return Fact(_parse_atom(norm, allow_var=False, source=norm))


def _atom_surface(atom: Atom, var_word: str) -> str:
    if atom.subject == VAR:
        subj = var_word
    else:
        subj = f"{atom.subject_article} {atom.subject}".strip()
    if atom.object == VAR:
        obj = "it" if var_word == "something" else var_word
    else:
        obj = f"{atom.object_article} {atom.object}".strip()
    if atom.relation == "is":
        verb = "is" if atom.positive else "is not"
    elif atom.positive:
        verb = atom.relation
    else:
        verb = f"does not {_THIRD_TO_BASE[atom.relation]}"
    return f"{subj} {verb} {obj}"


def unparse(clause: Clause) -> str:
    """Render a clause back to normalized surface text."""
    if isinstance(clause, Fact):
        return _atom_surface(clause.atom, "something")
    if isinstance(clause, Rule):
        parts = []
        var_seen = False
        for atom in (*clause.antecedents, clause.consequent):
            word = "it" if var_seen else "something"
            parts.append(_atom_surface(atom, word))
            if atom.has_var:
                var_seen = True
        ants, cons = parts[:-1], parts[-1]
        return f"if {' and '.join(ants)} then {cons}"
    left, right = clause.left, clause.right
    if left.relation == right.relation == "is" and left.positive and right.positive:
        subj = f"{left.subject_article} {left.subject}".strip()
        l_obj = f"{left.object_article} {left.object}".strip()
        r_obj = f"{right.object_article} {right.object}".strip()
        return f"{subj} is either {l_obj} or {r_obj}"
    return f"{_atom_surface(left, 'something')} or {_atom_surface(right, 'something')}"

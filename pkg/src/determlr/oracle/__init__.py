"""Deterministic natural-logic oracle: parser, forward chainer, checkers.

Scoped to ProofWriter/PrOntoQA-style language. Other datasets run on the
LLM or replay backends and never reach the parser.
"""

from .clauses import Atom, Clause, Disjunction, Fact, KnowledgeBase, Rule, VAR
from .parser import parse_statement, unparse
from .engine import (
    check_entailment,
    derive_step,
    forward_chain,
    match_antecedent,
    query,
)
from .bruteforce import brute_force_query
from .generator import SyntheticCase, generate_case, generate_suite

__all__ = [
    "Atom",
    "Clause",
    "Disjunction",
    "Fact",
    "KnowledgeBase",
    "Rule",
    "VAR",
    "parse_statement",
    "unparse",
    "forward_chain",
    "query",
    "derive_step",
    "check_entailment",
    "match_antecedent",
    "brute_force_query",
    "SyntheticCase",
    "generate_case",
    "generate_suite",
]

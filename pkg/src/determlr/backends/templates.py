"""Prompt templates: plain-text files with {name} placeholders.

Each stage has prompts/<stage>.txt holding a [system] section and a
[user] section, plus an optional prompts/<stage>.examples.json with
pre-bound few-shot user/assistant pairs inserted between them. Rendering
is deterministic: identical template and bindings give a byte-identical
request.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..errors import UnboundPlaceholder
from .base import ChatRequest

_PLACEHOLDER = re.compile(r"(?<!\{)\{([a-z_]+)\}(?!\})")


@dataclass(frozen=True)
class PromptTemplate:
    name: str
    system_text: str
    user_template: str
    few_shot: tuple[tuple[str, str], ...] = ()

    @property
    def placeholders(self) -> frozenset[str]:
        return (frozenset(_PLACEHOLDER.findall(self.system_text))
                | frozenset(_PLACEHOLDER.findall(self.user_template)))


def _substitute(text: str, bindings: dict[str, str], template_name: str) -> str:
    def replace(match: re.Match) -> str:
        name = match.group(1)
        if name not in bindings:
            raise UnboundPlaceholder(name, template_name)
        return str(bindings[name])

    out = _PLACEHOLDER.sub(replace, text)
    return out.replace("{{", "{").replace("}}", "}")


def _split_sections(raw: str, name: str) -> tuple[str, str]:
    system_lines: list[str] = []
    user_lines: list[str] = []
    current = None
    for line in raw.splitlines():
        stripped = line.strip()
        if stripped == "[system]":
            current = system_lines
            continue
        if stripped == "[user]":
            current = user_lines
            continue
        if current is not None:
            current.append(line)
    if not system_lines:
        raise ValueError(f"template {name!r} lacks a [system] section")
    return "\n".join(system_lines).strip(), "\n".join(user_lines).strip()


@lru_cache(maxsize=None)
def load_template(stage: str) -> PromptTemplate:
    prompts = resources.files("determlr.prompts")
    raw = prompts.joinpath(f"{stage}.txt").read_text(encoding="utf-8")
    system_text, user_template = _split_sections(raw, stage)
    examples_path = prompts.joinpath(f"{stage}.examples.json")
    few_shot: tuple[tuple[str, str], ...] = ()
    try:
        pairs = json.loads(examples_path.read_text(encoding="utf-8"))
        few_shot = tuple((p["user"], p["assistant"]) for p in pairs)
    except FileNotFoundError:
        pass
    return PromptTemplate(stage, system_text, user_template, few_shot)


def render_prompt(template: PromptTemplate, bindings: dict[str, str], *,
                  model: str, temperature: float, max_tokens: int = 512) -> ChatRequest:
    """Bind every placeholder and assemble the chat message list."""
    messages: list[dict] = [
        {"role": "system", "content": _substitute(template.system_text, bindings, template.name)}
    ]
    for user_text, assistant_text in template.few_shot:
        messages.append({"role": "user", "content": user_text})
        messages.append({"role": "assistant", "content": assistant_text})
    messages.append(
        {"role": "user", "content": _substitute(template.user_template, bindings, template.name)}
    )
    return ChatRequest(model=model, messages=tuple(messages),
                       temperature=temperature, max_tokens=max_tokens)

"""Chat request shape, canonical digests, and the transport protocol."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Protocol


@dataclass(frozen=True)
class ChatRequest:
    model: str
    messages: tuple[dict, ...]  # {"role": system|user|assistant, "content": str}
    temperature: float = 0.1
    max_tokens: int = 512

    def __post_init__(self):
        if not self.messages:
            raise ValueError("chat request needs at least one message")
        if self.messages[0].get("role") != "system":
            raise ValueError("first message must carry the system role")
        for message in self.messages:
            if message.get("role") not in ("system", "user", "assistant"):
                raise ValueError(f"bad message role: {message.get('role')!r}")

    def payload(self) -> dict:
        return {
            "model": self.model,
            "messages": [dict(m) for m in self.messages],
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
        }


def request_digest(request: ChatRequest) -> str:
    """SHA-256 of the canonical request serialization; the cache key."""
    canonical = json.dumps(
        {
            "model": request.model,
            "messages": [[m["role"], m["content"]] for m in request.messages],
            "temperature": request.temperature,
        },
        sort_keys=True,
        ensure_ascii=False,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class ChatTransport(Protocol):
    """Where rendered requests go: an HTTP endpoint or a replay fixture."""

    def send(self, stage: str, request: ChatRequest) -> str: ...

    def has_stage(self, stage: str) -> bool: ...


@dataclass
class CacheEntry:
    key: str
    response: str
    timestamp: float = field(default=0.0)

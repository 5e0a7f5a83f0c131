"""Reply parsers for the labeled-field formats the templates elicit."""

from __future__ import annotations

import re

from ..errors import FieldNotFound

_QUOTES = {'"': '"', "'": "'", "“": "”", "‘": "’", "`": "'"}
_TRUTH_WORD = re.compile(r"\b(true|false|yes|no)\b", re.IGNORECASE)


def parse_labeled_field(text: str, label: str) -> str:
    """Value of the last occurrence of ``label:`` in the reply.

    The label may be quoted; the value is the quoted span when one opens
    right after the colon, otherwise the rest of the line, trimmed.
    """
    pattern = re.compile(
        r"""["'“‘`]{0,2}""" + re.escape(label) + r"""["'”’`]{0,2}\s*:""",
        re.IGNORECASE,
    )
    last = None
    for match in pattern.finditer(text):
        last = match
    if last is None:
        raise FieldNotFound(label, text)
    rest = text[last.end():].lstrip(" \t")
    if rest[:1] in _QUOTES:
        opener = rest[0]
        closer = _QUOTES[opener]
        body = rest[1:]
        end = body.find(closer)
        if end >= 0:
            return body[:end].strip()
        rest = body
    line = rest.splitlines()[0] if rest else ""
    return line.strip().strip('"“”')


def parse_boolean(value: str) -> bool | None:
    """Last decisive truth word in the value, or None when there is none."""
    words = _TRUTH_WORD.findall(value)
    if not words:
        return None
    return words[-1].lower() in ("true", "yes")


_ANSWER_PATTERNS = (
    re.compile(r"answer(?:\s+to\s+this\s+question)?\s+(?:should\s+be|is|:)?\s*\(?([A-Ha-h])\b[).:,\s]?"),
    re.compile(r"^\s*\(?([A-Ha-h])[).:]"),
    re.compile(r"\b([A-H])\)"),
)


def extract_option_label(reply: str, options: tuple[tuple[str, str], ...]) -> str | None:
    """Pull the chosen option label out of a conclusion reply.

    Tries the labeled Judgement field first, then answer phrasings, then
    truth words for true/false/unknown tasks, then a verbatim option-text
    scan. Returns None when nothing matches.
    """
    candidates = []
    try:
        candidates.append(parse_labeled_field(reply, "Judgement"))
    except FieldNotFound:
        pass
    candidates.append(reply)

    labels = {label.upper(): label for label, _ in options}
    for text in candidates:
        for pattern in _ANSWER_PATTERNS:
            match = pattern.search(text)
            if match and match.group(1).upper() in labels:
                return labels[match.group(1).upper()]
        truth = parse_boolean(text)
        if truth is not None or re.search(r"\b(unknown|uncertain)\b", text, re.IGNORECASE):
            if re.search(r"\b(unknown|uncertain)\b", text, re.IGNORECASE):
                wanted = "unknown"
            else:
                wanted = "true" if truth else "false"
            for label, option_text in options:
                word = option_text.strip().lower().rstrip(".")
                if word in ("unknown", "uncertain"):
                    word = "unknown"
                if word == wanted:
                    return label
    for label, option_text in options:
        if option_text.strip().lower().rstrip(".") in reply.lower():
            return label
    return None


def split_sentences(text: str) -> list[str]:
    """Sentence-boundary split used by premise extraction."""
    parts = re.split(r"(?<=[.!?])\s+", text.strip())
    return [p.strip() for p in parts if p.strip(" .")]

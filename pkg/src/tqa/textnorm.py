"""Shared text normalization: tokenizing and backend key normalization."""

from __future__ import annotations

import re

_TOKEN_SPLIT = re.compile(r"[^\w']+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Casefolded word tokens; punctuation splits, edge apostrophes drop."""
    tokens = []
    for raw in _TOKEN_SPLIT.split(text.casefold()):
        token = raw.strip("'")
        if token:
            tokens.append(token)
    return tokens


def normalize_key(text: str) -> str:
    """Lowercase, strip punctuation and collapse whitespace (backend keys)."""
    return " ".join(tokenize(text))

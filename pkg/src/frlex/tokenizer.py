"""Tokenizer with elision and clitic-inversion splitting.

``d'habitude`` becomes ``d'`` + ``habitude``; ``chante-t-il`` becomes
``chante-t-`` + ``-il``.  The head of an inversion keeps its hyphen and the
clitic gains one, so both tokens match the compiled lexicon entries.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Iterable

log = logging.getLogger(__name__)

APOSTROPHES = "'’"
PUNCTUATION = frozenset('.,?!"()\';:«»')


class Kind(str, Enum):
    WORD = "word"
    PUNCT = "punctuation"


class Origin(str, Enum):
    PLAIN = "plain"
    ELISION_PREFIX = "elision_prefix"
    ELISION_STEM = "elision_stem"
    CLITIC_HEAD = "clitic_head"
    CLITIC_PRONOUN = "clitic_pronoun"


@dataclass(frozen=True)
class Token:
    text: str
    kind: Kind = Kind.WORD
    origin: Origin = Origin.PLAIN
    # whitespace between the previous token and this one, for detokenize
    space_before: str = ""

    def __post_init__(self):
        if not self.text:
            raise ValueError("empty token")
        if self.kind is Kind.PUNCT and self.origin is not Origin.PLAIN:
            raise ValueError("punctuation tokens must have plain origin")

    @property
    def is_word(self) -> bool:
        return self.kind is Kind.WORD


def read_list(text: str) -> frozenset[str]:
    """One entry per line, ``#`` comments; apostrophes normalized."""
    items = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            items.add(normalize_apostrophes(line).lower())
    return frozenset(items)


def _data(name: str) -> str:
    return resources.files("frlex.data").joinpath(name).read_text(encoding="utf-8")


def default_clitics() -> frozenset[str]:
    return read_list(_data("clitics.txt"))


def default_elisions() -> frozenset[str]:
    return read_list(_data("elisions.txt"))


def normalize_apostrophes(text: str) -> str:
    return text.replace("’", "'")


class Tokenizer:
    """Reusable tokenizer bound to a clitic list and an elision list."""

    def __init__(self, clitics: Iterable[str] | None = None,
                 elisions: Iterable[str] | None = None,
                 punctuation: Iterable[str] = PUNCTUATION):
        self.clitics = frozenset(c.lower() for c in (default_clitics() if clitics is None else clitics))
        self.elisions = frozenset(normalize_apostrophes(e).lower()
                                  for e in (default_elisions() if elisions is None else elisions))
        self.punctuation = frozenset(punctuation)

    def __call__(self, text: str) -> list[Token]:
        return self.tokenize(text)

    def tokenize(self, text: str) -> list[Token]:
        tokens: list[Token] = []
        pos, n = 0, len(text)
        while pos < n:
            start = pos
            while pos < n and text[pos].isspace():
                pos += 1
            ws = text[start:pos]
            if pos >= n:
                break
            end = pos
            while end < n and not text[end].isspace():
                end += 1
            chunk = normalize_apostrophes(text[pos:end])
            pieces = self._chunk(chunk)
            tokens.append(_with_space(pieces[0], ws))
            tokens.extend(pieces[1:])
            pos = end
        return tokens

    def _is_elision(self, s: str) -> bool:
        return s.lower() in self.elisions

    def _chunk(self, chunk: str) -> list[Token]:
        lead: list[Token] = []
        i = 0
        while i < len(chunk) and chunk[i] in self.punctuation:
            lead.append(Token(chunk[i], Kind.PUNCT))
            i += 1
        j = len(chunk)
        trail: list[Token] = []
        while j > i and chunk[j - 1] in self.punctuation:
            if chunk[j - 1] == "'" and self._elided_prefix_ends_at(chunk[i:j]):
                break
            trail.append(Token(chunk[j - 1], Kind.PUNCT))
            j -= 1
        trail.reverse()
        return lead + self._word(chunk[i:j]) + trail

    def _elided_prefix_ends_at(self, core: str) -> bool:
        # True when the final apostrophe of core closes an elided prefix
        rest = core
        while rest:
            k = rest.find("'")
            if k == -1 or not self._is_elision(rest[:k + 1]):
                return False
            if k + 1 == len(rest):
                return True
            rest = rest[k + 1:]
        return False

    def _word(self, core: str) -> list[Token]:
        if not core:
            return []
        out: list[Token] = []
        rest = core
        while True:
            k = rest.find("'")
            if k == -1 or not self._is_elision(rest[:k + 1]):
                break
            out.append(Token(rest[:k + 1], Kind.WORD, Origin.ELISION_PREFIX))
            rest = rest[k + 1:]
            if not rest:
                return out
        split = self._split_clitics(rest)
        if split is not None:
            head, clitics = split
            out.append(Token(head, Kind.WORD, Origin.CLITIC_HEAD))
            out.extend(Token(c, Kind.WORD, Origin.CLITIC_PRONOUN) for c in clitics)
        else:
            origin = Origin.ELISION_STEM if out else Origin.PLAIN
            out.append(Token(rest, Kind.WORD, origin))
        return out

    def _split_clitics(self, word: str) -> tuple[str, list[str]] | None:
        parts = word.split("-")
        clitics: list[str] = []
        while len(parts) > 1 and parts[-1] and parts[-1].lower() in self.clitics:
            clitics.append("-" + parts.pop())
        if not clitics:
            return None
        if len(parts) > 1 and parts[-1] == "t" and any(parts[:-1]):
            head = "-".join(parts[:-1]) + "-t-"
        else:
            head = "-".join(parts) + "-"
        if not head.strip("-"):
            return None
        clitics.reverse()
        return head, clitics


def _with_space(tok: Token, ws: str) -> Token:
    if not ws:
        return tok
    return Token(tok.text, tok.kind, tok.origin, ws)


def tokenize(text: str, clitic_list: Iterable[str] | None = None,
             elision_list: Iterable[str] | None = None) -> list[Token]:
    return Tokenizer(clitic_list, elision_list).tokenize(text)


def detokenize(tokens: Iterable[Token]) -> str:
    """Rebuild the (apostrophe-normalized) text a token list came from."""
    out = ""
    for tok in tokens:
        text = tok.text
        if (tok.origin is Origin.CLITIC_PRONOUN and not tok.space_before
                and out.endswith("-") and text.startswith("-")):
            text = text[1:]
        out += tok.space_before + text
    return out

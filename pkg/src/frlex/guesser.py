"""Ending-based guesser for words missing from the lexicon.

Capitalized tokens are proper nouns.  Other tokens are classified by the
longest ending found in the pattern table, so a specific ending such as
``iquement`` (adverb only) overrides a general one such as ``ment``
(adverb or noun).  A noun reading is added to every ending unless the
ending is barred from nouns with ``!noun``; words with no known ending are
plain nouns.  Singular or plural is decided by a final ``s``/``x``.

Pattern file lines::

    ment ADV
    iquement ADV !noun
    er NOUN-SG VERB-INF
    @noun-default off        # optional directive
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .tagset import AmbiguityClass, TagInventory, make_class

NOUN_EXCLUDED = "!noun"
NOUN_SG, NOUN_PL, NOUN_INV = "NOUN-SG", "NOUN-PL", "NOUN-INV"
PLURAL_ENDINGS = ("s", "x")


class GuesserError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class EndingPattern:
    suffix: str
    tags: frozenset[str]
    note: str = field(default="", compare=False)

    @property
    def has_noun(self) -> bool:
        return any(t.startswith("NOUN-") for t in self.tags)


class _SuffixTrie:
    """Trie over reversed suffixes; finds the longest stored ending of a word."""

    __slots__ = ("children", "pattern")

    def __init__(self):
        self.children: dict[str, _SuffixTrie] = {}
        self.pattern: EndingPattern | None = None

    def insert(self, pattern: EndingPattern):
        node = self
        for ch in reversed(pattern.suffix):
            node = node.children.setdefault(ch, _SuffixTrie())
        node.pattern = pattern

    def longest(self, word: str) -> EndingPattern | None:
        node, best = self, None
        for ch in reversed(word):
            node = node.children.get(ch)
            if node is None:
                break
            if node.pattern is not None:
                best = node.pattern
        return best


@dataclass(frozen=True)
class GuesserTable:
    patterns: dict[str, EndingPattern] = field(default_factory=dict)
    default_noun_policy: bool = True
    noun_excluded_suffixes: frozenset[str] = frozenset()

    def __post_init__(self):
        clash = {s for s in self.noun_excluded_suffixes
                 if s in self.patterns and self.patterns[s].has_noun}
        if clash:
            raise GuesserError(f"suffixes both noun-excluded and noun-tagged: {sorted(clash)}")
        trie = _SuffixTrie()
        for pattern in self.patterns.values():
            trie.insert(pattern)
        object.__setattr__(self, "_trie", trie)

    def longest_match(self, word: str) -> EndingPattern | None:
        return self._trie.longest(word)

    def dump(self) -> str:
        lines = [] if self.default_noun_policy else ["@noun-default off"]
        for suffix in sorted(self.patterns):
            p = self.patterns[suffix]
            line = " ".join([suffix, *sorted(p.tags)])
            if suffix in self.noun_excluded_suffixes:
                line += " " + NOUN_EXCLUDED
            lines.append(line)
        return "\n".join(lines) + "\n"


def load_table(text: str, inv: TagInventory) -> GuesserTable:
    patterns: dict[str, EndingPattern] = {}
    excluded: set[str] = set()
    noun_default = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        fields = body.split()
        if not fields:
            continue
        if fields[0].startswith("@"):
            if fields[0] == "@noun-default" and len(fields) == 2 and fields[1] in ("on", "off"):
                noun_default = fields[1] == "on"
                continue
            raise GuesserError(f"unknown directive {body.strip()!r}", lineno)
        suffix, rest = fields[0], fields[1:]
        if suffix != suffix.lower():
            raise GuesserError(f"suffix {suffix!r} must be lowercase", lineno)
        if suffix in patterns:
            raise GuesserError(f"duplicate suffix {suffix!r}", lineno)
        barred = NOUN_EXCLUDED in rest
        tags = [t for t in rest if t != NOUN_EXCLUDED]
        if not tags:
            raise GuesserError(f"suffix {suffix!r} has no tags", lineno)
        for tag in tags:
            if tag not in inv:
                raise GuesserError(f"unknown tag {tag!r}", lineno)
            if inv.is_closed(tag):
                raise GuesserError(f"closed-class tag {tag} cannot be guessed", lineno)
        pattern = EndingPattern(suffix, frozenset(tags), comment.strip())
        if barred:
            if pattern.has_noun:
                raise GuesserError(f"{suffix!r} carries a noun tag but is marked {NOUN_EXCLUDED}", lineno)
            excluded.add(suffix)
        patterns[suffix] = pattern
    return GuesserTable(patterns, noun_default, frozenset(excluded))


def default_table(inv: TagInventory) -> GuesserTable:
    text = resources.files("frlex.data").joinpath("endings.txt").read_text(encoding="utf-8")
    return load_table(text, inv)


_CLITIC_HEAD_TAIL = re.compile(r"(-t-|-)+$")


def strip_clitic_head(token: str) -> str:
    """``bloguent-`` -> ``bloguent``, ``chante-t-`` -> ``chante``."""
    stripped = _CLITIC_HEAD_TAIL.sub("", token)
    return stripped or token


def noun_default(word: str) -> str:
    return NOUN_PL if word.endswith(PLURAL_ENDINGS) else NOUN_SG


def guess(token: str, table: GuesserTable, inv: TagInventory) -> AmbiguityClass:
    word = strip_clitic_head(token)
    if word[:1].isupper():
        return make_class([NOUN_INV], inv)
    word = word.lower()
    pattern = table.longest_match(word)
    if pattern is None:
        return make_class([noun_default(word)], inv)
    tags = set(pattern.tags)
    if (table.default_noun_policy and not pattern.has_noun
            and pattern.suffix not in table.noun_excluded_suffixes):
        tags.add(noun_default(word))
    return make_class(tags, inv)


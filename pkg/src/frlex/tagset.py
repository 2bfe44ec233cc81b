"""Reduced tag inventory and ambiguity classes.

Tags are opaque ASCII atoms such as ``NOUN-SG`` or ``VERB-P3SG``.  An
ambiguity class is the byte-ordered, duplicate-free tuple of all the tags a
surface form can carry before disambiguation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

TAG_RE = re.compile(r"^[A-Z0-9-]+$")

DEFAULT_TAGS = (
    "DET-SG", "DET-PL",
    "NOUN-SG", "NOUN-PL", "NOUN-INV",
    "ADJ-SG", "ADJ-PL",
    "VERB-P3SG", "VERB-P3PL", "VERB-P1P2", "VERB-INF",
    # VAUX-P1P2 and VAUX-INF complete the auxiliary paradigm by symmetry
    # with the VERB tags; they never occur in the reference corpus.
    "VAUX-P3SG", "VAUX-P3PL", "VAUX-P1P2", "VAUX-PAP", "VAUX-INF",
    "PAP-SG", "PAP-PL",
    "PRON", "PC",
    "PREP", "PREP-DE", "PREP-A",
    "CONN", "CONJQUE", "COMME", "NEG",
    "ADV", "NUM", "PUNCT", "CM", "MISC",
)

DEFAULT_CLOSED = frozenset({
    "PREP", "PREP-DE", "PREP-A", "DET-SG", "DET-PL", "PRON", "PC",
    "CONN", "CONJQUE", "COMME", "NEG", "NUM", "PUNCT", "CM",
})


class TagsetError(ValueError):
    """Malformed inventory or invalid tag usage."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _order_key(tag: str) -> bytes:
    return tag.encode("ascii")


@dataclass(frozen=True)
class TagInventory:
    tags: tuple[str, ...]
    closed_class_tags: frozenset[str] = frozenset()

    def __post_init__(self):
        seen = set()
        for tag in self.tags:
            if not isinstance(tag, str) or not TAG_RE.match(tag):
                raise TagsetError(f"malformed tag name {tag!r}")
            if tag in seen:
                raise TagsetError(f"duplicate tag {tag!r}")
            seen.add(tag)
        extra = set(self.closed_class_tags) - seen
        if extra:
            raise TagsetError(f"closed-class tags not in inventory: {sorted(extra)}")

    def __contains__(self, tag) -> bool:
        return tag in self._tagset

    def __iter__(self):
        return iter(self.tags)

    def __len__(self) -> int:
        return len(self.tags)

    @property
    def _tagset(self) -> frozenset[str]:
        # cached on first use; the dataclass is frozen so bypass __setattr__
        cached = self.__dict__.get("_cached_tagset")
        if cached is None:
            cached = frozenset(self.tags)
            object.__setattr__(self, "_cached_tagset", cached)
        return cached

    def is_closed(self, tag: str) -> bool:
        return tag in self.closed_class_tags

    def validate(self, tag: str) -> str:
        if tag not in self:
            raise TagsetError(f"unknown tag {tag!r}")
        return tag


def default_inventory() -> TagInventory:
    return TagInventory(DEFAULT_TAGS, DEFAULT_CLOSED)


def load_inventory(config_text: str) -> TagInventory:
    """Parse an inventory file.

    One tag per line, optionally followed by the word ``closed``.  ``#``
    starts a comment.  A file without any tag lines yields the default
    inventory.
    """
    tags: list[str] = []
    closed: set[str] = set()
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(config_text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        name = fields[0]
        if not TAG_RE.match(name):
            raise TagsetError(f"malformed tag name {name!r}", lineno)
        if len(fields) > 2 or (len(fields) == 2 and fields[1] != "closed"):
            raise TagsetError(f"unexpected text after tag: {' '.join(fields[1:])!r}", lineno)
        if name in seen:
            raise TagsetError(f"duplicate tag {name!r} (first on line {seen[name]})", lineno)
        seen[name] = lineno
        tags.append(name)
        if len(fields) == 2:
            closed.add(name)
    if not tags:
        return default_inventory()
    return TagInventory(tuple(tags), frozenset(closed))


def dump_inventory(inv: TagInventory) -> str:
    lines = [f"{t} closed" if inv.is_closed(t) else t for t in inv.tags]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, order=True)
class AmbiguityClass:
    """Sorted, non-empty tuple of reduced tags.

    Build instances with :func:`make_class`; the constructor only checks
    the ordering invariant.
    """

    tags: tuple[str, ...]

    def __post_init__(self):
        if not self.tags:
            raise TagsetError("ambiguity class must not be empty")
        keys = [_order_key(t) for t in self.tags]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise TagsetError(f"tags not strictly ascending: {self.tags}")

    def __iter__(self):
        return iter(self.tags)

    def __len__(self) -> int:
        return len(self.tags)

    def __contains__(self, tag) -> bool:
        return tag in self.tags

    def __str__(self) -> str:
        return ",".join(self.tags)

    def union(self, other: "AmbiguityClass") -> "AmbiguityClass":
        return AmbiguityClass(_sorted_unique(self.tags + other.tags))


def _sorted_unique(tags: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(tags), key=_order_key))


def make_class(tags: Sequence[str] | AmbiguityClass, inv: TagInventory) -> AmbiguityClass:
    tags = tuple(tags)
    if not tags:
        raise TagsetError("cannot build an ambiguity class from no tags")
    for tag in tags:
        inv.validate(tag)
    return AmbiguityClass(_sorted_unique(tags))


def parse_class(text: str, inv: TagInventory) -> AmbiguityClass:
    """Parse ``TAG,TAG`` (commas or whitespace) into a class."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    return make_class(parts, inv)

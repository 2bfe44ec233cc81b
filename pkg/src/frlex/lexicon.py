"""Compiled lexicon: a minimal acyclic automaton over UTF-8 bytes.

Accepting states carry an index into a table of distinct ambiguity
classes, so two states are only merged when they accept the same suffixes
with the same classes.  Construction follows the sorted-input incremental
algorithm of Daciuk et al. (2000): words are added in byte order and the
previous word's unshared tail is minimized against a register of
canonical states.

Binary layout (all integers little-endian)::

    b"MLX1"                 magic
    u8   version            == 1
    u32  n_classes
    n_classes x:
        u8 n_tags, then n_tags x (u8 len, ASCII tag name)
    u32  n_states
    u32  root
    n_states x:
        i32 class index (-1 if not accepting)
        u16 n_edges
        n_edges x (u8 byte, u32 target)

States are numbered in depth-first order from the root with edges visited
in byte order, which makes the file a pure function of the token set.
"""
from __future__ import annotations

import struct
from collections import defaultdict
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Iterator

from .tagset import AmbiguityClass

MAGIC = b"MLX1"
VERSION = 1
NOT_FINAL = -1


class LexiconFormatError(ValueError):
    pass


class _Node:
    __slots__ = ("final", "edges", "key")

    def __init__(self):
        self.final = NOT_FINAL
        self.edges: dict[int, _Node] = {}
        self.key = None

    def signature(self):
        return (self.final, tuple((b, id(n)) for b, n in sorted(self.edges.items())))


@dataclass(frozen=True)
class Lexicon:
    """Immutable token -> AmbiguityClass map.

    ``finals[s]`` is the class index of state ``s`` (or -1) and
    ``transitions[s]`` maps a byte to the next state.
    """

    classes: tuple[AmbiguityClass, ...]
    finals: tuple[int, ...]
    transitions: tuple[dict[int, int], ...]
    root: int = 0

    @property
    def n_states(self) -> int:
        return len(self.finals)

    @property
    def n_transitions(self) -> int:
        return sum(len(t) for t in self.transitions)

    def lookup(self, token: str) -> AmbiguityClass | None:
        if not self.finals:
            return None
        state = self.root
        for byte in token.encode("utf-8"):
            state = self.transitions[state].get(byte)
            if state is None:
                return None
        idx = self.finals[state]
        return None if idx == NOT_FINAL else self.classes[idx]

    def __contains__(self, token: str) -> bool:
        return self.lookup(token) is not None

    def __getitem__(self, token: str) -> AmbiguityClass:
        cls = self.lookup(token)
        if cls is None:
            raise KeyError(token)
        return cls

    def items(self) -> Iterator[tuple[str, AmbiguityClass]]:
        """Accepted tokens in byte order, with their classes."""
        if not self.finals:
            return
        stack = [(self.root, b"")]
        while stack:
            state, prefix = stack.pop()
            idx = self.finals[state]
            if idx != NOT_FINAL:
                yield prefix.decode("utf-8"), self.classes[idx]
            for byte in sorted(self.transitions[state], reverse=True):
                stack.append((self.transitions[state][byte], prefix + bytes([byte])))

    def tokens(self) -> list[str]:
        return [tok for tok, _ in self.items()]

    def __len__(self) -> int:
        return sum(1 for _ in self.items())

    # serialization

    def to_bytes(self) -> bytes:
        out = bytearray(MAGIC)
        out += struct.pack("<B", VERSION)
        out += struct.pack("<I", len(self.classes))
        for cls in self.classes:
            out += struct.pack("<B", len(cls.tags))
            for tag in cls.tags:
                raw = tag.encode("ascii")
                out += struct.pack("<B", len(raw)) + raw
        out += struct.pack("<II", len(self.finals), self.root)
        for final, edges in zip(self.finals, self.transitions):
            out += struct.pack("<iH", final, len(edges))
            for byte in sorted(edges):
                out += struct.pack("<BI", byte, edges[byte])
        return bytes(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Lexicon":
        if data[:4] != MAGIC:
            raise LexiconFormatError("not a compiled lexicon (bad magic)")
        if len(data) < 5:
            raise LexiconFormatError("truncated header")
        if data[4] != VERSION:
            raise LexiconFormatError(f"unsupported lexicon version {data[4]}")
        try:
            pos = 5
            (n_classes,) = struct.unpack_from("<I", data, pos)
            pos += 4
            classes = []
            for _ in range(n_classes):
                n_tags = data[pos]
                pos += 1
                tags = []
                for _ in range(n_tags):
                    ln = data[pos]
                    tags.append(data[pos + 1:pos + 1 + ln].decode("ascii"))
                    pos += 1 + ln
                classes.append(AmbiguityClass(tuple(tags)))
            n_states, root = struct.unpack_from("<II", data, pos)
            pos += 8
            finals, transitions = [], []
            for _ in range(n_states):
                final, n_edges = struct.unpack_from("<iH", data, pos)
                pos += 6
                edges = {}
                for _ in range(n_edges):
                    byte, target = struct.unpack_from("<BI", data, pos)
                    pos += 5
                    if target >= n_states:
                        raise LexiconFormatError(f"edge to missing state {target}")
                    edges[byte] = target
                if final >= n_classes:
                    raise LexiconFormatError(f"class index {final} out of range")
                finals.append(final)
                transitions.append(edges)
        except (struct.error, IndexError) as exc:
            raise LexiconFormatError(f"truncated lexicon file: {exc}") from None
        if pos != len(data):
            raise LexiconFormatError("trailing bytes after lexicon")
        if n_states and root >= n_states:
            raise LexiconFormatError("root state out of range")
        return cls(tuple(classes), tuple(finals), tuple(transitions), root)

    def save(self, fp: BinaryIO | str) -> None:
        if isinstance(fp, (str, bytes)) or hasattr(fp, "__fspath__"):
            with open(fp, "wb") as fh:
                fh.write(self.to_bytes())
        else:
            fp.write(self.to_bytes())

    @classmethod
    def load(cls, fp: BinaryIO | str) -> "Lexicon":
        if isinstance(fp, (str, bytes)) or hasattr(fp, "__fspath__"):
            with open(fp, "rb") as fh:
                return cls.from_bytes(fh.read())
        return cls.from_bytes(fp.read())


def merge_pairs(pairs: Iterable[tuple[str, AmbiguityClass]]) -> dict[str, AmbiguityClass]:
    merged: dict[str, AmbiguityClass] = {}
    for token, cls in pairs:
        merged[token] = merged[token].union(cls) if token in merged else cls
    return merged


def build(pairs: Iterable[tuple[str, AmbiguityClass]]) -> Lexicon:
    """Compile (token, class) pairs; repeated tokens get the union of classes."""
    merged = merge_pairs(pairs)
    words = sorted((tok.encode("utf-8"), cls) for tok, cls in merged.items())

    class_index: dict[AmbiguityClass, int] = {}
    for _, cls in words:
        class_index.setdefault(cls, len(class_index))

    register: dict = {}
    root = _Node()
    # path of (node, byte, child) for the previous word
    path: list[tuple[_Node, int, _Node]] = []

    def minimize(down_to: int):
        while len(path) > down_to:
            parent, byte, child = path.pop()
            sig = child.signature()
            existing = register.get(sig)
            if existing is not None:
                parent.edges[byte] = existing
            else:
                register[sig] = child

    prev = b""
    for word, cls in words:
        common = 0
        limit = min(len(word), len(prev))
        while common < limit and word[common] == prev[common]:
            common += 1
        minimize(common)
        node = path[-1][2] if path else root
        for byte in word[common:]:
            child = _Node()
            node.edges[byte] = child
            path.append((node, byte, child))
            node = child
        node.final = class_index[cls]
        prev = word
    minimize(0)

    if not words:
        return Lexicon((), (), (), 0)

    # renumber depth-first from the root
    numbering: dict[int, int] = {}
    order: list[_Node] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if id(node) in numbering:
            continue
        numbering[id(node)] = len(order)
        order.append(node)
        for byte in sorted(node.edges, reverse=True):
            child = node.edges[byte]
            if id(child) not in numbering:
                stack.append(child)
    finals = tuple(n.final for n in order)
    transitions = tuple({b: numbering[id(c)] for b, c in sorted(n.edges.items())} for n in order)
    classes = tuple(sorted(class_index, key=class_index.get))
    return Lexicon(classes, finals, transitions, 0)


def class_histogram(lex: Lexicon) -> dict[AmbiguityClass, int]:
    counts: dict[AmbiguityClass, int] = defaultdict(int)
    for _, cls in lex.items():
        counts[cls] += 1
    return dict(counts)

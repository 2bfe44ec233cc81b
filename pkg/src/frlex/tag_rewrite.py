"""Contextual rewrite of fine-grained symbols into reduced tags.

A rule file line looks like::

    +SG +P3 | +Verb | _ -> VERB-P3SG
    _ | +IndP | _ -> 0

Every symbol of a segment is rewritten independently: the first rule whose
target equals the symbol and whose literal left/right contexts match the
*original* symbol sequence fires.  The replacement is a tag, or ``0`` to
drop the symbol.  Because contexts never see rewritten output, the result
does not depend on the order in which positions are visited.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .source_lexicon import AnalysisSegment, SourceEntry, is_fine_symbol, split_cliticised
from .tagset import AmbiguityClass, TagInventory, make_class

log = logging.getLogger(__name__)

EMPTY_CONTEXT = "_"
DELETE = "0"


class RewriteError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnmatchedSymbolError(RewriteError):
    def __init__(self, symbol: str, segment: AnalysisSegment):
        self.symbol = symbol
        self.segment = segment
        super().__init__(f"no rule rewrites {symbol} in '{segment}'")


@dataclass(frozen=True)
class RewriteRule:
    target: str
    left_context: tuple[str, ...] = ()
    right_context: tuple[str, ...] = ()
    replacement: str | None = None
    line: int | None = None

    def matches(self, symbols: Sequence[str], i: int) -> bool:
        if symbols[i] != self.target:
            return False
        nl, nr = len(self.left_context), len(self.right_context)
        if nl > i or i + 1 + nr > len(symbols):
            return False
        return (tuple(symbols[i - nl:i]) == self.left_context
                and tuple(symbols[i + 1:i + 1 + nr]) == self.right_context)

    def __str__(self) -> str:
        left = " ".join(self.left_context) or EMPTY_CONTEXT
        right = " ".join(self.right_context) or EMPTY_CONTEXT
        return f"{left} | {self.target} | {right} -> {self.replacement or DELETE}"


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[RewriteRule, ...]

    def __post_init__(self):
        by_target: dict[str, list[RewriteRule]] = defaultdict(list)
        for rule in self.rules:
            by_target[rule.target].append(rule)
        object.__setattr__(self, "_by_target", dict(by_target))

    def candidates(self, symbol: str) -> list[RewriteRule]:
        return self._by_target.get(symbol, [])

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in self.rules)


def _parse_context(text: str, lineno: int) -> tuple[str, ...]:
    words = text.split()
    if words == [EMPTY_CONTEXT]:
        return ()
    if not words:
        raise RewriteError("empty context, use '_'", lineno)
    for w in words:
        if not is_fine_symbol(w):
            raise RewriteError(f"context item {w!r} is not a '+' symbol", lineno)
    return tuple(words)


def parse_rules(text: str, inv: TagInventory | None = None) -> RuleSet:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise RewriteError("missing '->'", lineno)
        lhs, rhs = (s.strip() for s in line.split("->", 1))
        fields = lhs.split("|")
        if len(fields) != 3:
            raise RewriteError("expected 'LEFT | TARGET | RIGHT -> REPLACEMENT'", lineno)
        left = _parse_context(fields[0], lineno)
        right = _parse_context(fields[2], lineno)
        target = fields[1].strip()
        if not is_fine_symbol(target):
            raise RewriteError(f"target {target!r} is not a '+' symbol", lineno)
        if not rhs or len(rhs.split()) != 1:
            raise RewriteError("replacement must be one tag or '0'", lineno)
        replacement = None if rhs == DELETE else rhs
        if replacement is not None and inv is not None and replacement not in inv:
            raise RewriteError(f"replacement tag {replacement!r} not in inventory", lineno)
        rules.append(RewriteRule(target, left, right, replacement, lineno))
    return RuleSet(tuple(rules))


def find_rule(symbols: Sequence[str], i: int, rules: RuleSet) -> RewriteRule | None:
    for rule in rules.candidates(symbols[i]):
        if rule.matches(symbols, i):
            return rule
    return None


def rewrite_symbols(symbols: Sequence[str], rules: RuleSet,
                    unmatched: list[int] | None = None) -> list[str]:
    """Rewrite a bare symbol sequence; positions no rule covers go to ``unmatched``."""
    out = []
    for i in range(len(symbols)):
        rule = find_rule(symbols, i, rules)
        if rule is None:
            if unmatched is not None:
                unmatched.append(i)
            continue
        if rule.replacement is not None:
            out.append(rule.replacement)
    return out


def rewrite_segment(segment: AnalysisSegment, rules: RuleSet, inv: TagInventory,
                    strict: bool = False) -> list[str]:
    unmatched: list[int] = []
    tags = rewrite_symbols(segment.symbols, rules, unmatched)
    for i in unmatched:
        symbol = segment.symbols[i]
        if strict:
            raise UnmatchedSymbolError(symbol, segment)
        log.warning("no rule for %s in '%s'; dropped", symbol, segment)
    for tag in tags:
        if tag not in inv:
            raise RewriteError(f"replacement tag {tag!r} not in inventory")
    if not tags:
        raise RewriteError(f"'{segment}' rewrites to no tag; rule set incomplete")
    return tags


def derive_class(token: str, entries: Iterable[SourceEntry], rules: RuleSet,
                 inv: TagInventory, strict: bool = False) -> AmbiguityClass:
    """Ambiguity class of one split token over all entries producing it."""
    tags: list[str] = []
    for entry in entries:
        for tok, seg in split_cliticised(entry):
            if tok == token:
                tags.extend(rewrite_segment(seg, rules, inv, strict))
    if not tags:
        raise RewriteError(f"no entry produces token {token!r}")
    return make_class(tags, inv)


def derive_classes(entries: Iterable[SourceEntry], rules: RuleSet, inv: TagInventory,
                   strict: bool = False) -> dict[str, AmbiguityClass]:
    """Classes for every split token of ``entries`` in a single pass."""
    acc: dict[str, list[str]] = defaultdict(list)
    for entry in entries:
        for tok, seg in split_cliticised(entry):
            try:
                acc[tok].extend(rewrite_segment(seg, rules, inv, strict))
            except RewriteError as exc:
                if entry.line is not None and exc.line is None:
                    raise RewriteError(f"{exc} (source line {entry.line})") from exc
                raise
    return {tok: make_class(tags, inv) for tok, tags in acc.items()}


def lint(entries: Iterable[SourceEntry], rules: RuleSet, inv: TagInventory) -> list[str]:
    """Report head segments that rewrite to more than one reduced tag."""
    problems = []
    for entry in entries:
        tags = rewrite_symbols(entry.head.symbols, rules)
        if len(tags) > 1:
            where = f"line {entry.line}: " if entry.line else ""
            problems.append(f"{where}'{entry.head}' yields {len(tags)} tags {tags}")
    return problems

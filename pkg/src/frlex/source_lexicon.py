"""Reader for the fine-grained source lexicon.

Each record pairs a surface form with one analysis::

    danses<TAB>danser +IndP +SG +P2 +Verb
    vient-il<TAB>venir +IndP +SG +P3 +Verb > il +Nom +Masc +SG +P3 +PC

Segments joined by ``>`` follow the head word (post-clitics); segments
joined by ``<`` precede it (pre-clitics).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

SEPARATORS = ("<", ">")
EUPHONIC_T = "t"


class SourceFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class AnalysisSegment:
    lemma: str
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.lemma:
            raise SourceFormatError("empty lemma")
        if not self.symbols:
            raise SourceFormatError(f"segment {self.lemma!r} has no '+' symbol")
        for sym in self.symbols:
            if not is_fine_symbol(sym):
                raise SourceFormatError(f"bad fine symbol {sym!r}")

    def __str__(self) -> str:
        return " ".join((self.lemma,) + self.symbols)


@dataclass(frozen=True)
class SourceEntry:
    surface: str
    head: AnalysisSegment
    pre_clitics: tuple[AnalysisSegment, ...] = ()
    post_clitics: tuple[AnalysisSegment, ...] = ()
    line: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.surface:
            raise SourceFormatError("empty surface form", self.line)

    @property
    def analysis(self) -> str:
        parts = [str(s) for s in self.pre_clitics] + [str(self.head)]
        text = " < ".join(parts)
        for seg in self.post_clitics:
            text += f" > {seg}"
        return text

    def __str__(self) -> str:
        return f"{self.surface}\t{self.analysis}"


def is_fine_symbol(sym: str) -> bool:
    return len(sym) > 1 and sym[0] == "+" and not any(c.isspace() for c in sym)


def _parse_segment(words: list[str], lineno: int) -> AnalysisSegment:
    if not words:
        raise SourceFormatError("dangling clitic separator", lineno)
    lemma, symbols = words[0], words[1:]
    if lemma.startswith("+"):
        raise SourceFormatError(f"segment starts with symbol {lemma!r}, lemma missing", lineno)
    if not symbols:
        raise SourceFormatError(f"no '+' symbol in segment {' '.join(words)!r}", lineno)
    bad = [s for s in symbols if not is_fine_symbol(s)]
    if bad:
        raise SourceFormatError(f"expected '+' symbol, got {bad[0]!r}", lineno)
    return AnalysisSegment(lemma, tuple(symbols))


def parse_line(line: str, lineno: int = 0) -> SourceEntry:
    if "\t" not in line:
        raise SourceFormatError("expected 'surface<TAB>analysis'", lineno)
    surface, analysis = line.split("\t", 1)
    surface = surface.strip()
    if not surface:
        raise SourceFormatError("empty surface form", lineno)
    if "+" not in analysis:
        raise SourceFormatError("no '+' symbol in analysis", lineno)

    segments: list[list[str]] = [[]]
    seps: list[str] = []
    for word in analysis.split():
        if word in SEPARATORS:
            seps.append(word)
            segments.append([])
        else:
            segments[-1].append(word)
    parsed = [_parse_segment(seg, lineno) for seg in segments]

    n_pre = 0
    while n_pre < len(seps) and seps[n_pre] == "<":
        n_pre += 1
    if any(s != ">" for s in seps[n_pre:]):
        raise SourceFormatError("'<' separator after the head word", lineno)
    entry = SourceEntry(
        surface=surface,
        head=parsed[n_pre],
        pre_clitics=tuple(parsed[:n_pre]),
        post_clitics=tuple(parsed[n_pre + 1:]),
        line=lineno,
    )
    try:
        split_cliticised(entry)
    except ValueError as exc:
        raise SourceFormatError(str(exc), lineno) from None
    return entry


def iter_source(text: str) -> Iterator[SourceEntry]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield parse_line(line, lineno)


def parse_source(text: str) -> list[SourceEntry]:
    return list(iter_source(text))


def serialize_source(entries) -> str:
    return "".join(f"{e}\n" for e in entries)


def _split_pre(rest: str) -> tuple[str, str]:
    """Peel one pre-clitic from the front of ``rest``.

    An elided clitic (``s'``) keeps its apostrophe and gets no hyphen.
    """
    apos = rest.find("'")
    hyph = rest.find("-")
    if apos != -1 and (hyph == -1 or apos < hyph) and apos + 1 < len(rest):
        return rest[: apos + 1], rest[apos + 1:]
    if hyph <= 0 or hyph + 1 >= len(rest):
        raise ValueError(f"cannot find pre-clitic boundary in {rest!r}")
    return rest[: hyph + 1], rest[hyph + 1:]


def split_cliticised(entry: SourceEntry) -> list[tuple[str, AnalysisSegment]]:
    """Split a cliticised surface form into separate tokens.

    ``danses-tu`` gives ``danses-`` and ``-tu``; ``chante-t-il`` gives
    ``chante-t-`` and ``-il``.  Pre-clitic tokens keep a trailing hyphen
    (or their apostrophe when elided) and leave the head unmarked.
    """
    rest = entry.surface
    out: list[tuple[str, AnalysisSegment]] = []
    for seg in entry.pre_clitics:
        token, rest = _split_pre(rest)
        out.append((token, seg))

    n_post = len(entry.post_clitics)
    if not n_post:
        out.append((rest, entry.head))
        return out

    parts = rest.split("-")
    if len(parts) < n_post + 1 or any(not p for p in parts[-n_post:]):
        raise ValueError(f"{entry.surface!r} has fewer hyphenated parts than clitics")
    head_parts = parts[:-n_post]
    clitic_parts = parts[-n_post:]
    if len(head_parts) > 1 and head_parts[-1] == EUPHONIC_T:
        head = "-".join(head_parts[:-1]) + "-t-"
    else:
        head = "-".join(head_parts) + "-"
    if head in ("-", "-t-"):
        raise ValueError(f"{entry.surface!r} has an empty head word")
    out.append((head, entry.head))
    out.extend(("-" + piece, seg) for piece, seg in zip(clitic_parts, entry.post_clitics))
    return out


def join_split_tokens(tokens) -> str:
    """Inverse of the boundary-hyphen convention: ``vient-`` + ``-il``."""
    text = ""
    for tok in tokens:
        if text.endswith("-") and tok.startswith("-"):
            tok = tok[1:]
        text += tok
    return text

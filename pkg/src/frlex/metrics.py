"""Scoring of guessed ambiguity classes against required-tag gold sets.

For every word, tags in the gold set but not guessed are *missing*, guessed
tags outside the gold set are *irrelevant*.  A word is *perfect* when it has
neither.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Iterator

from .tagset import AmbiguityClass, TagInventory, parse_class


class MetricsError(ValueError):
    pass


@dataclass(frozen=True)
class GoldRecord:
    token: str
    required: AmbiguityClass


def read_gold(text: str, inv: TagInventory) -> list[GoldRecord]:
    """``token<TAB>TAG(,TAG)*`` lines; a single tag is a singleton set."""
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        if "\t" in raw:
            token, tags = raw.split("\t", 1)
        else:
            parts = raw.split()
            if len(parts) != 2:
                raise MetricsError(f"line {lineno}: expected 'token<TAB>TAGS'")
            token, tags = parts
        try:
            records.append(GoldRecord(token.strip(), parse_class(tags, inv)))
        except ValueError as exc:
            raise MetricsError(f"line {lineno}: {exc}") from None
    return records


def round_half_up(value, places: int = 1) -> Decimal:
    q = Decimal(1).scaleb(-places)
    if isinstance(value, Fraction):
        value = Decimal(value.numerator) / Decimal(value.denominator)
    return Decimal(value).quantize(q, rounding=ROUND_HALF_UP)


@dataclass(frozen=True)
class EvalReport:
    word_count: int = 0
    tag_count: int = 0
    words_all_required: int = 0
    words_no_irrelevant: int = 0
    words_perfect: int = 0
    missing_tag_total: int = 0
    irrelevant_tag_total: int = 0
    words_missing_several: int = 0

    @property
    def avg_tags_per_word(self) -> Fraction:
        return Fraction(self.tag_count, self.word_count)

    @property
    def words_missing(self) -> int:
        return self.word_count - self.words_all_required

    @property
    def words_irrelevant(self) -> int:
        return self.word_count - self.words_no_irrelevant

    def percent(self, count: int) -> Fraction:
        return Fraction(100 * count, self.word_count)

    @property
    def pct_all_required(self) -> Fraction:
        return self.percent(self.words_all_required)

    @property
    def pct_no_irrelevant(self) -> Fraction:
        return self.percent(self.words_no_irrelevant)

    @property
    def pct_perfect(self) -> Fraction:
        return self.percent(self.words_perfect)

    def __add__(self, other: "EvalReport") -> "EvalReport":
        if not isinstance(other, EvalReport):
            return NotImplemented
        return EvalReport(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))

    def as_dict(self) -> dict[str, str]:
        """Key/value view used for the machine-readable report."""
        d = {f.name: str(getattr(self, f.name)) for f in fields(self)}
        d["words_missing"] = str(self.words_missing)
        d["words_irrelevant"] = str(self.words_irrelevant)
        d["avg_tags_per_word"] = str(round_half_up(self.avg_tags_per_word, 2))
        for name in ("pct_all_required", "pct_no_irrelevant", "pct_perfect"):
            d[name] = str(round_half_up(getattr(self, name), 1))
        return d

    def format(self) -> str:
        avg = self.avg_tags_per_word
        lines = [
            f"{self.word_count} words, {self.tag_count} tags assigned, "
            f"{round_half_up(avg, 1)} tags per word ({round_half_up(avg, 2)})",
            f"words missing at least one required tag: {self.words_missing} "
            f"({self.missing_tag_total} tags missing, {self.words_missing_several} words missing several)",
            f"words with at least one irrelevant tag: {self.words_irrelevant} "
            f"({self.irrelevant_tag_total} irrelevant tags)",
            f"all required tags:   {self.words_all_required:6d}  {_pct(self.pct_all_required)}",
            f"no irrelevant tags:  {self.words_no_irrelevant:6d}  {_pct(self.pct_no_irrelevant)}",
            f"perfect:             {self.words_perfect:6d}  {_pct(self.pct_perfect)}",
        ]
        lines += [f"{k}={v}" for k, v in self.as_dict().items()]
        return "\n".join(lines) + "\n"


def _pct(value: Fraction) -> str:
    return f"{round_half_up(value, 1)}% (~{round_half_up(value, 0)}%)"


def score_word(guessed: AmbiguityClass, required: AmbiguityClass) -> EvalReport:
    g, r = set(guessed), set(required)
    missing = len(r - g)
    irrelevant = len(g - r)
    return EvalReport(
        word_count=1,
        tag_count=len(g),
        words_all_required=int(missing == 0),
        words_no_irrelevant=int(irrelevant == 0),
        words_perfect=int(missing == 0 and irrelevant == 0),
        missing_tag_total=missing,
        irrelevant_tag_total=irrelevant,
        words_missing_several=int(missing > 1),
    )


def evaluate(pairs: Iterable[tuple[AmbiguityClass, GoldRecord]]) -> EvalReport:
    total = EvalReport()
    for guessed, gold in pairs:
        total = total + score_word(guessed, gold.required)
    if total.word_count == 0:
        raise MetricsError("nothing to evaluate")
    return total


def iter_word_scores(pairs) -> Iterator[tuple[GoldRecord, AmbiguityClass, set[str], set[str]]]:
    """Per-word (gold, guessed, missing, irrelevant) for error listings."""
    for guessed, gold in pairs:
        g, r = set(guessed), set(gold.required)
        yield gold, guessed, r - g, g - r

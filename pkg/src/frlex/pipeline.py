"""Wiring of the lexicon compiler, tokenizer and guesser."""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field, fields, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from .guesser import GuesserTable, guess, load_table
from .lexicon import Lexicon, build
from .source_lexicon import SourceEntry, parse_source
from .tag_rewrite import RuleSet, derive_classes, lint, parse_rules
from .tagset import AmbiguityClass, TagInventory, load_inventory, make_class
from .tokenizer import Kind, Token, Tokenizer, read_list

log = logging.getLogger(__name__)

PUNCT_TAGS = {",": "CM"}
DEFAULT_PUNCT_TAG = "PUNCT"

SOURCE_LEXICON = "lexicon"
SOURCE_GUESSER = "guesser"
SOURCE_PUNCT = "punct"

_DATA_FILES = {
    "inventory_path": "inventory.txt",
    "rules_path": "rules.txt",
    "source_lexicon_path": "fixture_lexicon.tsv",
    "guesser_table_path": "endings.txt",
    "clitic_list_path": "clitics.txt",
    "elision_list_path": "elisions.txt",
}

# short keys accepted in key=value config files
_CONFIG_KEYS = {
    "inventory": "inventory_path",
    "rules": "rules_path",
    "source_lexicon": "source_lexicon_path",
    "guesser_table": "guesser_table_path",
    "clitics": "clitic_list_path",
    "elisions": "elision_list_path",
    "lexicon": "compiled_lexicon_path",
    "strict_rewrite": "strict_rewrite",
}


class ConfigError(ValueError):
    pass


def data_path(name: str) -> Path:
    return Path(str(resources.files("frlex.data").joinpath(name)))


@dataclass(frozen=True)
class PipelineConfig:
    """File locations; ``None`` means the packaged default."""

    inventory_path: Path | None = None
    rules_path: Path | None = None
    source_lexicon_path: Path | None = None
    guesser_table_path: Path | None = None
    clitic_list_path: Path | None = None
    elision_list_path: Path | None = None
    compiled_lexicon_path: Path | None = None
    strict_rewrite: bool = False

    def path(self, attr: str) -> Path:
        value = getattr(self, attr)
        if value is not None:
            return Path(value)
        if attr in _DATA_FILES:
            return data_path(_DATA_FILES[attr])
        raise ConfigError(f"{attr} is not configured")

    def read(self, attr: str) -> str:
        path = self.path(attr)
        try:
            return path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc.strerror}") from None

    def with_overrides(self, **kw) -> "PipelineConfig":
        kw = {k: (Path(v) if k.endswith("_path") and v is not None else v)
              for k, v in kw.items() if v is not None}
        return replace(self, **kw)


def parse_config(text: str, base_dir: Path | None = None) -> PipelineConfig:
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        attr = _CONFIG_KEYS.get(key, key)
        if attr not in {f.name for f in fields(PipelineConfig)}:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if attr == "strict_rewrite":
            if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise ConfigError(f"line {lineno}: strict_rewrite must be a boolean")
            values[attr] = value.lower() in ("true", "1", "yes")
        else:
            path = Path(value)
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            values[attr] = path
    return PipelineConfig(**values)


def load_config(path: str | Path) -> PipelineConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), path.parent)


@dataclass
class Resources:
    """Everything loaded from a config, parsed once."""

    config: PipelineConfig = field(default_factory=PipelineConfig)
    _cache: dict = field(default_factory=dict, repr=False)

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def inventory(self) -> TagInventory:
        return self._get("inv", lambda: load_inventory(self.config.read("inventory_path")))

    @property
    def rules(self) -> RuleSet:
        return self._get("rules", lambda: parse_rules(self.config.read("rules_path"), self.inventory))

    @property
    def source(self) -> list[SourceEntry]:
        return self._get("source", lambda: parse_source(self.config.read("source_lexicon_path")))

    @property
    def table(self) -> GuesserTable:
        return self._get("table", lambda: load_table(self.config.read("guesser_table_path"), self.inventory))

    @property
    def tokenizer(self) -> Tokenizer:
        return self._get("tok", lambda: Tokenizer(
            read_list(self.config.read("clitic_list_path")),
            read_list(self.config.read("elision_list_path"))))

    @property
    def lexicon(self) -> Lexicon:
        def load():
            if self.config.compiled_lexicon_path is not None:
                return Lexicon.load(self.config.compiled_lexicon_path)
            return compile_lexicon(self.source, self.rules, self.inventory,
                                   self.config.strict_rewrite)
        return self._get("lex", load)


def compile_lexicon(entries: Iterable[SourceEntry], rules: RuleSet, inv: TagInventory,
                    strict: bool = False) -> Lexicon:
    entries = list(entries)
    for problem in lint(entries, rules, inv):
        log.warning("lint: %s", problem)
    classes = derive_classes(entries, rules, inv, strict)
    return build(classes.items())


@dataclass(frozen=True)
class Analysis:
    token: Token
    cls: AmbiguityClass
    source: str

    def line(self) -> str:
        return f"{self.token.text}\t{self.cls}\t{self.source}"


def punct_tag(text: str) -> str:
    return PUNCT_TAGS.get(text, DEFAULT_PUNCT_TAG)


class Analyzer:
    """Lexicon-first analysis with guesser fallback."""

    def __init__(self, lexicon: Lexicon, table: GuesserTable, inv: TagInventory,
                 tokenizer: Tokenizer | None = None):
        self.lexicon = lexicon
        self.table = table
        self.inv = inv
        self.tokenizer = tokenizer or Tokenizer()

    @classmethod
    def from_resources(cls, res: Resources) -> "Analyzer":
        return cls(res.lexicon, res.table, res.inventory, res.tokenizer)

    def analyze_token(self, token: Token) -> Analysis:
        if token.kind is Kind.PUNCT:
            return Analysis(token, make_class([punct_tag(token.text)], self.inv), SOURCE_PUNCT)
        found = self.lexicon.lookup(token.text)
        if found is not None:
            return Analysis(token, found, SOURCE_LEXICON)
        return Analysis(token, guess(token.text, self.table, self.inv), SOURCE_GUESSER)

    def analyze_form(self, text: str) -> Analysis:
        """Analyze one pre-tokenized form, e.g. a gold-file token."""
        if all(c in self.tokenizer.punctuation for c in text):
            return self.analyze_token(Token(text, Kind.PUNCT))
        return self.analyze_token(Token(text))

    def analyze(self, text: str) -> list[Analysis]:
        return [self.analyze_token(t) for t in self.tokenizer.tokenize(text)]

    def iter_lines(self, text: str) -> Iterator[str]:
        for a in self.analyze(text):
            yield a.line()


@dataclass(frozen=True)
class SuffixRow:
    length: int
    tag: str
    rank: int
    suffix: str
    count: int

    def line(self) -> str:
        return f"{self.length}\t{self.tag}\t{self.rank}\t{self.suffix}\t{self.count}"


def _is_plain_word(token: str) -> bool:
    return not (token.startswith("-") or token.endswith("-") or token.endswith("'"))


def suffix_counts(classes: dict[str, AmbiguityClass], lengths=range(2, 7)) -> dict[tuple[int, str], Counter]:
    """Type counts of endings per (length, tag); each distinct word counts once."""
    counts: dict[tuple[int, str], Counter] = defaultdict(Counter)
    words = {tok.lower(): set() for tok in classes if _is_plain_word(tok)}
    for tok, cls in classes.items():
        if _is_plain_word(tok):
            words[tok.lower()].update(cls)
    for word, tags in words.items():
        for n in lengths:
            if len(word) < n:
                continue
            for tag in tags:
                counts[(n, tag)][word[-n:]] += 1
    return counts


def suffix_report(classes: dict[str, AmbiguityClass], k: int,
                  lengths=range(2, 7)) -> list[SuffixRow]:
    if k < 1:
        raise ValueError("k must be at least 1")
    counts = suffix_counts(classes, lengths)
    rows = []
    for (n, tag) in sorted(counts, key=lambda key: (key[0], key[1].encode("ascii"))):
        ranked = sorted(counts[(n, tag)].items(), key=lambda kv: (-kv[1], kv[0]))
        rows.extend(SuffixRow(n, tag, i, s, c) for i, (s, c) in enumerate(ranked[:k], start=1))
    return rows

"""Command-line interface: ``frlex build|tokenize|analyze|guess|suffix-report|evaluate``.

Data goes to standard output, warnings to standard error.  Exit status is
0 on success, 1 on usage errors and 2 on data errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .guesser import GuesserError, guess
from .lexicon import LexiconFormatError
from .metrics import MetricsError, evaluate, iter_word_scores, read_gold
from .pipeline import (Analyzer, ConfigError, PipelineConfig, Resources, compile_lexicon,
                       load_config, suffix_report)
from .source_lexicon import SourceFormatError
from .tag_rewrite import RewriteError, UnmatchedSymbolError, derive_classes
from .tagset import TagsetError, parse_class

log = logging.getLogger("frlex")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2

DATA_ERRORS = (ConfigError, TagsetError, SourceFormatError, RewriteError, GuesserError,
               LexiconFormatError, MetricsError, OSError, UnicodeError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_text(path: str | None) -> str:
    """Read UTF-8 from a file or stdin, replacing undecodable bytes."""
    if path is None or path == "-":
        raw = sys.stdin.buffer.read()
        name = "<stdin>"
    else:
        raw = Path(path).read_bytes()
        name = path
    text = raw.decode("utf-8", errors="replace")
    if "�" in text and b"\xef\xbf\xbd" not in raw:
        log.warning("%s: undecodable bytes replaced with U+FFFD", name)
    return text


def _resources(args) -> Resources:
    config = load_config(args.config) if args.config else PipelineConfig()
    config = config.with_overrides(
        inventory_path=args.inventory,
        rules_path=getattr(args, "rules", None),
        source_lexicon_path=getattr(args, "source", None),
        guesser_table_path=getattr(args, "table", None),
        clitic_list_path=getattr(args, "clitics", None),
        elision_list_path=getattr(args, "elisions", None),
        compiled_lexicon_path=getattr(args, "lexicon", None),
        strict_rewrite=True if getattr(args, "strict", False) else None,
    )
    return Resources(config)


def _write(lines, out=None):
    out = out or sys.stdout
    for line in lines:
        out.write(line + "\n")


# commands

def cmd_build(args) -> int:
    res = _resources(args)
    entries = res.source
    if not entries:
        log.warning("source lexicon is empty; writing an empty lexicon")
    try:
        lex = compile_lexicon(entries, res.rules, res.inventory, res.config.strict_rewrite)
    except UnmatchedSymbolError as exc:
        log.error("%s", exc)
        log.error("unmapped symbol: %s", exc.symbol)
        return EXIT_DATA
    lex.save(args.output)
    print(f"entries={len(entries)}")
    print(f"tokens={len(lex)}")
    print(f"classes={len(lex.classes)}")
    print(f"states={lex.n_states}")
    print(f"transitions={lex.n_transitions}")
    return EXIT_OK


def cmd_tokenize(args) -> int:
    res = _resources(args)
    tokens = res.tokenizer.tokenize(read_text(args.input))
    if args.verbose_tokens:
        _write(f"{t.text}\t{t.kind.value}\t{t.origin.value}" for t in tokens)
    else:
        _write(t.text for t in tokens)
    return EXIT_OK


def cmd_analyze(args) -> int:
    res = _resources(args)
    analyzer = Analyzer.from_resources(res)
    for path in args.inputs or [None]:
        _write(analyzer.iter_lines(read_text(path)))
    return EXIT_OK


def cmd_guess(args) -> int:
    res = _resources(args)
    inv, table = res.inventory, res.table
    for line in read_text(args.input).splitlines():
        token = line.strip()
        if token:
            print(f"{token}\t{guess(token, table, inv)}\tguesser")
    return EXIT_OK


def cmd_suffix_report(args) -> int:
    if args.k < 1:
        raise UsageError("-k must be at least 1")
    res = _resources(args)
    classes = derive_classes(res.source, res.rules, res.inventory, res.config.strict_rewrite)
    rows = suffix_report(classes, args.k)
    print("length\ttag\trank\tsuffix\ttypes")
    _write(r.line() for r in rows)
    if args.figure:
        from .plotting import plot_suffix_report
        plot_suffix_report(rows, args.figure)
        log.info("figure written to %s", args.figure)
    return EXIT_OK


def _read_predictions(text: str, inv) -> dict[str, object]:
    preds = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise MetricsError(f"predictions line {lineno}: expected 'token<TAB>TAGS'")
        preds[parts[0]] = parse_class(parts[1], inv)
    return preds


def cmd_evaluate(args) -> int:
    res = _resources(args)
    inv = res.inventory
    gold = read_gold(read_text(args.gold), inv)
    if args.predictions:
        preds = _read_predictions(read_text(args.predictions), inv)
        missing = [g.token for g in gold if g.token not in preds]
        if missing:
            raise MetricsError(f"no prediction for {len(missing)} gold tokens, e.g. {missing[0]!r}")
        pairs = [(preds[g.token], g) for g in gold]
    elif args.pipeline:
        analyzer = Analyzer.from_resources(res)
        pairs = [(analyzer.analyze_form(g.token).cls, g) for g in gold]
    else:
        pairs = [(guess(g.token, res.table, inv), g) for g in gold]
    report = evaluate(pairs)
    sys.stdout.write(report.format())
    if args.errors:
        for g, guessed, missing, irrelevant in iter_word_scores(pairs):
            if missing or irrelevant:
                print(f"error\t{g.token}\tguessed={guessed}\trequired={g.required}"
                      f"\tmissing={','.join(sorted(missing))}\tirrelevant={','.join(sorted(irrelevant))}")
    if args.figure:
        from .plotting import plot_evaluation
        plot_evaluation(report, args.figure)
        log.info("figure written to %s", args.figure)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value configuration file")
    common.add_argument("--inventory", help="tag inventory file")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="frlex", description="Reduced-tagset lexicon compiler, tokenizer and guesser.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="compile a source lexicon")
    b.add_argument("--source", help="source lexicon (TSV)")
    b.add_argument("--rules", help="rewrite rule file")
    b.add_argument("--strict", action="store_true", help="fail on symbols no rule covers")
    b.add_argument("-o", "--output", required=True, help="compiled lexicon file")
    b.set_defaults(func=cmd_build)

    t = sub.add_parser("tokenize", parents=[common], help="split text into tokens")
    t.add_argument("input", nargs="?")
    t.add_argument("--clitics")
    t.add_argument("--elisions")
    t.add_argument("--origin", dest="verbose_tokens", action="store_true",
                   help="also print token kind and origin")
    t.set_defaults(func=cmd_tokenize)

    a = sub.add_parser("analyze", parents=[common], help="assign ambiguity classes to text")
    a.add_argument("inputs", nargs="*")
    a.add_argument("--lexicon", help="compiled lexicon; default compiles the source lexicon")
    a.add_argument("--source")
    a.add_argument("--rules")
    a.add_argument("--table", help="guesser ending table")
    a.add_argument("--clitics")
    a.add_argument("--elisions")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("guess", parents=[common], help="guess classes for tokens, one per line")
    g.add_argument("input", nargs="?")
    g.add_argument("--table")
    g.set_defaults(func=cmd_guess)

    s = sub.add_parser("suffix-report", parents=[common], help="rank endings by word-type count")
    s.add_argument("--source")
    s.add_argument("--rules")
    s.add_argument("-k", type=int, default=10, help="rows per (length, tag)")
    s.add_argument("--figure", help="write a PNG bar chart here")
    s.set_defaults(func=cmd_suffix_report)

    e = sub.add_parser("evaluate", parents=[common], help="score guesses against a gold file")
    e.add_argument("gold")
    e.add_argument("--predictions", help="token<TAB>TAGS file to score instead of guessing")
    e.add_argument("--pipeline", action="store_true", help="lexicon first, guesser on misses")
    e.add_argument("--lexicon")
    e.add_argument("--source")
    e.add_argument("--rules")
    e.add_argument("--table")
    e.add_argument("--errors", action="store_true", help="list words with errors")
    e.add_argument("--figure", help="write a PNG chart here")
    e.set_defaults(func=cmd_evaluate)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"frlex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DATA_ERRORS as exc:
        print(f"frlex: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

"""Reduced-tagset French lexicon tools: lexicon compiler, tokenizer, guesser, evaluation."""

__version__ = "0.1.0"

from .tagset import AmbiguityClass, TagInventory, default_inventory, load_inventory, make_class
from .source_lexicon import AnalysisSegment, SourceEntry, parse_source, split_cliticised
from .tag_rewrite import RewriteRule, RuleSet, derive_class, parse_rules, rewrite_segment
from .lexicon import Lexicon, build
from .tokenizer import Token, Tokenizer, tokenize
from .guesser import EndingPattern, GuesserTable, guess, load_table
from .metrics import EvalReport, GoldRecord, evaluate

__all__ = [
    "AmbiguityClass", "TagInventory", "default_inventory", "load_inventory", "make_class",
    "AnalysisSegment", "SourceEntry", "parse_source", "split_cliticised",
    "RewriteRule", "RuleSet", "derive_class", "parse_rules", "rewrite_segment",
    "Lexicon", "build",
    "Token", "Tokenizer", "tokenize",
    "EndingPattern", "GuesserTable", "guess", "load_table",
    "EvalReport", "GoldRecord", "evaluate",
]

"""Independent reference implementations used to check the fast paths.

Each oracle takes the slow, obvious route and shares no code with the
module it checks.
"""
from __future__ import annotations

from collections import defaultdict


def rewrite_oracle(symbols, rules):
    """Try every rule at every position; keep the lowest-index match.

    ``rules`` is a list of (left, target, right, replacement) tuples with
    replacement None for deletion.  Returns (tags, unmatched_positions).
    """
    n = len(symbols)
    winners = {}
    for idx, (left, target, right, _) in enumerate(rules):
        for i in range(n):
            window_start = i - len(left)
            window_end = i + 1 + len(right)
            if window_start < 0 or window_end > n:
                continue
            window = list(symbols[window_start:window_end])
            if window == list(left) + [target] + list(right):
                if i not in winners:
                    winners[i] = idx
    tags, unmatched = [], []
    for i in range(n):
        if i not in winners:
            unmatched.append(i)
        elif rules[winners[i]][3] is not None:
            tags.append(rules[winners[i]][3])
    return tags, unmatched


def longest_suffix_oracle(word, suffixes):
    """Enumerate every suffix of ``word`` from longest to shortest."""
    for k in range(len(word) + 1):
        candidate = word[k:]
        if candidate and candidate in suffixes:
            return candidate
    return None


def guess_oracle(token, patterns, excluded, noun_default=True):
    """Reference guesser.  ``patterns`` maps suffix -> set of tags."""
    while token.endswith("-"):
        token = token[:-1]
        if token.endswith("-t"):
            token = token[:-2]
    if token and token[0].isupper():
        return ("NOUN-INV",)
    word = token.lower()
    noun = "NOUN-PL" if word[-1:] in ("s", "x") else "NOUN-SG"
    best = longest_suffix_oracle(word, patterns)
    if best is None:
        return (noun,)
    tags = set(patterns[best])
    if noun_default and best not in excluded and not any(t.startswith("NOUN") for t in tags):
        tags.add(noun)
    return tuple(sorted(tags, key=lambda t: t.encode()))


def naive_minimal_state_count(pairs):
    """States of the minimal partial DFA for a finite map, via a byte trie
    and Moore-style partition refinement."""
    if not pairs:
        return 0
    # trie: list of (final_label, {byte: child})
    nodes = [[None, {}]]
    for word, label in pairs:
        cur = 0
        for b in word.encode("utf-8"):
            nxt = nodes[cur][1].get(b)
            if nxt is None:
                nodes.append([None, {}])
                nxt = len(nodes) - 1
                nodes[cur][1][b] = nxt
            cur = nxt
        nodes[cur][0] = label
    block = [repr(n[0]) for n in nodes]
    while True:
        sigs = [(block[i], tuple(sorted((b, block[c]) for b, c in nodes[i][1].items())))
                for i in range(len(nodes))]
        ids = {}
        new_block = [ids.setdefault(s, len(ids)) for s in sigs]
        if len(ids) == len(set(block)):
            return len(ids)
        block = new_block


def tally(pairs):
    """Per-word missing/irrelevant counts, computed set by set."""
    out = defaultdict(int)
    for guessed, required in pairs:
        missing = [t for t in required if t not in guessed]
        irrelevant = [t for t in guessed if t not in required]
        out["words"] += 1
        out["tags"] += len(guessed)
        out["missing_tags"] += len(missing)
        out["irrelevant_tags"] += len(irrelevant)
        out["all_required"] += not missing
        out["no_irrelevant"] += not irrelevant
        out["perfect"] += not missing and not irrelevant
    return dict(out)

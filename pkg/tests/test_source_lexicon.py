import pytest
from hypothesis import given, strategies as st

from frlex.pipeline import data_path
from frlex.source_lexicon import (AnalysisSegment, SourceEntry, SourceFormatError,
                                  join_split_tokens, parse_line, parse_source,
                                  serialize_source, split_cliticised)


def test_simple_line():
    [e] = parse_source("danses\tdanser +IndP +SG +P2 +Verb\n")
    assert e.surface == "danses"
    assert e.head == AnalysisSegment("danser", ("+IndP", "+SG", "+P2", "+Verb"))
    assert e.pre_clitics == () and e.post_clitics == ()


def test_post_clitic_line():
    [e] = parse_source("vient-il\tvenir +IndP +SG +P3 +Verb > il +Nom +Masc +SG +P3 +PC")
    assert e.head == AnalysisSegment("venir", ("+IndP", "+SG", "+P3", "+Verb"))
    assert e.post_clitics == (AnalysisSegment("il", ("+Nom", "+Masc", "+SG", "+P3", "+PC")),)


def test_pre_clitic_line():
    [e] = parse_source("m'appelle\tme +Refl +SG +P1 +PC < appeler +IndP +SG +P1 +Verb")
    assert e.head.lemma == "appeler"
    assert [s.lemma for s in e.pre_clitics] == ["me"]


def test_empty_and_comments():
    assert parse_source("") == []
    assert parse_source("# nothing\n\n   \n") == []


def test_multiple_lines_per_surface():
    entries = parse_source("danses\tdanser +IndP +SG +P2 +Verb\ndanses\tdanse +Fem +PL +Noun\n")
    assert [e.surface for e in entries] == ["danses", "danses"]


@pytest.mark.parametrize("line,fragment", [
    ("danses\tdanser", "no '+'"),
    ("vient-il\tvenir +Verb >", "dangling"),
    ("vient-il\tvenir +Verb > > il +PC", "dangling"),
    ("vient\t> venir +Verb", "dangling"),
    ("danses danser +Verb", "TAB"),
    ("x-y\ta +A > b +B < c +C", "'<' separator after"),
    ("vient\tvenir +Verb > il +PC", "fewer hyphenated"),
    ("x\t+Verb", "lemma missing"),
])
def test_errors_carry_line_numbers(line, fragment):
    with pytest.raises(SourceFormatError) as err:
        parse_source("# ok\n" + line)
    assert err.value.line == 2
    assert fragment in str(err.value)


def _split(line):
    return split_cliticised(parse_line(line))


def test_split_danses_tu():
    pairs = _split("danses-tu\tdanser +IndP +SG +P2 +Verb > tu +Nom +SG +P2 +PC")
    assert [t for t, _ in pairs] == ["danses-", "-tu"]
    assert pairs[0][1].lemma == "danser" and pairs[1][1].lemma == "tu"


def test_split_euphonic_t():
    pairs = _split("chante-t-il\tchanter +IndP +SG +P3 +Verb > il +Nom +SG +P3 +PC")
    assert [t for t, _ in pairs] == ["chante-t-", "-il"]


def test_split_plain():
    assert _split("danses\tdanser +IndP +SG +P2 +Verb") == [
        ("danses", AnalysisSegment("danser", ("+IndP", "+SG", "+P2", "+Verb")))]


def test_split_two_post_clitics():
    pairs = _split("donne-le-moi\tdonner +Imp +Verb > le +Acc +PC > moi +Dat +PC")
    assert [t for t, _ in pairs] == ["donne-", "-le", "-moi"]


def test_split_hyphenated_head():
    pairs = _split("peut-être-il\tpeut-être +Adv > il +Nom +PC")
    assert [t for t, _ in pairs] == ["peut-être-", "-il"]


def test_split_pre_clitics():
    assert [t for t, _ in _split("m'appelle\tme +PC < appeler +Verb")] == ["m'", "appelle"]
    assert [t for t, _ in _split("lui-même\tlui +PC < même +Adj")] == ["lui-", "même"]


def test_fixture_lexicon_parses():
    entries = parse_source(data_path("fixture_lexicon.tsv").read_text(encoding="utf-8"))
    assert len(entries) > 200
    for e in entries:
        pairs = split_cliticised(e)
        assert len(pairs) == 1 + len(e.pre_clitics) + len(e.post_clitics)
        assert join_split_tokens(t for t, _ in pairs) == e.surface


def test_fixture_round_trip():
    text = data_path("fixture_lexicon.tsv").read_text(encoding="utf-8")
    entries = parse_source(text)
    assert parse_source(serialize_source(entries)) == entries


# property tests

letters = st.text(alphabet="abcdeéèàçt", min_size=1, max_size=6)
symbols = st.lists(st.from_regex(r"\+[A-Z][a-z0-9]{0,3}", fullmatch=True), min_size=1, max_size=4)
segments = st.builds(lambda lemma, syms: AnalysisSegment(lemma, tuple(syms)), letters, symbols)


@st.composite
def entries(draw):
    head_word = draw(st.lists(letters, min_size=1, max_size=2).map("-".join))
    pre = draw(st.lists(letters, max_size=2))
    post = draw(st.lists(letters.filter(lambda s: s != "t"), max_size=3))
    euphonic = bool(post) and draw(st.booleans())
    surface = "".join(p + "-" for p in pre) + head_word
    if post:
        surface += ("-t" if euphonic else "") + "".join("-" + p for p in post)
    return SourceEntry(
        surface,
        draw(segments),
        tuple(draw(segments) for _ in pre),
        tuple(draw(segments) for _ in post),
    )


@given(entries())
def test_serialize_parse_round_trip(entry):
    assert parse_source(serialize_source([entry])) == [entry]


@given(entries())
def test_split_count_and_reconstruction(entry):
    pairs = split_cliticised(entry)
    assert len(pairs) == 1 + len(entry.pre_clitics) + len(entry.post_clitics)
    assert join_split_tokens(t for t, _ in pairs) == entry.surface
    if entry.post_clitics:
        assert all(t.startswith("-") for t, _ in pairs[-len(entry.post_clitics):])


@given(entries())
def test_whitespace_normalization_round_trip(entry):
    messy = str(entry).replace(" ", "   ").replace("\t", " \t ")
    assert parse_source(messy) == [entry]

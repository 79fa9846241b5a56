import pytest

from efslift.catalog import cyclic_group, indiscrete_category, terminal_category, walking_arrow
from efslift.gen import DOCUMENT_KINDS, gen_document
from efslift.report import ValidationError
from efslift.textformat import ParseError, document_of, parse, render


def test_terminal_block():
    doc = parse("cat one\nob x\nend\n")
    assert doc.names() == ["one"]
    assert doc["one"] == terminal_category()
    assert list(doc["one"].ob_names) == ["x"]


def test_terminal_renders_to_three_lines():
    text = document_of(one=terminal_category()).render()
    assert text.strip().splitlines() == ["cat one", "ob *", "end"]


def test_duplicate_block_name():
    with pytest.raises(ParseError) as err:
        parse("cat a\nob x\nend\ncat a\nob y\nend\n")
    assert err.value.line == 4


def test_missing_composite():
    text = "cat Z\nob *\nmor g : * -> *\nend\n"
    with pytest.raises(ValidationError) as err:
        parse(text)
    assert err.value.what == "Z"
    assert "MissingComposite" in err.value.report.kinds()


def test_non_associative_table_is_rejected():
    text = "\n".join([
        "cat M", "ob *", "mor a : * -> *", "mor b : * -> *",
        "comp a . a = b", "comp b . a = a", "comp b . b = a", "comp a . b = a", "end", "",
    ])
    with pytest.raises(ValidationError) as err:
        parse(text)
    assert set(err.value.report.kinds()) == {"NonAssociative"}


@pytest.mark.parametrize("text", [
    "cat a\nob x\n",
    "cat a\nob x\nmor f : x => x\nend\n",
    "fun F : A -> B\nend\n",
    "blob a\nend\n",
    "cat a\nob x x\nend\n",
])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        parse(text)


def test_comments_and_blank_lines_are_ignored():
    a = parse("# a comment\n\ncat one\n  ob x   # trailing\nend\n")
    assert a == parse("cat one\nob x\nend\n")


def test_named_categories_round_trip():
    doc = document_of(W=walking_arrow(), Z=cyclic_group(3), I=indiscrete_category(3))
    assert parse(doc.render()) == doc


@pytest.mark.parametrize("kind", DOCUMENT_KINDS)
def test_generated_documents_round_trip(kind):
    for seed in range(25):
        doc = gen_document(seed, kind)
        text = render(doc)
        back = parse(text)
        assert back == doc
        assert render(back) == text


def test_render_is_idempotent():
    text = "cat C\nob b a\nmor f : a -> b\nend\n"
    once = render(parse(text))
    assert render(parse(once)) == once


def test_subdocument_keeps_dependencies():
    doc = gen_document(3, "2nat")
    sub = doc.subdocument(["alpha"])
    assert sub == doc
    first = doc.names()[0]
    assert doc.subdocument([first]).names() == [first]

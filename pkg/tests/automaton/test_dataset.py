"""
test_dataset.py

Tests for dataset parsing and formatting in pfsa.automaton.dataset.
"""
import pytest

from pfsa.automaton.dataset import Alphabet, Dataset, format_dataset, parse_dataset, read_dataset
from pfsa.utils.errors import DatasetParseError, DomainError
from tests.utils.factories import WORKED_EXAMPLE


def test_parse_slash_worked_example():
    ds = parse_dataset(WORKED_EXAMPLE)
    assert len(ds) == 7
    assert ds.sentences[0] == ("C", "A", "A", "A", "B")
    assert ds.sentences[-1] == ("C", "B")
    assert ds.alphabet.tokens == ("A", "B", "C")
    assert ds.alphabet.delimiter == "$"
    assert ds.total_tokens == 26
    assert ds.total_transitions == 33


def test_symbols_put_delimiter_last():
    alphabet = Alphabet.from_tokens("CAB")
    assert alphabet.symbols == ("A", "B", "C", "$")
    assert alphabet.size == 4
    assert alphabet.delimiter_index == 3
    assert alphabet.index("C") == 2


def test_delimiter_avoids_token_collision():
    alphabet = Alphabet.from_tokens(["$", "x"])
    assert alphabet.delimiter == "<d>"


def test_encoded_appends_delimiter():
    ds = parse_dataset("AB/B")
    assert ds.encoded() == [(0, 1, 2), (1, 2)]


def test_lines_format_words_and_chars():
    words = parse_dataset("hello world\n\nhi there world\n", fmt="lines")
    assert words.sentences == (("hello", "world"), ("hi", "there", "world"))
    chars = parse_dataset("ab\nb a\n", fmt="lines", tokens="chars")
    assert chars.sentences == (("a", "b"), ("b", "a"))


@pytest.mark.parametrize("text", ["", "   ", "A//B", "/AB", "AB/"])
def test_malformed_slash_text(text):
    with pytest.raises(DatasetParseError):
        parse_dataset(text)


def test_unknown_format_rejected():
    with pytest.raises(DatasetParseError):
        parse_dataset("AB", fmt="csv")


def test_empty_sentence_rejected_by_constructor():
    with pytest.raises(DomainError):
        Dataset(Alphabet(("A",)), (("A",), ()))


def test_format_dataset_back_to_text():
    ds = parse_dataset("AB/AAB")
    assert format_dataset(ds) == "AB/AAB\n"
    assert format_dataset(ds, "lines") == "A B\nA A B\n"


def test_slash_format_needs_single_characters():
    ds = parse_dataset("hello world\n", fmt="lines")
    with pytest.raises(DomainError):
        format_dataset(ds, "slash")


def test_read_dataset_from_file(tmp_path):
    path = tmp_path / "d.txt"
    path.write_text(WORKED_EXAMPLE + "\n", encoding="utf-8")
    ds = read_dataset(str(path))
    assert len(ds) == 7
    assert ds.first_symbol_tallies() == {"C": 4, "B": 3}


def test_read_dataset_rejects_non_utf8(tmp_path):
    path = tmp_path / "d.bin"
    path.write_bytes(b"\xff\xfeAB")
    with pytest.raises(DatasetParseError) as info:
        read_dataset(str(path))
    assert info.value.position == 0


def test_read_dataset_accepts_crlf(tmp_path):
    path = tmp_path / "d.txt"
    path.write_bytes(b"AB/\r\nAAB\r\n")
    assert read_dataset(str(path)).sentences == (("A", "B"), ("A", "A", "B"))

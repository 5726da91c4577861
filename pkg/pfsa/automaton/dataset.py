"""
dataset.py

Defines the Alphabet and Dataset types and the two supported text formats.

Key Classes:
- Alphabet: Ordered token inventory plus a distinguished delimiter symbol.
- Dataset: Sentences of tokens over an Alphabet.

Key Functions:
- parse_dataset: Read a dataset from text ('slash' or 'lines' format).
- format_dataset: Write a dataset back to text.
- read_dataset: Load a dataset file from disk.

Formats:
- slash: one stream, sentences separated by '/', every character a token ("CAAAB/BBAAB/CB").
- lines: one sentence per line; tokens are whitespace-separated words, or single
  characters when tokens='chars'. Blank lines are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from pfsa.utils.constants import DELIMITER_CANDIDATES
from pfsa.utils.errors import DatasetParseError, DomainError

FORMATS = ("slash", "lines")
TOKEN_MODES = ("chars", "words")


@dataclass(frozen=True)
class Alphabet:
    tokens: Tuple[str, ...]
    delimiter: str = "$"
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        tokens = tuple(self.tokens)
        object.__setattr__(self, "tokens", tokens)
        if len(set(tokens)) != len(tokens):
            raise DomainError(f"alphabet tokens must be distinct: {tokens}")
        if not tokens:
            raise DomainError("alphabet needs at least one token")
        if self.delimiter in tokens:
            raise DomainError(f"delimiter {self.delimiter!r} is also a token")
        index = {sym: i for i, sym in enumerate(self.symbols)}
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "Alphabet":
        """Sorted alphabet over the given tokens with the first free delimiter text."""
        ordered = tuple(sorted(set(tokens)))
        for candidate in DELIMITER_CANDIDATES:
            if candidate not in ordered:
                return cls(ordered, candidate)
        raise DomainError("no free delimiter symbol for this token set")

    @property
    def symbols(self) -> Tuple[str, ...]:
        """Tokens followed by the delimiter; this order fixes every tie-break."""
        return self.tokens + (self.delimiter,)

    @property
    def size(self) -> int:
        return len(self.tokens) + 1

    @property
    def delimiter_index(self) -> int:
        return len(self.tokens)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise DomainError(f"symbol {symbol!r} not in alphabet") from None

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index


@dataclass(frozen=True)
class Dataset:
    alphabet: Alphabet
    sentences: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        sentences = tuple(tuple(s) for s in self.sentences)
        object.__setattr__(self, "sentences", sentences)
        if not sentences:
            raise DomainError("dataset has no sentences")
        tokens = set(self.alphabet.tokens)
        for i, sentence in enumerate(sentences):
            if not sentence:
                raise DomainError(f"sentence {i} is empty")
            for token in sentence:
                if token not in tokens:
                    raise DomainError(f"sentence {i}: token {token!r} not in alphabet")

    @classmethod
    def from_sentences(cls, sentences: Iterable[Sequence[str]], alphabet: Alphabet = None) -> "Dataset":
        sentences = [tuple(s) for s in sentences]
        if alphabet is None:
            alphabet = Alphabet.from_tokens(t for s in sentences for t in s)
        return cls(alphabet, tuple(sentences))

    @property
    def total_transitions(self) -> int:
        return sum(len(s) + 1 for s in self.sentences)

    @property
    def total_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)

    def encoded(self) -> List[Tuple[int, ...]]:
        """Sentences as symbol indices with the delimiter index appended."""
        index = self.alphabet.index
        delim = self.alphabet.delimiter_index
        return [tuple(index(t) for t in s) + (delim,) for s in self.sentences]

    def first_symbol_tallies(self) -> Dict[str, int]:
        tallies: Dict[str, int] = {}
        for sentence in self.sentences:
            tallies[sentence[0]] = tallies.get(sentence[0], 0) + 1
        return tallies


def _parse_slash(text: str) -> List[Tuple[str, ...]]:
    # whitespace carries no tokens in this format
    stream = "".join(text.split())
    sentences = []
    start = 0
    for pos, ch in enumerate(stream + "/"):
        if ch == "/":
            if pos == start:
                raise DatasetParseError("empty sentence", position=pos)
            sentences.append(tuple(stream[start:pos]))
            start = pos + 1
    return sentences


def _parse_lines(text: str, tokens: str) -> List[Tuple[str, ...]]:
    sentences = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if tokens == "chars":
            sentences.append(tuple(ch for ch in line if not ch.isspace()))
        else:
            sentences.append(tuple(line.split()))
    return sentences


def parse_dataset(text: str, fmt: str = "slash", tokens: str = "words") -> Dataset:
    """
    Parse dataset text.

    Args:
        text: Raw dataset text.
        fmt: 'slash' (single-character tokens, '/' between sentences) or 'lines'.
        tokens: For 'lines', 'words' (whitespace split) or 'chars'.

    Returns:
        Dataset with sentences in input order over the sorted observed tokens.

    Raises:
        DatasetParseError: empty input, empty sentence or zero sentences.
    """
    if fmt not in FORMATS:
        raise DatasetParseError(f"unknown dataset format {fmt!r}")
    if tokens not in TOKEN_MODES:
        raise DatasetParseError(f"unknown token mode {tokens!r}")
    if text is None or not text.strip():
        raise DatasetParseError("dataset text is empty")
    sentences = _parse_slash(text) if fmt == "slash" else _parse_lines(text, tokens)
    if not sentences:
        raise DatasetParseError("dataset has zero sentences")
    return Dataset.from_sentences(sentences)


def format_dataset(dataset: Dataset, fmt: str = "slash") -> str:
    if fmt == "slash":
        if any(len(t) != 1 or t == "/" for s in dataset.sentences for t in s):
            raise DomainError("slash format needs single-character tokens other than '/'")
        return "/".join("".join(s) for s in dataset.sentences) + "\n"
    if fmt == "lines":
        return "".join(" ".join(s) + "\n" for s in dataset.sentences)
    raise DomainError(f"unknown dataset format {fmt!r}")


def read_dataset(path: str, fmt: str = "slash", tokens: str = "words") -> Dataset:
    with open(path, 'rb') as f:
        raw = f.read()
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as exc:
        raise DatasetParseError(f"{path} is not UTF-8 text", position=exc.start) from None
    return parse_dataset(text, fmt=fmt, tokens=tokens)

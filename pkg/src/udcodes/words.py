"""Alphabets, words, codes, and length profiles.

Words are sequences of letter indices drawn from an alphabet of size n >= 2.
For text I/O the letters 0..n-1 render as the glyphs '0'-'9' then 'a'-'z',
which caps the *parseable* alphabets at 36 letters; the in-memory
representation has no such limit.

A code is an ordered sequence of non-empty words.  Order matters: two codes
with the same words in a different order are different codes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

GLYPHS = "0123456789abcdefghijklmnopqrstuvwxyz"
_GLYPH_INDEX = {ch: i for i, ch in enumerate(GLYPHS)}


class CodesError(ValueError):
    """Invalid code, profile, or argument."""


class WordParseError(CodesError):
    """A word string contains a character that is not a letter of the alphabet."""

    def __init__(self, message: str, position: int | None = None, char: str | None = None):
        super().__init__(message)
        self.position = position
        self.char = char


class CodeFileError(CodesError):
    """A code file is malformed; carries a 1-based line (and column) when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Alphabet:
    """An abstract alphabet whose letters are the indices 0..size-1."""

    size: int

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or isinstance(self.size, bool) or self.size < 2:
            raise CodesError(f"alphabet size must be an integer >= 2, got {self.size!r}")

    def glyph(self, letter: int) -> str:
        if not 0 <= letter < self.size:
            raise CodesError(f"letter {letter} outside alphabet of size {self.size}")
        if letter >= len(GLYPHS):
            raise CodesError(
                f"letter {letter} has no glyph; text form supports at most {len(GLYPHS)} letters"
            )
        return GLYPHS[letter]


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word: a tuple of letter indices.

    Words compare lexicographically by symbol index (with a proper prefix
    ordering before its extensions), which is the canonical order used by
    every deterministic construction in this package.
    """

    symbols: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if not isinstance(s, int) or isinstance(s, bool) or s < 0:
                raise CodesError(f"word symbols must be non-negative integers, got {s!r}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item])
        return self.symbols[item]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols)

    def reverse(self) -> "Word":
        return Word(self.symbols[::-1])

    def is_prefix_of(self, other: "Word") -> bool:
        return self.symbols == other.symbols[: len(self.symbols)]

    def text(self) -> str:
        """Glyph form of the word; defined for letters below 36 only."""
        try:
            return "".join(GLYPHS[s] for s in self.symbols)
        except IndexError:
            raise CodesError(f"word {self.symbols!r} has letters with no glyph form") from None

    def __repr__(self) -> str:
        if all(s < len(GLYPHS) for s in self.symbols):
            return f"Word({self.text()!r})"
        return f"Word({self.symbols!r})"


@dataclass(frozen=True)
class Code:
    """An ordered sequence of non-empty words over a common alphabet."""

    alphabet: Alphabet
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.words, tuple):
            object.__setattr__(self, "words", tuple(self.words))
        if len(self.words) == 0:
            raise CodesError("a code needs at least one word")
        for pos, w in enumerate(self.words):
            if not isinstance(w, Word):
                raise CodesError(f"code word at position {pos} is not a Word: {w!r}")
            if len(w) == 0:
                raise CodesError(f"code word at position {pos} is empty")
            for s in w.symbols:
                if s >= self.alphabet.size:
                    raise CodesError(
                        f"code word at position {pos} uses letter {s}, "
                        f"but the alphabet has size {self.alphabet.size}"
                    )

    @classmethod
    def from_texts(cls, texts: Sequence[str], n: int) -> "Code":
        alphabet = Alphabet(n)
        return cls(alphabet, tuple(parse_word(t, alphabet) for t in texts))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.words)

    def profile(self) -> "LengthProfile":
        return LengthProfile.from_lengths(self.lengths)

    def reverse(self) -> "Code":
        return Code(self.alphabet, tuple(w.reverse() for w in self.words))

    def texts(self) -> tuple[str, ...]:
        return tuple(w.text() for w in self.words)


@dataclass(frozen=True)
class LengthProfile:
    """The distinct word lengths of a code, increasing, with multiplicities."""

    values: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        if not isinstance(self.multiplicities, tuple):
            object.__setattr__(self, "multiplicities", tuple(self.multiplicities))
        if not self.values:
            raise CodesError("a length profile needs at least one value")
        if len(self.values) != len(self.multiplicities):
            raise CodesError("values and multiplicities differ in length")
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise CodesError(f"length values must be positive integers, got {v!r}")
        for r in self.multiplicities:
            if not isinstance(r, int) or isinstance(r, bool) or r < 1:
                raise CodesError(f"multiplicities must be positive integers, got {r!r}")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise CodesError(f"length values must be strictly increasing, got {self.values}")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int]) -> "LengthProfile":
        if not lengths:
            raise CodesError("a length profile needs at least one length")
        counts = Counter(lengths)
        values = tuple(sorted(counts))
        return cls(values, tuple(counts[v] for v in values))

    @property
    def total(self) -> int:
        """Number of code words, counted with multiplicity."""
        return sum(self.multiplicities)

    @property
    def lengths(self) -> tuple[int, ...]:
        """All lengths expanded, in increasing order."""
        out: list[int] = []
        for v, r in zip(self.values, self.multiplicities):
            out.extend([v] * r)
        return tuple(out)

    @property
    def is_constant(self) -> bool:
        return len(self.values) == 1

    def multiplicity(self, value: int) -> int:
        for v, r in zip(self.values, self.multiplicities):
            if v == value:
                return r
        return 0


ProfileLike = Union[LengthProfile, Sequence[int]]


def as_profile(profile: ProfileLike) -> LengthProfile:
    if isinstance(profile, LengthProfile):
        return profile
    return LengthProfile.from_lengths(tuple(profile))


def as_length_sequence(profile: ProfileLike) -> tuple[int, ...]:
    """Raw length order: sequences keep their order, profiles expand sorted."""
    if isinstance(profile, LengthProfile):
        return profile.lengths
    lengths = tuple(profile)
    # validate through the profile machinery, then hand back the raw order
    LengthProfile.from_lengths(lengths)
    return lengths


def parse_word(text: str, alphabet: Alphabet) -> Word:
    if alphabet.size > len(GLYPHS):
        raise CodesError(
            f"alphabet of size {alphabet.size} exceeds the {len(GLYPHS)}-letter text form"
        )
    symbols = []
    for pos, ch in enumerate(text):
        idx = _GLYPH_INDEX.get(ch)
        if idx is None:
            raise WordParseError(
                f"invalid character {ch!r} at position {pos}", position=pos, char=ch
            )
        if idx >= alphabet.size:
            raise WordParseError(
                f"letter {ch!r} at position {pos} is outside the alphabet of size {alphabet.size}",
                position=pos,
                char=ch,
            )
        symbols.append(idx)
    return Word(tuple(symbols))


def word_to_text(word: Word, alphabet: Alphabet) -> str:
    for s in word.symbols:
        if s >= alphabet.size:
            raise CodesError(f"letter {s} outside alphabet of size {alphabet.size}")
    return word.text()


def reverse_word(word: Word) -> Word:
    return word.reverse()


def reverse_code(code: Code) -> Code:
    return code.reverse()


def is_prefix(u: Word, v: Word) -> bool:
    """True iff u is an initial segment of v (every word prefixes itself)."""
    return u.is_prefix_of(v)


def common_prefix_length(u: Word, v: Word) -> int:
    k = 0
    for a, b in zip(u.symbols, v.symbols):
        if a != b:
            break
        k += 1
    return k


def length_profile(code: Code) -> LengthProfile:
    return code.profile()


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def parse_code_file(text: str) -> Code:
    """Parse the code file format.

    Line 1 is ``alphabet <n>``; every other non-empty, non-comment line is one
    word in glyph form.  ``#`` starts a comment.  Word order in the file is
    the code's sequence order.
    """
    lines = text.splitlines()
    if not lines or not _strip_comment(lines[0]).strip():
        raise CodeFileError("line 1 must be 'alphabet <n>'", line=1)
    parts = _strip_comment(lines[0]).split()
    if len(parts) != 2 or parts[0] != "alphabet":
        raise CodeFileError(f"line 1 must be 'alphabet <n>', got {lines[0]!r}", line=1)
    try:
        n = int(parts[1])
    except ValueError:
        raise CodeFileError(f"line 1: alphabet size {parts[1]!r} is not an integer", line=1) from None
    if n < 2:
        raise CodeFileError(f"line 1: alphabet size must be >= 2, got {n}", line=1)
    if n > len(GLYPHS):
        raise CodeFileError(
            f"line 1: alphabet size {n} exceeds the {len(GLYPHS)}-letter text form", line=1
        )
    alphabet = Alphabet(n)
    words = []
    for lineno, raw in enumerate(lines[1:], start=2):
        token = _strip_comment(raw).strip()
        if not token:
            continue
        try:
            words.append(parse_word(token, alphabet))
        except WordParseError as exc:
            column = raw.index(token) + (exc.position or 0) + 1
            raise CodeFileError(
                f"line {lineno}, column {column}: {exc}", line=lineno, column=column
            ) from exc
    if not words:
        raise CodeFileError("no code words in file")
    return Code(alphabet, tuple(words))


def code_to_text(code: Code) -> str:
    """Serialize in the code file format (no trailing whitespace)."""
    lines = [f"alphabet {code.alphabet.size}"]
    lines.extend(w.text() for w in code.words)
    return "\n".join(lines)

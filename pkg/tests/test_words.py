import pytest

from udcodes.words import (
    Alphabet,
    Code,
    CodeFileError,
    CodesError,
    LengthProfile,
    Word,
    WordParseError,
    as_length_sequence,
    as_profile,
    code_to_text,
    common_prefix_length,
    is_prefix,
    length_profile,
    parse_code_file,
    parse_word,
    reverse_code,
    reverse_word,
    word_to_text,
)


def test_parse_word_transliterates():
    w = parse_word("100", Alphabet(2))
    assert w.symbols == (1, 0, 0)
    assert len(w) == 3


def test_parse_word_empty():
    assert parse_word("", Alphabet(2)) == Word(())


def test_parse_word_larger_alphabet():
    assert parse_word("201", Alphabet(3)).symbols == (2, 0, 1)


def test_parse_word_out_of_alphabet():
    with pytest.raises(WordParseError) as info:
        parse_word("120", Alphabet(2))
    assert info.value.position == 1
    assert info.value.char == "2"


def test_parse_word_invalid_glyph():
    with pytest.raises(WordParseError) as info:
        parse_word("0!1", Alphabet(2))
    assert info.value.position == 1
    assert info.value.char == "!"


def test_alphabet_size_bounds():
    with pytest.raises(CodesError):
        Alphabet(1)
    with pytest.raises(CodesError):
        Alphabet(0)


def test_word_to_text_round_trip():
    alphabet = Alphabet(36)
    for text in ("0", "10", "z0a"):
        assert word_to_text(parse_word(text, alphabet), alphabet) == text
    with pytest.raises(CodesError):
        word_to_text(Word((3,)), Alphabet(2))


def test_word_ordering_is_lexicographic():
    a = Word((0, 1))
    b = Word((0, 1, 0))
    c = Word((1,))
    assert a < b < c
    assert sorted([c, b, a]) == [a, b, c]


def test_word_slice_and_concat():
    w = Word((1, 0, 0))
    assert w[1:] == Word((0, 0))
    assert w[:2] == Word((1, 0))
    assert w[0] == 1
    assert Word((1,)) + Word((0, 0)) == w


def test_reverse_word_involution():
    w = Word((1, 0, 0))
    assert reverse_word(w) == Word((0, 0, 1))
    assert reverse_word(reverse_word(w)) == w
    assert reverse_word(Word(())) == Word(())


def test_reverse_code_positionwise():
    c = Code.from_texts(["10", "100", "000"], 2)
    r = reverse_code(c)
    assert r.texts() == ("01", "001", "000")
    assert reverse_code(r) == c


def test_is_prefix():
    assert is_prefix(parse_word("10", Alphabet(2)), parse_word("100", Alphabet(2)))
    assert is_prefix(Word((1, 0)), Word((1, 0)))
    assert not is_prefix(Word((0, 1)), Word((0, 0, 1)))
    assert is_prefix(Word(()), Word((1,)))


def test_common_prefix_length():
    assert common_prefix_length(Word((1, 0)), Word((1, 1))) == 1
    assert common_prefix_length(Word((1, 0)), Word((1, 0))) == 2
    assert common_prefix_length(Word((1, 0, 0)), Word((0, 0, 0))) == 0


def test_code_rejects_empty_word():
    with pytest.raises(CodesError):
        Code(Alphabet(2), (Word(()),))


def test_code_rejects_out_of_range_symbol():
    with pytest.raises(CodesError):
        Code(Alphabet(2), (Word((0, 2)),))


def test_code_is_a_sequence_not_a_set():
    """Duplicate words are representable; order matters for equality."""
    c = Code.from_texts(["0", "0"], 2)
    assert c.lengths == (1, 1)
    a = Code.from_texts(["0", "10"], 2)
    b = Code.from_texts(["10", "0"], 2)
    assert a != b


def test_length_profile_of_code():
    c = Code.from_texts(["10", "100", "000"], 2)
    p = length_profile(c)
    assert p.values == (2, 3)
    assert p.multiplicities == (1, 2)
    assert p.total == 3
    assert p.lengths == (2, 3, 3)


def test_length_profile_from_lengths_sorts():
    p = LengthProfile.from_lengths((3, 1, 3))
    assert p.values == (1, 3)
    assert p.multiplicities == (1, 2)
    assert not p.is_constant
    assert p.multiplicity(3) == 2
    assert p.multiplicity(7) == 0
    assert LengthProfile.from_lengths((2, 2)).is_constant


def test_length_profile_validation():
    with pytest.raises(CodesError):
        LengthProfile.from_lengths(())
    with pytest.raises(CodesError):
        LengthProfile.from_lengths((0, 1))
    with pytest.raises(CodesError):
        LengthProfile(values=(2, 1), multiplicities=(1, 1))


def test_as_length_sequence_keeps_raw_order():
    assert as_length_sequence((3, 2, 3)) == (3, 2, 3)
    assert as_length_sequence(LengthProfile.from_lengths((3, 2, 3))) == (2, 3, 3)
    assert as_profile((3, 2, 3)) == as_profile((2, 3, 3))


FILE_TEXT = """alphabet 2
# a comment line
10
100  # trailing comment
000
"""


def test_parse_code_file():
    code = parse_code_file(FILE_TEXT)
    assert code.alphabet.size == 2
    assert code.texts() == ("10", "100", "000")


def test_code_file_round_trip():
    code = parse_code_file(FILE_TEXT)
    text = code_to_text(code)
    assert text == "alphabet 2\n10\n100\n000"
    assert not text.endswith("\n")
    assert parse_code_file(text) == code


def test_code_file_bad_header():
    for text in ("", "alpha 2\n0", "alphabet x\n0", "alphabet 1\n0", "alphabet 40\n0"):
        with pytest.raises(CodeFileError) as info:
            parse_code_file(text)
        assert info.value.line == 1


def test_code_file_bad_word_position():
    with pytest.raises(CodeFileError) as info:
        parse_code_file("alphabet 2\n00\n  012\n")
    assert info.value.line == 3
    assert info.value.column == 5  # two leading spaces, then '2' at word offset 2


def test_code_file_no_words():
    with pytest.raises(CodeFileError):
        parse_code_file("alphabet 2\n# nothing\n")

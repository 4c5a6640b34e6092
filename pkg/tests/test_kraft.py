from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from udcodes.decide import has_finite_delay, is_prefix_code, sardinas_patterson
from udcodes.kraft import (
    ConstructionError,
    InfiniteDelayWitnessSpec,
    anchored_prefix_code,
    canonical_prefix_code,
    count_anchored_prefix_codes,
    count_prefix_codes,
    infinite_delay_witness,
    is_feasible,
    kraft_sum,
    ud_nonprefix_witness,
)
from udcodes.enumeration import enumerate_codes
from udcodes.words import CodesError, LengthProfile, Word


def test_kraft_sum():
    assert kraft_sum((1, 2, 2), 2) == 1
    assert kraft_sum((1, 1, 2), 2) == Fraction(5, 4)
    assert kraft_sum((2, 3, 3), 2) == Fraction(1, 2)
    assert kraft_sum((1, 1, 1), 3) == 1


def test_is_feasible():
    assert is_feasible((2, 3, 3), 2)
    assert is_feasible((1, 2, 2), 2)
    assert not is_feasible((1, 1, 2), 2)
    assert is_feasible((1, 1, 2), 3)


def test_kraft_rejects_bad_alphabet():
    with pytest.raises(CodesError):
        kraft_sum((1, 2), 1)
    with pytest.raises(CodesError):
        kraft_sum((1, 2), 0)


def test_count_prefix_codes():
    trace = count_prefix_codes((2, 3, 3), 2)
    assert trace.count == 120
    assert trace.available == (4, 6)
    assert trace.n == 2
    assert count_prefix_codes((1, 2), 2).count == 4
    assert count_prefix_codes((1, 1), 2).count == 2


def test_count_zero_iff_infeasible():
    for lengths in ((1, 1, 2), (1, 1, 1), (1, 1, 1, 1)):
        assert count_prefix_codes(lengths, 2).count == 0
        assert not is_feasible(lengths, 2)
    assert count_prefix_codes((1, 1, 1), 3).count == 6


def test_canonical_prefix_code():
    assert canonical_prefix_code((2, 3, 3), 2).texts() == ("00", "010", "011")
    assert canonical_prefix_code((1, 1), 2).texts() == ("0", "1")
    assert canonical_prefix_code((1, 2), 2).texts() == ("0", "10")


def test_canonical_keeps_raw_order():
    # lengths are honored position by position, not sorted
    assert canonical_prefix_code((3, 2, 3), 2).texts() == ("010", "00", "011")


def test_canonical_is_a_prefix_code():
    for lengths in ((2, 3, 3), (1, 2, 4), (2, 2, 4), (3, 2, 3)):
        c = canonical_prefix_code(lengths, 2)
        assert is_prefix_code(c)
        assert c.lengths == lengths


def test_canonical_infeasible_cites_kraft_sum():
    with pytest.raises(ConstructionError, match="5/4"):
        canonical_prefix_code((1, 1, 2), 2)


def test_anchored_family_count():
    fam = count_anchored_prefix_codes((2, 3, 3), 2, 2, 3)
    assert fam.count == 10
    assert fam.anchor_a == Word((0, 1))
    assert fam.anchor_b == Word((0, 0, 1))
    assert (fam.index_a, fam.index_b) == (0, 1)
    assert count_anchored_prefix_codes((1, 2), 2, 1, 2).count == 1
    assert count_anchored_prefix_codes((2, 2, 3), 2, 2, 3).count == 4


def test_anchored_family_infeasible_is_zero():
    assert count_anchored_prefix_codes((1, 1, 2), 2, 1, 2).count == 0


def test_anchored_family_bad_arguments():
    with pytest.raises(CodesError):
        count_anchored_prefix_codes((2, 3, 3), 2, 3, 2)
    with pytest.raises(CodesError):
        count_anchored_prefix_codes((2, 3, 3), 2, 2, 4)
    with pytest.raises(CodesError):
        count_anchored_prefix_codes((2, 2), 2, 2, 2)


@pytest.mark.parametrize("lengths,n", [((2, 3, 3), 2), ((2, 2, 3), 2), ((1, 2, 4), 2), ((2, 3, 3), 3)])
def test_anchored_count_matches_enumeration(lengths, n):
    fam = count_anchored_prefix_codes(lengths, n, min(lengths), max(lengths))
    hits = sum(
        1
        for c in enumerate_codes(lengths, n)
        if is_prefix_code(c) and fam.anchor_a in c.words and fam.anchor_b in c.words
    )
    assert fam.count == hits


def test_anchored_prefix_code():
    plain = anchored_prefix_code((2, 3, 3), 2, 2, 3)
    assert plain.texts() == ("01", "001", "000")
    assert is_prefix_code(plain)
    zeroed = anchored_prefix_code((2, 3, 3), 2, 2, 3, zero_word_length=3)
    assert zeroed.texts() == ("01", "001", "000")
    assert Word((0, 0, 0)) in zeroed.words


def test_anchored_prefix_code_zero_word_validation():
    with pytest.raises(CodesError):
        anchored_prefix_code((2, 3, 3), 2, 2, 3, zero_word_length=2)
    with pytest.raises(CodesError):
        anchored_prefix_code((2, 3, 3), 2, 2, 3, zero_word_length=5)


def test_ud_nonprefix_witness():
    w = ud_nonprefix_witness((2, 3, 3), 2)
    assert w.texts() == ("10", "100", "000")
    assert not is_prefix_code(w)
    assert sardinas_patterson(w).unique
    small = ud_nonprefix_witness((1, 2), 2)
    assert small.texts() == ("1", "10")
    assert sardinas_patterson(small).unique


def test_ud_nonprefix_witness_needs_two_lengths():
    with pytest.raises(CodesError):
        ud_nonprefix_witness((2, 2, 2), 2)


def test_infinite_delay_witness_cases():
    cases = {
        (2, 3, 3): ("rb-many", ("10", "100", "000")),
        (1, 2, 2): ("rb-many", ("1", "10", "00")),
        (1, 2, 4): ("three-values", ("1", "10", "0000")),
        (2, 2, 3): ("two-values", ("11", "00", "110")),
    }
    for lengths, (case, texts) in cases.items():
        c, spec = infinite_delay_witness(lengths, 2)
        assert spec.case == case
        assert c.texts() == texts
        assert sardinas_patterson(c).unique
        assert not has_finite_delay(c)


def test_infinite_delay_witness_condition_errors():
    # profiles where every uniquely decodable code has finite delay
    for lengths in ((1, 1, 2), (1, 2), (2, 2), (2, 2, 4)):
        with pytest.raises(CodesError, match="finite delay"):
            infinite_delay_witness(lengths, 2)


def test_infinite_delay_witness_checks_condition_before_kraft():
    # (1,1,2) is infeasible at n=2, but the structural answer comes first
    with pytest.raises(CodesError, match="finite delay"):
        infinite_delay_witness((1, 1, 2), 2)


def test_infinite_delay_witness_infeasible():
    with pytest.raises(CodesError, match="Kraft sum 11/8"):
        infinite_delay_witness((1, 1, 2, 3), 2)


def test_witness_spec_validation():
    with pytest.raises(CodesError):
        InfiniteDelayWitnessSpec(case="bogus", a=2, b=3, remainder=1, quotient=1)
    with pytest.raises(CodesError):
        InfiniteDelayWitnessSpec(case="two-values", a=2, b=3, remainder=0, quotient=1)
    with pytest.raises(CodesError):
        InfiniteDelayWitnessSpec(case="two-values", a=2, b=3, remainder=2, quotient=1)


profiles = st.lists(st.integers(1, 4), min_size=1, max_size=4)


@settings(max_examples=200, deadline=None)
@given(profiles, st.integers(2, 4))
def test_count_positive_iff_feasible(lengths, n):
    positive = count_prefix_codes(lengths, n).count > 0
    assert positive == is_feasible(lengths, n)


@settings(max_examples=100, deadline=None)
@given(profiles, st.integers(2, 3))
def test_canonical_matches_count(lengths, n):
    if is_feasible(lengths, n):
        c = canonical_prefix_code(lengths, n)
        assert is_prefix_code(c)
        assert c.lengths == tuple(lengths)
    else:
        with pytest.raises(ConstructionError):
            canonical_prefix_code(lengths, n)


def test_profile_arguments_accepted():
    p = LengthProfile.from_lengths((2, 3, 3))
    assert count_prefix_codes(p, 2).count == 120
    assert kraft_sum(p, 2) == Fraction(1, 2)

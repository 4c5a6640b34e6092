"""Acceptance gate: ten checks against pinned reference values.

Each test prints one PASS line when it succeeds.  Three reference
constants for the (2,3,3) census disagree with exhaustive enumeration
(see README); those tests are expected to fail until the constants are
revised, and they are deliberately not weakened here.
"""

import time
from fractions import Fraction

from udcodes.census import (
    count_all_a_then_b,
    is_fd_eq_ud,
    fd_matches_ud_condition,
    theorem1_bound,
)
from udcodes.decide import (
    delay_analysis,
    sardinas_patterson,
)
from udcodes.enumeration import (
    BUILTIN_SUITE,
    bounded_delay_probe,
    census,
    classify,
    enumerate_codes,
    safe_bound,
    two_factorization_search,
    universe_size,
)
from udcodes.kraft import (
    count_anchored_prefix_codes,
    count_prefix_codes,
    infinite_delay_witness,
    is_feasible,
    kraft_sum,
    ud_nonprefix_witness,
)
from udcodes.words import Code, reverse_code


def test_01_binary_census_of_one_short_two_long_lengths():
    start = time.perf_counter()
    report = census((2, 3, 3), 2, mode="enumeration")
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"census took {elapsed:.2f}s, budget 1s"
    assert report.total == 256
    assert report.pr == 120
    assert count_prefix_codes((2, 3, 3), 2).count == report.pr
    assert report.ud == 132
    print("PASS 01: (2,3,3) n=2 census pr=120 ud=132 in {:.2f}s".format(elapsed))


def test_02_ternary_census_of_one_short_two_long_lengths():
    start = time.perf_counter()
    report = census((2, 3, 3), 3, mode="enumeration")
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"census took {elapsed:.2f}s, budget 30s"
    assert report.total == 6561
    assert report.pr == 4968
    assert count_prefix_codes((2, 3, 3), 3).count == report.pr
    assert report.ud == 5202
    print("PASS 02: (2,3,3) n=3 census pr=4968 ud=5202 in {:.2f}s".format(elapsed))


def test_03_short_words_plus_one_long_word_family():
    # (n, m, a, b): m-1 words of length a and one word of length b
    instances = [
        ((2, 2, 1, 2), {"ud": 6, "pr": 4}),
        ((3, 3, 1, 2), {"ud": 30}),
        ((2, 3, 2, 4), {"ud": 144}),
        ((2, 3, 1, 2), {"ud": 0}),
    ]
    for (n, m, a, b), expected in instances:
        lengths = (a,) * (m - 1) + (b,)
        start = time.perf_counter()
        counts = count_all_a_then_b(n, m, a, b)
        report = census(lengths, n, mode="enumeration")
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"instance {(n, m, a, b)} took {elapsed:.2f}s"
        assert counts.ud == report.ud == expected["ud"], (n, m, a, b)
        assert counts.pr == report.pr
        if "pr" in expected:
            assert counts.pr == expected["pr"]
        if expected["ud"] == 0:
            assert kraft_sum(lengths, n) == Fraction(5, 4)
            assert not is_feasible(lengths, n)
    print("PASS 03: closed form matches enumeration on all 4 family instances")


def test_04_prefix_count_recurrence_matches_enumeration_suitewide():
    checked = 0
    for profile in BUILTIN_SUITE:
        for n in (2, 3):
            if universe_size(profile, n) > 10**6:
                continue
            report = census(profile, n, mode="enumeration")
            assert count_prefix_codes(profile, n).count == report.pr, (profile, n)
            checked += 1
    assert checked == 20
    print(f"PASS 04: prefix recurrence exact on {checked} profile/alphabet pairs")


def test_05_ratio_lower_bound_for_one_short_two_long_lengths():
    binary = theorem1_bound((2, 3, 3), 2, 2, 3)
    assert binary.lower_bound == Fraction(13, 12)
    assert binary.satisfied
    ternary = theorem1_bound((2, 3, 3), 3, 2, 3)
    assert ternary.lower_bound == Fraction(109, 108)
    assert ternary.satisfied
    anchored = count_anchored_prefix_codes((2, 3, 3), 2, 2, 3)
    assert binary.pr_count + anchored.count <= binary.ud_count
    assert binary.ratio == Fraction(11, 10)
    assert ternary.ratio == Fraction(5202, 4968)
    print("PASS 05: ratio bounds 13/12 and 109/108 hold; pr+anchored <= ud")


def test_06_prefix_equals_ud_exactly_for_constant_lengths():
    witnesses = 0
    for profile in BUILTIN_SUITE:
        for n in (2, 3):
            if not is_feasible(profile, n):
                continue
            report = census(profile, n, mode="enumeration")
            constant = len(set(profile)) == 1
            assert (report.pr == report.ud) == constant, (profile, n)
            if not constant:
                witness = ud_nonprefix_witness(profile, n)
                result = classify(witness)
                assert result.ud and not result.prefix, (profile, n)
                witnesses += 1
    print(f"PASS 06: pr==ud iff constant lengths; {witnesses} UD-not-prefix witnesses")


def test_07_finite_delay_equals_ud_exactly_when_condition_holds():
    suite = [(1, 2), (1, 1), (2, 2, 4), (2, 2, 3), (1, 2, 2), (2, 3, 3), (1, 1, 1), (1, 2, 4)]
    witnesses = 0
    for profile in suite:
        if not is_feasible(profile, 2):
            continue
        report = census(profile, 2, mode="enumeration")
        predicted = is_fd_eq_ud(profile, 2)
        assert (report.fd == report.ud) is predicted, profile
        if not fd_matches_ud_condition(profile):
            code, _spec = infinite_delay_witness(profile, 2)
            result = classify(code)
            assert result.ud and not result.finite_delay, profile
            witnesses += 1
    print(f"PASS 07: fd==ud iff predicate; {witnesses} infinite-delay witnesses")


def test_08_oracle_agreement_on_every_small_universe_code():
    checked = 0
    for profile in BUILTIN_SUITE:
        if universe_size(profile, 2) > 10**4:
            continue
        for code in enumerate_codes(profile, 2):
            trace = sardinas_patterson(code)
            found = two_factorization_search(code, safe_bound(code))
            assert trace.unique == (found is None), code.texts()
            if len(set(code.words)) == len(code.words):
                analysis = delay_analysis(code)
                probe = bounded_delay_probe(code, safe_bound(code))
                assert analysis.finite == (probe.verdict == "finite"), code.texts()
                assert analysis.delay == probe.delay, code.texts()
            checked += 1
    assert checked == 852
    print(f"PASS 08: independent oracles agree on all {checked} codes")


def test_09_regression_flagship_example_and_its_reverse():
    code = Code.from_texts(["10", "100", "000"], 2)
    result = classify(code)
    assert result.ud and not result.prefix and not result.finite_delay
    witness = delay_analysis(code).witness
    assert witness.preamble.text() == "1"
    assert witness.period.text() == "0"
    assert witness.rendered() == "1(0)^inf"
    reverse = classify(reverse_code(code))
    assert reverse.prefix and reverse.finite_delay
    print("PASS 09: (10,100,000) UD, not prefix, infinite delay; reverse is prefix")


def test_10_inclusion_chain_and_two_word_codes_have_finite_delay():
    for profile in BUILTIN_SUITE:
        for code in enumerate_codes(profile, 2):
            result = classify(code)
            if result.prefix:
                assert result.finite_delay, code.texts()
            if result.finite_delay:
                assert result.ud, code.texts()
    pairs = 0
    for a in range(1, 5):
        for b in range(1, 5):
            for code in enumerate_codes((a, b), 2):
                result = classify(code)
                if result.ud:
                    assert result.finite_delay, code.texts()
                pairs += 1
    assert pairs == 900
    print(f"PASS 10: prefix=>fd=>ud suitewide; all {pairs} two-word codes checked")

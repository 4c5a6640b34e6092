"""Exhaustive desk-scale verification: enumerate every code with a given
length sequence, classify each one, aggregate censuses, and provide
brute-force deciders (a two-factorization search and a bounded delay probe)
that are independent of the decision module's algorithms.
"""

from __future__ import annotations

import csv
import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import IO, Iterator, Optional

from ._graph import cyclic_nodes, topological_order
from .census import closed_form_counts, fd_matches_ud_condition
from .decide import delay_analysis, is_prefix_code, sardinas_patterson
from .kraft import count_prefix_codes, is_feasible
from .words import (
    Alphabet,
    Code,
    CodesError,
    LengthProfile,
    ProfileLike,
    Word,
    as_length_sequence,
    as_profile,
)

DEFAULT_UNIVERSE_CAP = 10**6

# Length sequences exercised by the verify command; all enumerable at n <= 3.
BUILTIN_SUITE: tuple[tuple[int, ...], ...] = (
    (1, 1),
    (1, 2),
    (2, 2),
    (1, 1, 1),
    (1, 1, 2),
    (1, 2, 2),
    (1, 2, 4),
    (2, 2, 3),
    (2, 2, 4),
    (2, 3, 3),
)


class UniverseTooLarge(CodesError):
    def __init__(self, total: int, cap: int):
        super().__init__(
            f"enumeration universe holds {total} codes, above the cap of {cap}"
        )
        self.total = total
        self.cap = cap


def universe_size(profile: ProfileLike, n: int) -> int:
    """Number of ordered word sequences with the given lengths."""
    return n ** sum(as_length_sequence(profile))


@lru_cache(maxsize=None)
def _word_pool(length: int, n: int) -> tuple[Word, ...]:
    return tuple(
        Word(symbols) for symbols in itertools.product(range(n), repeat=length)
    )


def enumerate_codes(
    profile: ProfileLike, n: int, cap: int = DEFAULT_UNIVERSE_CAP
) -> Iterator[Code]:
    """Yield every code with the given lengths exactly once, in lexicographic
    order of the concatenated symbol sequence.  Non-injective sequences are
    included; classification filters them."""
    lengths = as_length_sequence(profile)
    total = universe_size(lengths, n)
    if total > cap:
        raise UniverseTooLarge(total, cap)
    alphabet = Alphabet(n)
    pools = [_word_pool(length, n) for length in lengths]
    for combo in itertools.product(*pools):
        yield Code(alphabet, combo)


@dataclass(frozen=True)
class Classification:
    injective: bool
    prefix: bool
    ud: bool
    finite_delay: bool
    delay: Optional[int]


def classify(code: Code) -> Classification:
    injective = len(set(code.words)) == len(code.words)
    prefix = is_prefix_code(code)
    ud = sardinas_patterson(code).unique
    if injective:
        report = delay_analysis(code)
        finite, delay = report.finite, report.delay
    else:
        finite, delay = False, None
    return Classification(injective, prefix, ud, finite, delay)


@dataclass(frozen=True)
class CensusReport:
    """Counts of the prefix / finite-delay / uniquely decodable codes with a
    given length profile.  A count is None when the requested source cannot
    produce it (formula mode with no applicable closed form).  discrepancies
    is non-empty only in both mode, when formula and enumeration disagree."""

    profile: LengthProfile
    n: int
    total: int
    pr: Optional[int]
    fd: Optional[int]
    ud: Optional[int]
    source: str
    discrepancies: tuple[str, ...]


def _formula_counts(p: LengthProfile, n: int) -> tuple[int, Optional[int], Optional[int]]:
    pr = count_prefix_codes(p, n).count
    if not is_feasible(p, n):
        return 0, 0, 0
    closed = closed_form_counts(p, n)
    ud = closed.ud if closed is not None else None
    if p.is_constant:
        fd: Optional[int] = pr
    elif fd_matches_ud_condition(p):
        fd = ud
    else:
        fd = None
    return pr, fd, ud


def _enumerated_counts(p: LengthProfile, n: int, cap: int) -> tuple[int, int, int]:
    pr = fd = ud = 0
    for code in enumerate_codes(p, n, cap):
        c = classify(code)
        pr += c.prefix
        fd += c.finite_delay
        ud += c.ud
    return pr, fd, ud


def census(
    profile: ProfileLike, n: int, mode: str = "both", cap: int = DEFAULT_UNIVERSE_CAP
) -> CensusReport:
    """Count prefix / finite-delay / uniquely decodable codes by closed
    formulas, exhaustive enumeration, or both (cross-checking)."""
    if mode not in ("formula", "enumeration", "both"):
        raise CodesError(f"mode must be formula, enumeration or both, got {mode!r}")
    p = as_profile(profile)
    total = universe_size(p, n)
    if mode == "formula":
        pr, fd, ud = _formula_counts(p, n)
        return CensusReport(p, n, total, pr, fd, ud, mode, ())
    e_pr, e_fd, e_ud = _enumerated_counts(p, n, cap)
    if mode == "enumeration":
        return CensusReport(p, n, total, e_pr, e_fd, e_ud, mode, ())
    f_pr, f_fd, f_ud = _formula_counts(p, n)
    discrepancies = tuple(
        f"{name}: formula {formula} != enumeration {enumerated}"
        for name, formula, enumerated in (
            ("pr", f_pr, e_pr),
            ("fd", f_fd, e_fd),
            ("ud", f_ud, e_ud),
        )
        if formula is not None and formula != enumerated
    )
    return CensusReport(p, n, total, e_pr, e_fd, e_ud, mode, discrepancies)


def write_classification_csv(
    profile: ProfileLike, n: int, out: IO[str], cap: int = DEFAULT_UNIVERSE_CAP
) -> int:
    """Classify every code with the given lengths and write one CSV row per
    code; returns the number of rows."""
    total = universe_size(profile, n)
    if total > cap:
        raise UniverseTooLarge(total, cap)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["code", "injective", "prefix", "ud", "finite_delay", "delay"])
    rows = 0
    for code in enumerate_codes(profile, n, cap):
        c = classify(code)
        writer.writerow(
            [
                ";".join(code.texts()),
                _csv_bool(c.injective),
                _csv_bool(c.prefix),
                _csv_bool(c.ud),
                _csv_bool(c.finite_delay),
                "" if c.delay is None else str(c.delay),
            ]
        )
        rows += 1
    return rows


def _csv_bool(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# Brute-force oracles


def safe_bound(code: Code) -> int:
    """Search horizon that makes the brute-force deciders complete.

    Any two-factorization counterexample longer than this revisits a dangling
    suffix state: there are |S| distinct non-empty proper suffixes of code
    words, a boundary of the shorter factorization falls inside (or at the
    start of) every leader word, and between two boundaries with the same
    dangling suffix the stream can be cut out, shortening the counterexample.
    The pigeonhole grid is (|S| + 1) states wide and advances at least one
    leader word, hence at most max-word-length letters, per step.
    """
    suffixes = {
        word[k:] for word in code.words for k in range(1, len(word))
    }
    longest = max(len(word) for word in code.words)
    return (len(suffixes) + 1) * longest


_Search = tuple[Word, tuple[int, ...], tuple[int, ...]]


def two_factorization_search(code: Code, length_bound: int) -> Optional[_Search]:
    """Breadth-first search for the earliest word admitting two distinct
    code-word factorizations, scanning candidate streams up to length_bound
    letters; None when there is none.  Earliest means shortest, ties broken
    lexicographically.  With length_bound >= safe_bound(code), None is a
    proof of unique decodability."""
    if length_bound < 1:
        raise CodesError(f"length bound must be >= 1, got {length_bound}")
    words = code.words
    best: Optional[_Search] = None
    for i, j in itertools.combinations(range(len(words)), 2):
        if words[i] == words[j] and len(words[i]) <= length_bound:
            candidate = (words[i], (i,), (j,))
            if best is None or _search_key(candidate) < _search_key(best):
                best = candidate

    # Heap states: the leader side has emitted `stream`, of which the final
    # `dangling` letters are not yet matched by the trailing side.  Keys are
    # (length, stream) so the first completion popped is the earliest.
    heap: list[tuple[int, Word, Word, tuple[int, ...], tuple[int, ...]]] = []
    for i, leader in enumerate(words):
        for j, trailer in enumerate(words):
            if i != j and trailer.is_prefix_of(leader) and len(trailer) < len(leader):
                heapq.heappush(
                    heap, (len(leader), leader, leader[len(trailer):], (j,), (i,))
                )
    seen: set[Word] = set()
    while heap:
        stream_len, stream, dangling, trailing_fact, leading_fact = heapq.heappop(heap)
        if best is not None and (stream_len, stream) >= _search_key(best)[:2]:
            break
        if stream_len > length_bound:
            break
        if dangling in seen:
            continue
        seen.add(dangling)
        for idx, word in enumerate(words):
            if word == dangling:
                found = (stream, trailing_fact + (idx,), leading_fact)
                a, b = sorted(found[1:])
                candidate = (stream, a, b)
                if best is None or _search_key(candidate) < _search_key(best):
                    best = candidate
                continue
            if dangling.is_prefix_of(word):
                extension = word[len(dangling):]
                heapq.heappush(
                    heap,
                    (
                        stream_len + len(extension),
                        stream + extension,
                        extension,
                        leading_fact,
                        trailing_fact + (idx,),
                    ),
                )
            elif word.is_prefix_of(dangling):
                heapq.heappush(
                    heap,
                    (
                        stream_len,
                        stream,
                        dangling[len(word):],
                        trailing_fact + (idx,),
                        leading_fact,
                    ),
                )
    if best is not None and len(best[0]) > length_bound:
        return None
    return best


def _search_key(found: _Search):
    word, first, second = found
    return (len(word), word, first, second)


@dataclass(frozen=True)
class ProbeResult:
    verdict: str  # finite | infinite | unknown
    delay: Optional[int]
    witness: Optional[tuple[Word, Word]]


# Entries of a probe state are (tag, word index, offset): some factorization
# of the consumed stream starts with code word `tag` and is `offset` letters
# into the word at `word index`.  Offset 0 means the word is about to start.
_Entry = tuple[int, int, int]
_ProbeState = frozenset[_Entry]

_PROBE_STATE_CAP = 200_000


def bounded_delay_probe(code: Code, t_max: int) -> ProbeResult:
    """Decide the deciphering delay by direct stream simulation.

    Runs the deterministic automaton over sets of (first word, position)
    alternatives and measures how long two different first code words can
    stay consistent with the same consumed stream.  The verdict is exact;
    `unknown` is returned only when the exact delay exceeds t_max, which
    cannot happen once t_max reaches safe_bound(code).  Because the set of
    surviving first words only shrinks along a run, unbounded ambiguity
    always shows up as a cycle among ambiguous states.
    """
    words = code.words
    if len(set(words)) != len(words):
        raise CodesError("delay probe needs pairwise distinct words")
    n = code.alphabet.size
    raw = [tuple(word) for word in words]

    def successor(state: _ProbeState, letter: int) -> _ProbeState:
        nxt: set[_Entry] = set()
        for tag, idx, offset in state:
            if raw[idx][offset] != letter:
                continue
            if offset + 1 == len(raw[idx]):
                nxt.update((tag, k, 0) for k in range(len(raw)))
            else:
                nxt.add((tag, idx, offset + 1))
        return frozenset(nxt)

    start: _ProbeState = frozenset((i, i, 0) for i in range(len(raw)))
    adjacency: dict[_ProbeState, list[_ProbeState]] = {}
    queue = [start]
    while queue:
        state = queue.pop()
        if state in adjacency:
            continue
        targets = []
        for letter in range(n):
            nxt = successor(state, letter)
            if nxt:
                targets.append(nxt)
        adjacency[state] = targets
        queue.extend(t for t in targets if t not in adjacency)
        if len(adjacency) > _PROBE_STATE_CAP:
            raise CodesError("delay probe state space exceeded the safety cap")

    def tags(state: _ProbeState) -> set[int]:
        return {entry[0] for entry in state}

    ambiguous = {s for s in adjacency if len(tags(s)) >= 2}
    sub = {s: [t for t in adjacency[s] if t in ambiguous] for s in ambiguous}
    looping = cyclic_nodes(sub)
    if looping:
        state = min(looping, key=sorted)
        first, second = sorted(tags(state))[:2]
        return ProbeResult("infinite", None, (words[first], words[second]))
    if not ambiguous:
        return ProbeResult("finite", 0, None)

    depth = {start: 0}
    deepest = start
    for state in topological_order(sub):
        if state not in depth:
            continue
        for nxt in sub[state]:
            if depth.get(nxt, -1) < depth[state] + 1:
                depth[nxt] = depth[state] + 1
                if depth[nxt] > depth[deepest]:
                    deepest = nxt
    delay = depth[deepest] + 1
    if delay > t_max:
        return ProbeResult("unknown", None, None)
    first, second = sorted(tags(deepest))[:2]
    return ProbeResult("finite", delay, (words[first], words[second]))

"""Construct witness codes for the lengths (2, 3, 3) at n = 2.

Three constructions, one per class boundary: the lexicographically
least prefix code, a uniquely decodable code that is not prefix, and a
uniquely decodable code whose deciphering delay is infinite.
"""

from udcodes import (
    anchored_prefix_code,
    canonical_prefix_code,
    classify,
    count_anchored_prefix_codes,
    infinite_delay_witness,
    ud_nonprefix_witness,
)

LENGTHS = (2, 3, 3)
N = 2

prefix = canonical_prefix_code(LENGTHS, N)
print("canonical prefix code:", ", ".join(prefix.texts()))
print("  classified:", classify(prefix))

family = count_anchored_prefix_codes(LENGTHS, N, 2, 3)
print(
    f"\nprefix codes containing both anchors "
    f"{family.anchor_a.text()} and {family.anchor_b.text()}: {family.count}"
)
anchored = anchored_prefix_code(LENGTHS, N, 2, 3)
print("  one of them:", ", ".join(anchored.texts()))

nonprefix = ud_nonprefix_witness(LENGTHS, N)
print("\nUD but not prefix:", ", ".join(nonprefix.texts()))
print("  classified:", classify(nonprefix))

code, spec = infinite_delay_witness(LENGTHS, N)
print(f"\nUD with infinite delay (construction case '{spec.case}'):", ", ".join(code.texts()))
print("  classified:", classify(code))

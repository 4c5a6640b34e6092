"""Count code classes for every built-in length profile.

For each profile the script reports the Kraft sum, the prefix-code
count from the stage recurrence, and the exhaustive census of the
prefix / finite-delay / uniquely-decodable classes at n = 2.
"""

from udcodes import BUILTIN_SUITE, census, closed_form_counts, count_prefix_codes, kraft_sum

N = 2
print(f"alphabet size {N}")
print(f"{'profile':>10} {'kraft':>6} {'total':>6} {'pr':>5} {'fd':>5} {'ud':>5}  closed form")
for profile in BUILTIN_SUITE:
    report = census(profile, N, mode="both")
    assert not report.discrepancies, report.discrepancies
    closed = closed_form_counts(profile, N)
    note = f"ud={closed.ud} pr={closed.pr}" if closed else "-"
    label = ",".join(str(v) for v in profile)
    print(
        f"{label:>10} {str(kraft_sum(profile, N)):>6} {report.total:>6} "
        f"{report.pr:>5} {report.fd:>5} {report.ud:>5}  {note}"
    )

print("\nthe prefix recurrence alone, for (2,3,3) at growing alphabet sizes:")
for n in range(2, 7):
    print(f"  n={n}: {count_prefix_codes((2, 3, 3), n).count}")

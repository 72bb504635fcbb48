"""Brute-force verification of the two reduction constructions.

The cycle reduction rests on two graph facts: the k^2-cycle maps onto the
(k+2)-cycle, and the k-step walk relation of a k^2-cycle contains a k-cycle
on every k-th vertex while staying loopless.  The clique reduction pp-defines
a 4-ary relation R, its diagonal projection F, and a pair-level graph Q; the
reports check the claimed descriptions of all three exhaustively, including
the unfolding of F- and Q-loops on the next-larger clique.
"""

from loopcond import report_to_json, verify_clique_claims, verify_cycle_reduction

for k in (3, 5):
    report = verify_cycle_reduction(k)
    print(f"cycle reduction, k={k}:")
    for check in report.checks:
        print(f"  {'PASS' if check.passed else 'FAIL'} {check.name}")

for n in (3, 4):
    report = verify_clique_claims(n)
    print(f"clique claims, n={n} (on K_{n} and K_{n + 1}):")
    for check in report.checks:
        extra = f"  witness={check.witness}" if check.witness is not None else ""
        print(f"  {'PASS' if check.passed else 'FAIL'} {check.name}{extra}")

print()
print("reports serialize to JSON for scripting:")
print(report_to_json(verify_cycle_reduction(3)))

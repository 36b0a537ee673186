"""Run the full claims registry and print the markdown verdict table.

Each claim pits a formula path against an independent oracle path; the
verdicts are a pure function of the selection, the size range, and the caps,
so two runs always produce the same report. Refutations carry counterexamples
that re-verify.
"""

from setgraphs import render_report, run_claims

MAX_N = 9

verdicts = run_claims("all", MAX_N)
print(render_report(verdicts, "markdown", max_n=MAX_N))

refuted = [v for v in verdicts if v.status == "REFUTED"]
print(f"{len(verdicts)} claims adjudicated, {len(refuted)} refuted:")
for v in refuted:
    ce = v.counterexample
    print(f"  {v.claim_id}: at n={ce['n']}, claimed {ce['expected']}, oracle found {ce['actual']}")

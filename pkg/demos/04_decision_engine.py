"""The decision engine over a small grid, with report details.

Exists comes with a verified witness and the rule that built it; NotExists
carries a re-validated certificate naming the criterion and every
intermediate quantity; Unknown is a first-class outcome.
"""

from gbflab import GbfType, decide, summarize_report

print(f"{'type':>10}  {'verdict':<11} detail")
for m, n in [(4, 5), (9, 3), (6, 3), (14, 1), (2 * 199, 7), (2 * 191, 11),
             (2 * 199 * 5, 3), (2 * 19 * 29, 11), (30, 1)]:
    v = decide(GbfType(m, n))
    if v.kind == "exists":
        detail = f"rule {v.rule}, witness verified"
    elif v.kind == "not_exists":
        detail = f"{v.report.criterion}: {summarize_report(v.report)}"
    else:
        detail = f"{len(v.attempts)} criteria examined, none conclusive"
    print(f"{{{m},{n}}}".rjust(10), f" {v.kind:<11}", detail)

print("\nfull certificate for {398,7}:")
rep = decide(GbfType(398, 7)).report
for key, value in rep.quantities.items():
    print(f"  {key} = {value}")
print("  excluded:", rep.excluded)

"""Critical-line zeros and the verdicts of the claims harness.

Scans ``Re zeta*(1/2 + it)`` for sign changes on ``[0, 30]``, reports the
smallest ``|zeta|`` found off the line, then evaluates every registered
identity and prints its verdict with the per-variant breakdown.
"""

from zetalab.claims import critical_zero_scan, offline_minimum, run_claims


def main():
    zeros = critical_zero_scan(0.0, 30.0, 0.1)
    print("zeros on the critical line:", ", ".join(f"{z:.9f}" for z in zeros))
    low, where = offline_minimum((0.3, 0.4, 0.6, 0.7), 0.0, 30.0, 0.1)
    print(f"smallest |zeta| off the line: {low:.3f} at s = {where}")
    print()
    for report in run_claims():
        subs = ", ".join(f"{k}={v}" for k, v in report.sub_verdicts.items())
        print(f"{report.claim:24} {report.verdict:13} {subs}")


if __name__ == "__main__":
    main()

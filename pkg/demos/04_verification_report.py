"""
A full verification report
==========================

Run every acceptance check at a small scale and print the one-line verdicts.
The same report comes out of ``bridgedisks verify``.
"""

from bridgedisks import build_layout, verify_suite

report = verify_suite(build_layout(2), max_weight=8, twist_depth=2, seed=0)
for check in report.to_json()["checks"]:
    print(check["id"], check["status"])
print("counts:", report.counts)
print("all passed:", report.passed)

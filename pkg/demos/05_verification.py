#!/usr/bin/env python3
"""Run the whole verification battery and print the reports.

Each report bundles the structural checks (graph invariants, equitable
partition, matchings or edge decomposition, block isomorphism) with the
spectral ones (second eigenvalue both ways, gap, cut ratio, isoperimetric
bracket) and records predicted vs observed for every line.
"""

import json

from altspectra import verify_family
from altspectra.cli import emit

for family, n in (("AG", 5), ("EAG", 4), ("CAG", 4)):
    report = verify_family(family, n, tol=1e-8, seed=42)
    print(f"=== {family}_{n}: overall {'PASS' if report.overall else 'FAIL'} ===")
    for check in report.checks:
        print(f"  {'ok ' if check.passed else 'BAD'} {check.name:<24} {check.ref}")
    print()

print("the same report as machine-readable JSON (EAG_4):")
report = verify_family("EAG", 4)
print(json.dumps(json.loads(emit(report.to_dict(), "json")), indent=2)[:800], "...")

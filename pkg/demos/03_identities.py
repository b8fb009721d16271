#!/usr/bin/env python3
"""The identity language, exhaustive verification, and variant adjudication.

Identities are plain text (`expr == expr`) over sequence terms with the
quantified variables e, r, n.  Verification scans the full grid
0 <= e <= E, 0 <= r <= 2^e, n_min <= n <= N exactly; a failure is reported
as the lexicographically smallest counterexample, never an exception.
"""

from sternlike import (catalog, catalog_entry, check_instance,
                       discrepancy_report, generic_corollary, make_spec,
                       parse_identity, preset, verify)
from sternlike.identities import bind_presets

print("== the catalog ==")
for entry in catalog():
    tag = f" [{entry.variant}]" if entry.variant else ""
    print(f"{entry.name:24s}{tag:16s} {entry.text}")

print()
print("== checking one instance by hand ==")
coons = catalog_entry("coons")
lhs, rhs, ok = check_instance(coons, e=2, r=3, n=1)
print(f"coons at (e=2, r=3, n=1): lhs={lhs}, rhs={rhs}, equal={ok}")

print()
print("== exhaustive verification ==")
verdict = verify(coons, e_max=8, n_max=64)
print(f"coons over e<=8, n<=64: holds={verdict.holds}, "
      f"checked={verdict.checked_count}")

print()
print("== a deliberately broken identity yields its smallest counterexample ==")
broken = bind_presets(parse_identity(
    "s(r)*s(2*n + 4) + s(2^e - r)*s(2*n + 3)"
    " == s(2^e*(n + 2) + r) + s(2^e*(n + 1) + r)"))
verdict = verify(broken, 4, 16)
print(f"holds={verdict.holds}, counterexample={verdict.counterexample}")

print()
print("== user-defined sequences work too ==")
spec = make_spec(3, -1, 2, 1, [0, 1], name="demo")
verdict = verify(generic_corollary(spec), e_max=5, n_max=32)
print(f"coefficient corollary for {spec.name}: holds={verdict.holds}, "
      f"checked={verdict.checked_count}")

print()
print("== adjudicating printed vs derived variants ==")
print(discrepancy_report(e_max=6, n_max=32).text())
print()
print("The failing lines above are exactly the printed corollary variants")
print("whose coefficient/argument pairing disagrees with direct substitution;")
print("rerun with any e_max/n_max to reproduce.")

#!/usr/bin/env python3
"""Generating-series relations, verified coefficient by coefficient.

S(X) and T(X) are the generating series of the stern and twisted presets.
Each named check expands both sides as truncated integer series and
compares every coefficient in the sound range; order bookkeeping is
tracked through each operation so no comparison ever reads past what an
operand actually determines.
"""

from sternlike import check_named, divide, preset, sequence_series

print("== the defining division behind bconj1 ==")
num = sequence_series(preset("twisted"), 3, 12)   # t(3), t(4), ...
den = sequence_series(preset("stern"), 0, 12)     # S(X)
u = divide(num, den)
print(f"numerator coefficients: {num.coeffs}")
print(f"S(X) coefficients:      {den.coeffs}")
print(f"quotient U(X):          {u.coeffs}  (all integers, by exact division)")

print()
print("== the six named checks ==")
for name, kwargs in [
    ("carlitz", dict(order=4096)),
    ("sum_s", dict(e_max=6, order=1024)),
    ("coons_lemma8", dict(e_max=10)),
    ("bconj1", dict(e_max=5, order=256)),
    ("bconj2", dict(e_max=5, order=256)),
    ("bconj3", dict(e_max=5, order=256)),
]:
    report = check_named(name, **kwargs)
    print(report.summary())
    for line in report.machine_lines()[:3]:
        print(f"    {line}")
    if len(report.machine_lines()) > 3:
        print(f"    ... {len(report.machine_lines()) - 3} more levels")

print()
print("== what sum_s asserts about negative exponents ==")
report = check_named("sum_s", e_max=4, order=256)
residues = report.artifacts["negative_exponent_residues"]
print("the bracket factor reaches down to X^(1 - 2^e), yet every negative")
print("exponent of the product cancels exactly:")
for e, res in residues.items():
    print(f"  e={e}: {len(res)} negative-exponent coefficients, "
          f"all zero: {not any(res)}")

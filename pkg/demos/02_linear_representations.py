#!/usr/bin/env python3
"""Compiling a sequence into its 2-regular linear representation.

The coefficient table (A(e, r), B(e, r)) expresses any subsequence along
2^e n + r as a fixed combination of v(n) and v(n+1); the two transition
matrices advance the state pair (v(k), v(k+1)) along the binary digits of
the index.  Either view evaluates a term in O(log n) exact steps.
"""

import time

from sternlike import (coeff_table, coeffs, eval_direct, eval_fast,
                       linear_representation, preset, recover_coefficients)

s = preset("stern")
t = preset("twisted")

print("== coefficient table for stern, levels 0..3 ==")
table = coeff_table(s, 3)
for e in range(4):
    row = [coeffs(table, e, r) for r in range(2**e + 1)]
    print(f"e={e}: {row}")

print()
print("== closed forms: stern's columns are themselves stern values ==")
for e in range(4):
    for r in range(2**e + 1):
        a_c, b_c = coeffs(table, e, r)
        assert (a_c, b_c) == (eval_direct(s, 2**e - r), eval_direct(s, r))
print("A(e, r) = s(2^e - r) and B(e, r) = s(r) for all e <= 3  [verified]")

print()
print("== the exported representation is self-contained ==")
rep = linear_representation(t)
print(rep.render())
print(f"replaying the digits of 11 through M0/M1: {rep.evaluate(11)} "
      f"(direct: {eval_direct(t, 11)})")

print()
print("== O(log n) evaluation at astronomically large indices ==")
n = 2**200 + 12345
start = time.perf_counter()
value = eval_fast(s, n)
elapsed = time.perf_counter() - start
print(f"s(2^200 + 12345) = {value}   [{elapsed*1000:.2f} ms]")

print()
print("== recovering coefficients from four sequence values ==")
print(f"stern  (e=2, r=1): {recover_coefficients(s, 2, 1, 1, 2)}  "
      f"(table says {coeffs(table, 2, 1)})")
print(f"twisted(e=1, r=1): {recover_coefficients(t, 1, 1, 1, 2)}")
try:
    recover_coefficients(preset("z3"), 1, 0, 3, 6)
except Exception as exc:
    print(f"z3 at x0=3, y0=6 is singular, as periodicity predicts: {exc}")

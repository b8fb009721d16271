#!/usr/bin/env python3
"""An independent oracle: counting Thue-Morse blocks the slow way.

The tm_complexity_shift preset claims that its recurrence values equal the
number of distinct length-(n+1) blocks in the Thue-Morse word.  Nothing in
the evaluator knows about words; this demo rebuilds the word from its
substitution, counts windows by brute force, and compares.
"""

from sternlike import (eval_direct, factor_complexity, preset,
                       thue_morse_prefix, verify_y_preset)

word = thue_morse_prefix(32)
print(f"thue-morse prefix: {''.join(str(b) for b in word)}")

print()
print("== window counting vs the recurrence ==")
big = thue_morse_prefix(1 << 16)
spec = preset("tm_complexity_shift")
print(" ell  distinct blocks  recurrence")
for ell in range(1, 11):
    print(f"{ell:4d}  {factor_complexity(big, ell):15d}  "
          f"{eval_direct(spec, ell - 1):10d}")

print()
print("== the full check, with saturation guard ==")
report = verify_y_preset(64)
print(report.summary())
print(f"mismatches: {len(report.mismatches)}, "
      f"unsaturated lengths: {len(report.unsaturated)}")

print()
print("== what saturation catches ==")
short = verify_y_preset(32, prefix_factor=2)
print(f"with a prefix of only {short.prefix_length} letters, "
      f"{len(short.unsaturated)} block lengths fail the doubling check:")
print(f"  {short.unsaturated[:12]} ...")

#!/usr/bin/env python3
"""B-file round trips and cross-checks against external term tables.

The b-file format is one `index value` pair per line.  Cross-checking
compares locally computed terms against such a table; the index shift
expresses alignment (tm_complexity_shift counts blocks of length n+1, so
its table is compared at shift +1).
"""

from pathlib import Path

from sternlike import crosscheck, parse_bfile, preset, write_bfile
from sternlike.tm_oracle import factor_complexity, thue_morse_prefix

print("== writing terms in b-file format ==")
text = write_bfile(preset("stern"), 0, 16)
print(text, end="")

print()
print("== parse / write round trip ==")
table = parse_bfile(text, source="in-memory")
assert text == "".join(f"{i} {v}\n" for i, v in table.records)
print(f"{len(table.records)} records survive byte-identically")

print()
print("== cross-check against the vendored reference table ==")
fixture = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "b002487_ref.txt"
report = crosscheck(preset("stern"), parse_bfile(fixture.read_text(), source=fixture.name))
print(report.summary())

print()
print("== an index shift aligns differently-offset tables ==")
word = thue_morse_prefix(1 << 16)
oracle_rows = "".join(f"{m} {factor_complexity(word, m)}\n" for m in range(1, 33))
oracle_table = parse_bfile(oracle_rows, source="block-count oracle")
report = crosscheck(preset("tm_complexity_shift"), oracle_table, index_shift=1)
print(report.summary())

print()
print("== mismatches are itemized, placeholders are skipped ==")
fake = parse_bfile("0 777\n1 1\n2 1\n3 99\n", source="fabricated")
report = crosscheck(preset("josephus"), fake)
print(report.summary())
print("(index 0 sits below the josephus preset's first meaningful index,")
print(" so the wrong value there is skipped, not flagged)")

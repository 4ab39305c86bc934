#!/usr/bin/env python3
"""List where E0-E1 and E2-E3 are nonzero up to N (default 400)."""

import sys

from twocolored.qseries import signed_difference_series

N = int(sys.argv[1]) if len(sys.argv) > 1 else 400
A = signed_difference_series("even_parts", N)
B = signed_difference_series("all_parts", N)
for n in range(1, N + 1):
    if A[n] or B[n]:
        print(f"n={n:5d}  E0-E1={A[n]:+d}  E2-E3={B[n]:+d}")

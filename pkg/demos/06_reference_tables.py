"""Recompute the two reference tables from scratch.

First: for sample primes p = 1 (mod 8), the order d_p of 2 mod p and its
2-adic valuation r_p (the valuation decides semiprimitivity, and unlike the
residue classes 3, 5, 7 mod 8 it varies for p = 1 mod 8).

Second: for the primes p = 7 (mod 8) up to 199, the quantities behind the
field-descent bound: s from the order of 2, the class number h of
Q(sqrt(-p)), and the least odd r with x^2 + p y^2 = 2^(r+2) solvable.
r always divides h here, and odd n below r/s are excluded for {2p^l, n}.
"""

from gbflab.cli import table_p7_rows, table_rp_rows

print("orders of 2 for primes p = 1 (mod 8)")
print(f"{'p':>7} {'d_p':>5} {'r_p':>4}")
for p, d, r in table_rp_rows():
    print(f"{p:>7} {d:>5} {r:>4}")

print("\nfield-descent data for primes p = 7 (mod 8)")
print(f"{'p':>5} {'s':>3} {'h':>4} {'r':>4}   excluded odd n (n < r/s)")
for p, s, h, r in table_p7_rows():
    excluded = [n for n in range(1, 14, 2) if n * s < r]
    print(f"{p:>5} {s:>3} {h:>4} {r:>4}   {excluded if excluded else '-'}")

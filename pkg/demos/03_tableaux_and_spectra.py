"""Shifted tableaux and the integer spectrum of the YJM squares.

Standard fillings of a shifted diagram carry a b-vector (column minus row per
entry) and the a-vector a_i = b_i (b_i + 1) / 2; the a-vectors are exactly the
joint eigenvalues of the squared YJM elements, one per tableau.
"""

from superspin import shiftedcomb as sc

shape = sc.StrictPartition((3, 1))
print("shape:", shape, " cells:", shape.cells())
for t in sc.standard_tableaux(shape):
    sv = sc.spectrum_vector(t)
    print(f"  tableau {t}:  b={sv.b}  a={sv.a}  admissible swaps={sc.admissible_transpositions(t)}")

print("\nswapping 3,4 in the row-filled tableau and back:")
t0 = sc.standard_tableaux(shape)[0]
t1 = sc.apply_transposition(t0, 3)
print("  ", t0, "->", t1, "->", sc.apply_transposition(t1, 3))

print("\nspectrum conditions over all shapes of n=6:")
r = sc.spectrum_condition_report(6)
print("  nonnegative integers starting 0,1:", r["condition1"])
print("  adjacent entries differ:", r["condition2"])
print("  swapped vectors realized:", r["condition4"])
print("  (d, d+1, d) exceptions observed:", r["condition3_exceptions"], "- all with d=0,")
print("  where the excluded-pattern argument degenerates (the third YJM square is 0).")

print("\nstrict = odd partition counting, n = 1..7:")
for n in range(1, 8):
    out = sc.odd_partition_count_check(n)
    print(f"  n={n}: strict={out['strict_count']} odd={out['odd_count']} "
          f"supercenter={out['supercenter_dim']} equal={out['all_equal']}")

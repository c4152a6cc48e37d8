"""Graded matrix algebras: M/Q classification and block decomposition.

There are two kinds of simple graded blocks: the full graded matrix algebra
on an (r, s)-space and the Q-type algebra of [[A, B], [B, A]] matrices.  The
decomposition engine cuts blocks with exact central idempotents; the tensor
product identities and the regular representations of the spin algebras are
the showcase inputs.
"""

from superspin import gradedstruct as gs
from superspin import seminormal as sn

print("classify the standard modules:")
print("  M(2,1):", gs.classify_module(gs.m_algebra(2, 1)))
print("  Q(2):  ", gs.classify_module(gs.q_algebra(2)))

print("\ngraded tensor product identities (block classification):")
adj = gs.tensor_formula_adjudication()
for name, got in adj["classifications"].items():
    print(f"  {name}: {got}")
print("  index formula adjudication:", adj["selected_variant"],
      "(printed:", adj["printed_formula_params"],
      "corrected:", adj["corrected_formula_params"], ")")

print("\nregular representation of the rank-4 spin algebra:")
report = sn.regular_decompose("A", 4)
for b in report.sorted_blocks():
    print(f"  {b.btype} params={b.params} dim={b.dimension} "
          f"partition={b.partition} spectra={b.spectrum}")
print("  total:", report.total_block_dim(), "= 4!")

print("\nClifford-extended regular representation at n=3 (dim 48):")
report = sn.regular_decompose("CA", 3)
for b in report.sorted_blocks():
    print(f"  {b.btype} params={b.params} dim={b.dimension} partition={b.partition}")

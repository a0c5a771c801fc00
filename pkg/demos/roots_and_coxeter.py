"""Affine roots of small ADE types and the Coxeter-number identity for translations."""

from levelzero.cartan import all_ade_data, datum, positive_roots_up_to, verify_coxeter_identity

d = datum("A", 2)
print(f"{d.type_label}: dual Coxeter number {d.dual_coxeter}, highest root {d.highest_root}")
for root, mult in positive_roots_up_to(d, 1):
    print(f"  {root.classify():9s} mult {mult}  coords {root.coords}")

for d in all_ade_data(8):
    ok = all(verify_coxeter_identity(d, i, d.alpha(j)).passed
                for i in d.finite_index_set for j in d.finite_index_set)
    print(f"{d.type_label:3s} identity holds on simple roots: {ok}")

r = verify_coxeter_identity(datum("D", 4), 2, datum("D", 4).finite_root((1, 2, 1, 1)))
print("D4, i=2, xi=highest root:", r.to_json())

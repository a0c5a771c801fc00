"""Exact action of U_q on tensor products of level-zero fundamental modules."""

from levelzero.qmodule import DeskModule, DrinfeldEngine, TensorForm, generate_submodule

M = DeskModule(2, (1,), band=4)
D = DrinfeldEngine(M, 1)
u = M.seed()
print("f_1 u =", M.f(1, u))
print("h_{1,1} u =", D.h(1, u), "   z u =", M.z(0, 1, u))
print("P_1 u =", D.imaginary_P(1, u), "  P_2 u zero:", D.imaginary_P(2, u).is_zero())

low = M.lowest_seed()
print("tilde P_{+1} on the lowest seed =", D.imaginary_P(1, low, tilde=True))

M2 = DeskModule(2, (1, 1), band=2)
F = TensorForm(M2)
v = M2.f_tilde(1, M2.seed())
print("(f~u, f~u) =", F(v, v), "  at q=0:", v.at_zero())

sub = generate_submodule(M2, M2.seed())
degrees, rows = sub.table()
print("graded dimensions of the cyclic submodule (* = band edge reached):")
for mu, row in rows:
    print(f"  {mu}", " ".join(f"{n}{'*' if t else ' '}" for n, t in row))

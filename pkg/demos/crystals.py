"""Level-zero fundamental crystals, the tensor rule and the bijection census."""

from levelzero import crystal as cr

B = cr.LevelZeroFundamental(2, 1)
BB = cr.TensorProductCrystal([B, B])
u = B.seed()
print("seed", u, "f_1 ->", B.f(1, u), "f_0 f_1 ->", B.f(0, B.f(1, u)))
print("f_1 on u (x) u:", BB.f(1, (u, u)))

g = cr.connected_component(BB, BB.seed(), 1)
print(f"component of the seed inside band 1: {len(g)} nodes, truncated={g.truncated}, "
      f"axiom violations={g.check_axioms()}")
print(g.to_dot("b2")[:300], "...")

census = cr.bijection_census(2, {1: 2}, 2, 2)
for mu in ((2,), (0,), (-2,)):
    print(mu, [census.counts.get((mu, deg), 0) for deg in range(2, -3, -1)])

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from levelzero import crystal as cr
from levelzero.qmodule import DeskModule, ModuleVector
from levelzero.qsymbolic import PartitionTuple, loop_variables, schur_product

B2 = cr.LevelZeroFundamental(2, 1)
BB = cr.TensorProductCrystal([B2, B2])


def test_fundamental_node_moves():
    assert B2.f(1, ((1,), 4)) == ((2,), 4)
    # f~_0 swaps n for 1 and lowers the z-degree, as f_0 does on the module
    assert B2.f(0, ((2,), 4)) == ((1,), 3)
    assert B2.e(0, ((1,), 3)) == ((2,), 4)
    assert B2.f(0, ((1,), 0)) is None
    B4 = cr.LevelZeroFundamental(4, 2)
    assert B4.f(2, ((1, 2), 0)) == ((1, 3), 0)
    assert B4.f(0, ((1, 4), 0)) is None
    assert B4.f(0, ((2, 4), 0)) == ((1, 2), -1)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 5) for k in range(1, n)])
def test_fundamental_matches_module_tables(n, k):
    """Every crystal edge is the q = 0 image of the corresponding module operator."""
    C = cr.LevelZeroFundamental(n, k)
    M = DeskModule(n, (k,), band=3)
    for b in C.nodes(2):
        for i in C.index_set:
            for op, mop in ((C.f, M.f_tilde), (C.e, M.e_tilde)):
                img = mop(i, ModuleVector.basis((b,))).at_zero()
                img = {x: c for x, c in img.items() if c}
                c = op(i, b)
                assert img == ({} if c is None else {(c,): 1})


def test_tensor_rule_golden():
    u = ((1,), 0)
    assert BB.f(1, (u, u)) == (((2,), 0), u)
    assert BB.e(1, (((2,), 0), ((2,), 0))) == (((2,), 0), u)
    opp = cr.TensorProductCrystal([B2, B2], orientation="opposite")
    assert opp.f(1, (u, u)) == (u, ((2,), 0))
    with pytest.raises(ValueError):
        cr.TensorProductCrystal([B2], orientation="sideways")


def test_tensor_rule_matches_module_at_q0():
    M = DeskModule(2, (1, 1), band=3)
    for b in M.basis_labels(2):
        for i in M.index_set:
            img = {x: c for x, c in M.f_tilde(i, ModuleVector.basis(b)).at_zero().items() if c}
            c = BB.f(i, b)
            assert img == ({} if c is None else {c: 1})


nodes3 = st.tuples(*[st.tuples(st.sampled_from(list(itertools.combinations(range(1, 4), 1))),
                               st.integers(-3, 3))] * 3)


@settings(max_examples=150, deadline=None)
@given(nodes3, st.integers(0, 2))
def test_tensor_axioms_property(b, i):
    C = cr.TensorProductCrystal([cr.LevelZeroFundamental(3, 1)] * 3)
    fb = C.f(i, b)
    assert C.phi(i, b) - C.eps(i, b) == C.hw(i, b)
    if fb is not None:
        assert C.e(i, fb) == b
        cl, deg = C.weight_key(b)
        cl2, deg2 = C.weight_key(fb)
        shift = -1 if i == 0 else 0
        assert deg2 == deg + shift
        assert C.hw(i, fb) == C.hw(i, b) - 2


def test_weyl_action_examples():
    assert cr.weyl_action(B2, (1,), ((1,), 7)) == ((2,), 7)
    b = (((1,), 0), ((2,), 0))
    assert BB.hw(1, b) == 0 and cr.reflect_node(BB, 1, b) == b
    for b in itertools.product(B2.nodes(1), repeat=2):
        for i in BB.index_set:
            assert cr.weyl_action(BB, (i, i), b) == b


def test_malformed_crystal_detected():
    class Broken(cr.LevelZeroFundamental):
        def f(self, i, b):
            return None

    with pytest.raises(cr.MalformedCrystal):
        cr.reflect_node(Broken(2, 1), 1, ((1,), 0))


def test_extremality_examples():
    assert cr.is_extremal(BB, BB.seed())[0]
    ok, witness = cr.is_extremal(BB, (((1,), 0), ((2,), 0)))
    assert not ok and witness is not None
    T = cr.level_zero_tensor(3, {1: 1, 2: 1})
    assert cr.is_extremal(T, T.seed())[0]


def test_connected_component_examples():
    g = cr.connected_component(B2, B2.seed(), 1)
    assert len(g) == 6 and g.truncated
    T = cr.level_zero_tensor(2, {1: 2})
    g0 = cr.connected_component(T, T.seed(), 0)
    assert sorted(T.weight_key(b)[0] for b in g0.nodes) == [(-2,), (0,), (2,)]
    outside = (((1,), 5), ((1,), 5))
    assert len(cr.connected_component(T, outside, 1)) == 0


def test_component_axioms_and_dot():
    T = cr.level_zero_tensor(3, {1: 1, 2: 1})
    g = cr.connected_component(T, T.seed(), 1)
    assert g.check_axioms() == []
    dot = g.to_dot("t")
    assert dot.startswith("digraph t {") and dot.count("->") == len(g.edges)
    assert "style=dashed" in dot


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braid_relations(n):
    for k in range(1, n):
        C = cr.LevelZeroFundamental(n, k)
        assert cr.braid_check(C, list(C.nodes(2)), n) == []
    T = cr.TensorProductCrystal([cr.LevelZeroFundamental(n, 1)] * 2)
    nodes = list(itertools.product(T.factors[0].nodes(1), T.factors[1].nodes(1)))
    assert cr.braid_check(T, nodes, n) == []


def test_census_band_zero_is_the_classical_string():
    c = cr.bijection_census(2, {1: 2}, 0, 0)
    assert c.counts == {((2,), 0): 1, ((0,), 0): 1, ((-2,), 0): 1}


def test_census_single_fundamental_has_one_vector_per_slot():
    c = cr.bijection_census(2, {1: 1}, 3, 4)
    assert set(c.counts.values()) == {1}
    assert {k[1] for k in c.counts} == set(range(-3, 4))


def test_census_counts_vectors_not_pairs():
    # s_{(1,1)}(z) (z1 z2)^{-1} u~ is u~ again, so the pair count overshoots
    shape = {1: 2}
    T = cr.level_zero_tensor(2, shape)
    u = T.seed()
    lowered = T.z(T.z(u, 0, -1), 1, -1)
    poly = schur_product(PartitionTuple({1: (1, 1)}), shape)
    (e, _), = poly.terms.items()
    assert T.z(T.z(lowered, 0, e[0]), 1, e[1]) == u
    c = cr.bijection_census(2, shape, 0, 1)
    assert c.counts[((2,), 0)] == 2 and c.independent


def test_census_matches_known_table():
    c = cr.bijection_census(2, {1: 2}, 3, 3)
    rows = {mu: [c.counts.get((mu, d), 0) for d in range(3, -4, -1)] for mu in ((2,), (0,), (-2,))}
    assert rows[(2,)] == [2, 3, 3, 4, 3, 3, 2]
    assert rows[(0,)] == [4, 5, 6, 7, 6, 5, 4]
    assert rows[(-2,)] == [2, 3, 3, 4, 3, 3, 2]
    payload = c.to_json()
    assert payload["independent"] and all(s["N"] == -s["degree"] for s in payload["slots"])

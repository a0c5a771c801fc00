import itertools
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from levelzero.qsymbolic import (Laurent, MultiLaurentZ, PartitionTuple, RatFunc, gauss_binomial, gauss_factorial,
                                 gauss_int, loop_variables, macdonald_pair, newton_transition, partition_tuples,
                                 partitions, power_sums_from, schur_poly, schur_product, tuple_in_lambda)
from oracles import constant_term_pair, gauss_int_sym, multi_to_sympy, q, same, schur_bialternant, sym, zsyms

laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(Laurent)
nonzero = laurents.filter(lambda x: not x.is_zero())


@st.composite
def ratfuncs(draw):
    return RatFunc(draw(laurents), draw(nonzero))


# ------------------------------------------------------------ scalar arithmetic

@given(laurents, laurents)
def test_laurent_ring_matches_sympy(a, b):
    assert same(a + b, sym(a) + sym(b))
    assert same(a * b, sym(a) * sym(b))
    assert same(a - b, sym(a) - sym(b))


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_ratfunc_field_matches_sympy(a, b):
    assert same(a + b, sym(a) + sym(b))
    assert same(a * b, sym(a) * sym(b))
    if not b.is_zero():
        assert same(a / b, sym(a) / sym(b))


@settings(max_examples=60, deadline=None)
@given(ratfuncs())
def test_bar_is_q_inversion(a):
    assert same(a.bar(), sym(a).subs(q, 1 / q))
    assert a.bar().bar() == a


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_ratfunc_normal_form_is_canonical(a, b):
    # equal values have equal representations
    lhs, rhs = (a + b) * b, a * b + b * b
    assert lhs == rhs and hash(lhs) == hash(rhs)


def test_value_at_zero():
    x = RatFunc(Laurent({1: 1, 0: 2}), Laurent({0: 1, 2: 3}))
    assert x.regular_at_zero() and x.at_zero() == 2
    assert not RatFunc(Laurent.monomial(-1)).regular_at_zero()
    assert RatFunc(Laurent({1: 2, 3: -1})).in_q_integral()
    assert not RatFunc(Laurent({0: 1, 1: 1})).in_q_integral()


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


# ---------------------------------------------------------------- q-integers

def test_gauss_examples():
    assert gauss_int(2) == Laurent({1: 1, -1: 1})
    assert gauss_factorial(0) == Laurent(1)
    assert gauss_int(3) == Laurent({2: 1, 0: 1, -2: 1})


@pytest.mark.parametrize("n", range(0, 7))
def test_gauss_int_oracle(n):
    assert same(gauss_int(n), gauss_int_sym(n))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(6) for k in range(n + 1)])
def test_gauss_binomial_is_factorial_ratio(n, k):
    expected = RatFunc(gauss_factorial(n)) / RatFunc(gauss_factorial(k) * gauss_factorial(n - k))
    assert RatFunc(gauss_binomial(n, k)) == expected


# ------------------------------------------------------------- partitions

@pytest.mark.parametrize("n", range(0, 9))
def test_partition_counts(n):
    got = list(partitions(n))
    assert len(got) == sp.functions.combinatorial.numbers.partition(n)
    assert len(set(got)) == len(got)


def test_tuple_membership():
    assert tuple_in_lambda(PartitionTuple({1: (3, 1)}), {1: 2})
    assert not tuple_in_lambda(PartitionTuple({1: (1, 1, 1)}), {1: 2})
    assert tuple_in_lambda(PartitionTuple(), {1: 2})


def test_c0_round_trip():
    c0 = PartitionTuple({1: (3, 1, 1), 2: (2,)})
    assert PartitionTuple.from_c0(c0.to_c0()) == c0
    assert c0.degree() == 7


def test_bad_partition_rejected():
    with pytest.raises(ValueError):
        PartitionTuple({1: (1, 2)})


# ----------------------------------------------------------------- Schur

def test_schur_examples():
    v = ("a", "b")
    assert schur_poly((1, 1), v) == MultiLaurentZ(v, {(1, 1): 1})
    assert schur_poly((2,), v) == MultiLaurentZ(v, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur_poly((1, 1, 1), v).is_zero()


@pytest.mark.parametrize("lam", [p for n in range(1, 5) for p in partitions(n, max_len=3)])
def test_schur_jacobi_trudi_equals_bialternant(lam):
    zs = zsyms(3)
    got = multi_to_sympy(schur_poly(lam, ("x", "y", "w")), zs)
    assert sp.expand(got - schur_bialternant(lam, zs)) == 0


def test_schur_product_examples():
    shape = {1: 2}
    assert schur_product(PartitionTuple(), shape) == MultiLaurentZ.one(loop_variables(shape))
    got = schur_product(PartitionTuple({1: (1,)}), shape, sign=-1)
    assert got == MultiLaurentZ(loop_variables(shape), {(-1, 0): 1, (0, -1): 1})
    assert schur_product(PartitionTuple({1: (1, 1, 1)}), shape).is_zero()


def test_schur_product_multiplies_blocks():
    shape = {1: 1, 2: 2}
    f = schur_product(PartitionTuple({1: (2,), 2: (1, 1)}), shape)
    zs = zsyms(3)
    assert multi_to_sympy(f, zs) == sp.expand(zs[0] ** 2 * zs[1] * zs[2])


# ------------------------------------------------------- constant-term pairing

def test_macdonald_examples():
    shape = {1: 2}
    s1 = schur_product(PartitionTuple({1: (1,)}), shape)
    s2 = schur_product(PartitionTuple({1: (2,)}), shape)
    one = MultiLaurentZ.one(loop_variables(shape))
    assert macdonald_pair(s1, s1, shape) == RatFunc(1)
    assert macdonald_pair(s1, s2, shape) == RatFunc(0)
    assert macdonald_pair(one, one, shape) == RatFunc(1)


CT_CASES = [({1: 2}, (1,), (1,)), ({1: 2}, (2,), (1, 1)), ({1: 3}, (2, 1), (2, 1)), ({1: 2}, (), (2,)),
            ({1: 1, 2: 2}, (1,), (1,))]


@pytest.mark.parametrize("shape,lam,mu", CT_CASES)
def test_macdonald_pair_against_brute_expansion(shape, lam, mu):
    i0 = min(shape)
    f = schur_product(PartitionTuple({i0: lam}), shape)
    g = schur_product(PartitionTuple({i0: mu}), shape)
    zs = zsyms(sum(shape.values()))
    blocks, k = [], 0
    for i in sorted(shape):
        blocks.append(zs[k:k + shape[i]])
        k += shape[i]
    expected = constant_term_pair(multi_to_sympy(f, zs), multi_to_sympy(g, zs), blocks)
    assert same(macdonald_pair(f, g, shape), expected)


def test_macdonald_pair_rejects_mismatched_variables():
    f = MultiLaurentZ.one(loop_variables({1: 2}))
    with pytest.raises(ValueError):
        macdonald_pair(f, f, {1: 3})


@pytest.mark.parametrize("shape", [{1: 1}, {1: 2}, {1: 3}, {1: 1, 2: 1}])
def test_schur_basis_orthonormal(shape):
    tuples = [c for d in range(4) for c in partition_tuples(shape, d)]
    polys = [schur_product(c, shape) for c in tuples]
    for a, f in enumerate(polys):
        for b, g in enumerate(polys):
            assert macdonald_pair(f, g, shape) == RatFunc(1 if a == b else 0)


# ---------------------------------------------------------------- Newton

def test_newton_examples():
    elem, comp = newton_transition(2)
    assert elem[1] == {(1,): 1}
    assert elem[2] == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
    assert comp[2] == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}


@pytest.mark.parametrize("k", range(1, 6))
def test_newton_against_symmetric_functions(k):
    xs = sp.symbols("x1:5")
    p = {r: sum(x**r for x in xs) for r in range(1, k + 1)}
    elem, comp = newton_transition(k)

    def evaluate(poly):
        return sp.expand(sum(sp.Rational(c.numerator, c.denominator) * sp.Mul(*[p[r] for r in mu])
                             for mu, c in poly.items()))
    e_k = sum(sp.Mul(*c) for c in itertools.combinations(xs, k))
    h_k = sum(sp.Mul(*c) for c in itertools.combinations_with_replacement(xs, k))
    assert evaluate(elem[k]) == sp.expand(e_k)
    assert evaluate(comp[k]) == sp.expand(h_k)


@pytest.mark.parametrize("family", ["e", "h"])
def test_power_sum_inversion_round_trip(family):
    xs = sp.symbols("x1:4")
    k = 4
    gens = {}
    for r in range(1, k + 1):
        combos = (itertools.combinations if family == "e"
                  else itertools.combinations_with_replacement)(xs, r)
        gens[r] = sum(sp.Mul(*c) for c in combos)
    out = power_sums_from(family, k)
    for n in range(1, k + 1):
        val = sum(sp.Rational(c.numerator, c.denominator) * sp.Mul(*[gens[r] for r in mu]) for mu, c in out[n].items())
        assert sp.expand(val - sum(x**n for x in xs)) == 0

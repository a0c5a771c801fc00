import json
import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from levelzero.cartan import (DatumMismatch, all_ade_data, bilinear_form, datum, lemma_inversion_set, pairing,
                              positive_roots_up_to, random_finite_root_vector, verify_coxeter_identity)

# Coxeter numbers of the finite ADE types (standard tables)
COXETER = {("A", n): n + 1 for n in range(1, 9)}
COXETER.update({("D", n): 2 * n - 2 for n in range(4, 9)})
COXETER.update({("E", 6): 12, ("E", 7): 18, ("E", 8): 30})
POSITIVE_ROOTS = {("A", n): n * (n + 1) // 2 for n in range(1, 9)}
POSITIVE_ROOTS.update({("D", n): n * (n - 1) for n in range(4, 9)})
POSITIVE_ROOTS.update({("E", 6): 36, ("E", 7): 63, ("E", 8): 120})
DETERMINANT = {"A": lambda n: n + 1, "D": lambda n: 4, "E": lambda n: 9 - n}


@pytest.mark.parametrize("d", all_ade_data(8), ids=lambda d: d.type_label)
def test_datum_tables(d):
    key = (d.family, d.rank)
    assert d.coxeter == d.dual_coxeter == COXETER[key]
    assert len(d.finite_positive_roots) == POSITIVE_ROOTS[key]
    assert sp.Matrix(d.finite_cartan).det() == DETERMINANT[d.family](d.rank)
    # the affine matrix is singular with kernel spanned by the marks
    a = sp.Matrix(d.cartan_matrix)
    assert a.det() == 0
    assert a * sp.Matrix(d.marks) == sp.zeros(d.rank + 1, 1)


def test_unknown_family():
    with pytest.raises(ValueError):
        datum("G", 2)


def test_pairing_examples():
    d = datum("A", 1)
    assert pairing(d.coroot(1), d.alpha(1)) == 2
    assert pairing(d.central, d.Lambda(0)) == 1
    assert pairing(d.fund_coweight(1), d.delta) == 0


def test_bilinear_examples():
    d = datum("A", 1)
    a1 = d.alpha(1).to_weight()
    assert bilinear_form(a1, a1) == 2
    assert bilinear_form(d.delta, d.Lambda(0)) == 1
    assert bilinear_form(d.delta, d.delta) == 0


def test_datum_mismatch():
    with pytest.raises(DatumMismatch):
        pairing(datum("A", 1).coroot(1), datum("A", 2).alpha(1))


@pytest.mark.parametrize("d", [datum("A", 3), datum("D", 5), datum("E", 8)], ids=lambda d: d.type_label)
def test_root_and_weight_forms_agree(d):
    rng = random.Random(7)
    for _ in range(25):
        a, b = random_finite_root_vector(d, rng), random_finite_root_vector(d, rng)
        a = a + d.null_root() * rng.randint(-2, 2)
        assert bilinear_form(a, b) == bilinear_form(a.to_weight(), b.to_weight())


@pytest.mark.parametrize("d", all_ade_data(8), ids=lambda d: d.type_label)
def test_pairing_with_coroots_is_form_with_roots(d):
    for i in d.index_set:
        for j in d.index_set:
            assert pairing(d.coroot(i), d.alpha(j)) == bilinear_form(d.alpha(i), d.alpha(j)) == d.cartan_matrix[i][j]


def test_positive_roots_examples():
    d = datum("A", 1)
    got = [(r.coords, m) for r, m in positive_roots_up_to(d, 1)]
    # alpha_1, delta - alpha_1, delta, delta + alpha_1 (coords over alpha_0, alpha_1)
    assert got == [((0, 1), 1), ((1, 0), 1), ((1, 1), 1), ((1, 2), 1)]
    assert len(positive_roots_up_to(datum("A", 2), 0)) == 3
    assert all(r.delta_degree == 0 for r, _ in positive_roots_up_to(datum("E", 6), 0))


def test_positive_roots_multiplicity_and_classes():
    d = datum("D", 4)
    roots = positive_roots_up_to(d, 2)
    imag = [(r, m) for r, m in roots if r.classify() == "imaginary"]
    assert [m for _, m in imag] == [4, 4]
    assert all(r.is_positive_root() for r, _ in roots)


def test_root_json_schema():
    d = datum("A", 2)
    r = d.finite_root((1, 1), 1)
    payload = json.loads(json.dumps(r.to_json()))
    assert payload["type"] == "A" and payload["rank"] == 2
    assert all(len(c) == 3 for c in payload["coeffs"])
    assert ["alpha_0", 1, 1] in payload["coeffs"]


def test_coxeter_examples():
    d = datum("A", 1)
    r = verify_coxeter_identity(d, 1, d.alpha(1))
    assert r.passed and r.lhs == r.rhs == 2 and r.inversion_count == 1
    d2 = datum("A", 2)
    assert verify_coxeter_identity(d2, 1, d2.finite_root((1, 1))).passed
    zero = verify_coxeter_identity(d2, 2, d2.finite_root((0, 0)))
    assert zero.passed and zero.lhs == 0


def test_coxeter_rejects_bad_input():
    d = datum("A", 2)
    with pytest.raises(ValueError):
        verify_coxeter_identity(d, 0, d.alpha(1))
    with pytest.raises(ValueError):
        verify_coxeter_identity(d, 1, d.Lambda(0))


def test_inversion_set_size_is_length_of_translation():
    # |Inv(t_{varpi_i^vee})| = sum over positive roots of <varpi_i^vee, beta>
    for d in all_ade_data(6):
        for i in d.finite_index_set:
            assert len(lemma_inversion_set(d, i)) == sum(b[i - 1] for b in d.finite_positive_roots)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(all_ade_data(7)), st.integers(0, 10**6))
def test_coxeter_identity_property(d, seed):
    rng = random.Random(seed)
    xi = random_finite_root_vector(d, rng, bound=9)
    for i in d.finite_index_set:
        r = verify_coxeter_identity(d, i, xi)
        assert r.passed, r.to_json()
        assert r.lhs == d.dual_coxeter * Fraction(xi.coords[i] - xi.coords[0] * d.highest_root[i - 1])

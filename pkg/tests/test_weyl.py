import itertools

import pytest

from levelzero.cartan import CoweightVector, all_ade_data, datum
from levelzero.weyl import (ConvexOrderSequence, ExtendedWeylElement, InvalidPeriodWord, WeylWord, act_on_weight,
                            beta_sequence, braid_relation_check, factor_translation, inversion_set, period_word,
                            validate_period_word)

A1, A2 = datum("A", 1), datum("A", 2)


def test_action_examples():
    assert act_on_weight(WeylWord(A1, (0,)), A1.Lambda(0)) == A1.Lambda(0) - A1.alpha(0).to_weight()
    t = ExtendedWeylElement.translation(A1.fund_coweight(1))
    assert t.act(A1.alpha(1)) == A1.alpha(1) - A1.null_root()
    for d in (A1, A2, datum("D", 4)):
        for w in (WeylWord(d, (0, 1, 0)), ExtendedWeylElement.translation(d.fund_coweight(1))):
            assert w.act(d.delta) == d.delta


def test_inversion_set_examples():
    # convention: {alpha_{i_m}, s_{i_m}(alpha_{i_{m-1}}), ...}, the roots sent negative by w
    got = inversion_set(WeylWord(A1, (0, 1)))
    assert set(got) == {A1.alpha(1), A1.null_root() + A1.alpha(1)}
    assert inversion_set(WeylWord(A1, ())) == []
    assert not WeylWord(A1, (1, 1)).is_reduced


@pytest.mark.parametrize("d", [A1, A2, datum("A", 3), datum("D", 4)], ids=lambda d: d.type_label)
def test_inversions_are_sent_negative(d):
    for word in itertools.product(d.index_set, repeat=3):
        w = WeylWord(d, word)
        if not w.is_reduced:
            continue
        for r in inversion_set(w):
            assert r.is_positive_root()
            assert not w.act(r).is_positive_root()


def test_factor_translation_examples():
    f = factor_translation(A1.fund_coweight(1))
    assert f.tau == (1, 0) and len(f.word) == 1
    f = factor_translation(A2.fund_coweight(1))
    assert f.tau in ((1, 2, 0), (2, 0, 1)) and len(f.word) == 2
    zero = factor_translation(CoweightVector(A2, [0, 0]))
    assert len(zero.word) == 0 and zero.element == ExtendedWeylElement.identity(A2)


@pytest.mark.parametrize("d", all_ade_data(6), ids=lambda d: d.type_label)
def test_translation_length_matches_inversion_count(d):
    for i in d.finite_index_set:
        f = factor_translation(d.fund_coweight(i))
        # l(t_xi) = sum_{beta > 0} <xi, beta>
        assert len(f.word) == sum(b[i - 1] for b in d.finite_positive_roots)


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        factor_translation(CoweightVector(A2, [1, -1]))


def test_group_laws():
    d = A2
    x = ExtendedWeylElement.translation(d.fund_coweight(1))
    y = ExtendedWeylElement.simple_reflection(d, 2) * ExtendedWeylElement.simple_reflection(d, 0)
    e = ExtendedWeylElement.identity(d)
    assert x * x.inverse() == e and y * y.inverse() == e
    assert (x * y).inverse() == y.inverse() * x.inverse()
    t2 = ExtendedWeylElement.translation(d.fund_coweight(1) + d.fund_coweight(2))
    assert ExtendedWeylElement.translation(d.fund_coweight(1)) * ExtendedWeylElement.translation(d.fund_coweight(2)) == t2
    for i in d.index_set:
        s = ExtendedWeylElement.simple_reflection(d, i)
        assert s * s == e
        for j in d.index_set:
            assert s.act(d.Lambda(j)) == WeylWord(d, (i,)).act(d.Lambda(j))


def test_beta_sequence_examples():
    seq = beta_sequence(A1, (-1, 3))
    delta, a1 = A1.null_root(), A1.alpha(1)
    assert seq == [delta + a1, a1, delta - a1, delta * 2 - a1, delta * 3 - a1]


def test_bad_period_word_rejected():
    with pytest.raises(InvalidPeriodWord):
        beta_sequence(A1, (-3, 3), word=(1, 1))


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_convex_order_window(rank):
    d = datum("A", rank)
    seq = ConvexOrderSequence(d, period_word(d))
    assert validate_period_word(seq, -200, 200).passed
    # period is the length of t_{2 rho^vee}-type element: every positive real root of degree < 1 appears once
    roots = seq.window(1, seq.period)
    assert len(set(roots)) == seq.period


def test_braid_relation_examples():
    assert braid_relation_check(A2).passed
    r = braid_relation_check(A1)
    assert r.skipped == [[0, 1]] and not r.checked
    d4 = braid_relation_check(datum("D", 4))
    assert d4.passed and [1, 3] in d4.checked

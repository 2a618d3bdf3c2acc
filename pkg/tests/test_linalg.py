"""Exact linear algebra against independent oracles."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plumbinv.errors import InputError
from plumbinv.graph import intersection_matrix
from plumbinv.linalg import det_bareiss, is_negative_definite, \
    leading_principal_minors, mat_mul, neg_inverse, smith_normal_form, \
    solve_exact

from conftest import det_permutation, inverse_adjugate, random_tree

small_matrix = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-6, 6), min_size=n, max_size=n),
        min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_det_matches_permutation_expansion(m):
    assert det_bareiss(m) == det_permutation(m)


@settings(max_examples=40, deadline=None)
@given(small_matrix)
def test_leading_minors_match_permutation_expansion(m):
    minors = leading_principal_minors(m)
    for k, mk in enumerate(minors, start=1):
        block = [row[:k] for row in m[:k]]
        assert mk == det_permutation(block)


def test_det_trivia():
    assert det_bareiss([]) == 1
    assert det_bareiss([[5]]) == 5
    assert det_bareiss([[1, 2], [2, 4]]) == 0


def test_det_known_graphs(graphs):
    # A_{n-1} chain has det (-1)^n * n; E8 is unimodular
    assert det_bareiss(intersection_matrix(graphs["a3"])) == -4
    assert det_bareiss(intersection_matrix(graphs["e8"])) == 1
    assert det_bareiss(intersection_matrix(graphs["cusp"])) == -1


def test_negative_definite_examples(graphs):
    for name in ("a1", "a3", "star", "cusp", "d4", "e8"):
        assert is_negative_definite(intersection_matrix(graphs[name]))
    assert not is_negative_definite([[0]])
    assert not is_negative_definite([[1]])
    assert not is_negative_definite([[-2, 1], [1, 0]])


def test_negative_definite_rejects_asymmetric():
    with pytest.raises(InputError):
        is_negative_definite([[-1, 2], [0, -1]])


def test_solve_exact_random_trees():
    rng = random.Random(7)
    for _ in range(20):
        g = random_tree(rng, rng.randrange(2, 7))
        m = intersection_matrix(g)
        if det_permutation(m) == 0:
            continue
        b = [Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
             for _ in range(g.n)]
        x = solve_exact(m, b)
        for i in range(g.n):
            assert sum(m[i][j] * x[j] for j in range(g.n)) == b[i]


def test_solve_exact_errors():
    with pytest.raises(InputError):
        solve_exact([[1, 1], [1, 1]], [Fraction(1), Fraction(0)])
    with pytest.raises(InputError):
        solve_exact([[1]], [Fraction(1), Fraction(2)])


def test_neg_inverse_matches_adjugate(graphs):
    for name in ("a3", "cusp", "d4"):
        m = intersection_matrix(graphs[name])
        expect = inverse_adjugate(m)
        got = neg_inverse(m)
        for i in range(len(m)):
            for j in range(len(m)):
                assert got[i][j] == -expect[i][j]


def test_neg_inverse_requires_negative_definite():
    with pytest.raises(InputError):
        neg_inverse([[1]])


@settings(max_examples=40, deadline=None)
@given(small_matrix)
def test_smith_normal_form_properties(m):
    snf = smith_normal_form(m)
    n = len(m)
    # divisibility chain and the defining product identity are re-verified
    # inside smith_normal_form; re-check the product here independently
    umv = mat_mul(mat_mul([list(r) for r in snf.u], m),
                  [list(r) for r in snf.v])
    for i in range(n):
        for j in range(n):
            assert umv[i][j] == (snf.d[i] if i == j else 0)
    assert abs(det_permutation([list(r) for r in snf.u])) == 1
    assert abs(det_permutation([list(r) for r in snf.v])) == 1
    assert snf.group_order() == abs(det_permutation(m)) or 0 in snf.d


def test_smith_normal_form_a3(graphs):
    snf = smith_normal_form(intersection_matrix(graphs["a3"]))
    assert snf.d == (1, 1, 4)
    assert snf.nontrivial_factors == (4,)


def test_smith_normal_form_d4(graphs):
    snf = smith_normal_form(intersection_matrix(graphs["d4"]))
    assert snf.d == (1, 1, 2, 2)


def test_smith_normal_form_unimodular(graphs):
    snf = smith_normal_form(intersection_matrix(graphs["e8"]))
    assert snf.d == (1,) * 8
    assert snf.nontrivial_factors == ()

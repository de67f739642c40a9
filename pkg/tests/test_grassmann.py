import itertools
from math import comb

import pytest
import sympy

from multalg.grassmann import (
    DivisorData,
    expected_point_count,
    gaussian_binomial,
    grassmann_multiplicity,
    grassmann_presentation,
    product_hilbert,
)
from multalg.groebner import hilbert_series
from multalg.series import UniPoly


def count_subspaces_brute(n: int, k: int, q: int) -> int:
    """Count k-dimensional subspaces of F_q^n by enumerating spans.

    Every k-tuple of vectors is tried; the span is materialized as the
    set of all q^k linear combinations and kept only when it has full
    size.  Distinct subspaces are collected as frozensets of vectors, so
    the count owes nothing to any product formula.
    """
    vectors = list(itertools.product(range(q), repeat=n))
    spans = set()
    for rows in itertools.product(vectors, repeat=k):
        span = set()
        for coeffs in itertools.product(range(q), repeat=k):
            v = tuple(
                sum(c * r[i] for c, r in zip(coeffs, rows)) % q for i in range(n)
            )
            span.add(v)
        if len(span) == q**k:
            spans.add(frozenset(span))
    return len(spans)


# ------------------------------------------------------------- gaussians


def test_gaussian_small_values():
    assert gaussian_binomial(1, 0) == UniPoly([1])
    assert gaussian_binomial(2, 1) == UniPoly([1, 1])
    assert gaussian_binomial(4, 2) == UniPoly([1, 1, 2, 1, 1])
    assert gaussian_binomial(4, 1) == UniPoly([1, 1, 1, 1])


def test_gaussian_counts_subspaces_over_finite_fields():
    cases = [(n, k) for n in range(1, 4) for k in range(0, n + 1)]
    cases += [(4, 1), (4, 2), (4, 3)]
    for n, k in cases:
        poly = gaussian_binomial(n, k)
        assert poly(2) == count_subspaces_brute(n, k, 2)
    for n in range(1, 4):
        for k in range(0, n + 1):
            assert gaussian_binomial(n, k)(3) == count_subspaces_brute(n, k, 3)


def test_gaussian_pascal_recurrence():
    for n in range(1, 9):
        for k in range(1, n):
            left = gaussian_binomial(n, k)
            shifted = UniPoly([0] * k + list(gaussian_binomial(n - 1, k).coeffs))
            assert left == gaussian_binomial(n - 1, k - 1) + shifted


def test_gaussian_shape():
    for n in range(0, 9):
        for k in range(0, n + 1):
            g = gaussian_binomial(n, k)
            assert g == gaussian_binomial(n, n - k)
            assert g.degree == k * (n - k)
            assert g(1) == comb(n, k)
            assert g.is_palindromic() and g.is_monic_top()
            assert all(c > 0 for c in g.coeffs)


def test_gaussian_rejects_bad_input():
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3)
    with pytest.raises(ValueError):
        gaussian_binomial(2, -1)


# ---------------------------------------------------------- presentation


def as_sympy(p, syms):
    expr = sympy.Integer(0)
    for exps, coeff in p.terms.items():
        term = sympy.Rational(coeff)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return expr


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (4, 2), (5, 2), (5, 3)])
def test_presentation_relations_are_product_coefficients(n, k):
    ring = grassmann_presentation(n, k)
    x = sympy.Symbol("x")
    syms = [sympy.Symbol(v) for v in ring.variables]
    ps = syms[:k]
    qs = syms[k:]
    P = x**k + sum(p * x ** (k - 1 - i) for i, p in enumerate(ps))
    Q = x ** (n - k) + sum(q * x ** (n - k - 1 - j) for j, q in enumerate(qs))
    product = sympy.expand(P * Q - x**n)
    # relation of weighted degree d is the coefficient of x^(n-d)
    assert len(ring.relations) == n
    for d, rel in enumerate(ring.relations, start=1):
        expected = product.coeff(x, n - d)
        assert sympy.expand(as_sympy(rel, syms) - expected) == 0


def test_presentation_weights_and_names():
    ring = grassmann_presentation(4, 2)
    assert ring.variables == ("p1", "p2", "q1", "q2")
    assert ring.weights == (1, 2, 1, 2)
    ring = grassmann_presentation(3, 1)
    assert ring.variables == ("p1", "q1", "q2")
    assert ring.weights == (1, 1, 2)


def test_presentation_rejects_bad_input():
    with pytest.raises(ValueError):
        grassmann_presentation(2, 0)
    with pytest.raises(ValueError):
        grassmann_presentation(2, 2)


def test_hilbert_series_equals_gaussian():
    for n in range(2, 6):
        for k in range(1, n):
            ring = grassmann_presentation(n, k)
            series = hilbert_series(ring.ideal(), ring.grading())
            assert series.is_polynomial()
            assert series.as_polynomial() == gaussian_binomial(n, k)


# ---------------------------------------------------------- divisor data


def test_divisor_data_validation():
    d = DivisorData(3, (1, 0))
    assert d.m == (1, 0)
    with pytest.raises(ValueError):
        DivisorData(3, (1,))
    with pytest.raises(ValueError):
        DivisorData(3, (1, -1))
    with pytest.raises(ValueError):
        DivisorData(0, ())


def test_grassmann_multiplicity_products():
    assert grassmann_multiplicity(DivisorData(2, (1,))) == UniPoly([1, 1])
    assert grassmann_multiplicity(DivisorData(2, (2,))) == UniPoly([1, 2, 1])
    two = gaussian_binomial(3, 1) * gaussian_binomial(3, 2)
    assert grassmann_multiplicity(DivisorData(3, (1, 1))) == two
    assert grassmann_multiplicity(DivisorData(4, (0, 0, 0))) == UniPoly([1])


def test_expected_point_count_is_value_at_one():
    for d in [
        DivisorData(2, (3,)),
        DivisorData(3, (1, 2)),
        DivisorData(4, (1, 0, 2)),
    ]:
        assert expected_point_count(d) == grassmann_multiplicity(d)(1)


def test_product_hilbert_multiplies_factors():
    r1 = grassmann_presentation(2, 1)
    r2 = grassmann_presentation(3, 1)
    combined = product_hilbert([r1, r2])
    assert combined.is_polynomial()
    expected = gaussian_binomial(2, 1) * gaussian_binomial(3, 1)
    assert combined.as_polynomial() == expected
    assert product_hilbert([]).as_polynomial() == UniPoly([1])


def test_divisor_multiplicity_matches_tensor_hilbert():
    # three reduced points on a rank-2 divisor: algebra is a triple tensor
    d = DivisorData(2, (3,))
    rings = [grassmann_presentation(2, 1)] * 3
    assert product_hilbert(rings).as_polynomial() == grassmann_multiplicity(d)

"""Groebner engine tests.

The reduced-basis computation is cross-checked against sympy's
independent implementation on randomized unit-weight ideals, and the
normal-form operator is pinned by its two defining invariants
(idempotence and linearity).  Everything runs over exact rationals.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import sympy

from multalg.groebner import (
    CertificationError,
    DEFAULT_LIMITS,
    GroebnerBasis,
    Ideal,
    NotZeroDimensional,
    ReductionLimits,
    ResourceLimitExceeded,
    buchberger,
    certify,
    clear_cache,
    groebner_basis,
    hilbert_series,
    ideal_equal,
    ideal_intersection,
    ideal_product,
    is_zero_dimensional,
    krull_dimension,
    normal_form,
    s_polynomial,
    standard_monomials,
)
from multalg.orders import EliminationOrder, Lex, WeightedGrevlex
from multalg.poly import Polynomial, WeightedGrading, parse_polynomial
from multalg.series import RationalSeries, UniPoly, weight_denominator

XY = ("x", "y")
XYZ = ("x", "y", "z")
A3 = ("a0", "a1", "a2")


def P(text, vs):
    return parse_polynomial(text, vs)


def I(vs, *texts):
    return Ideal(vs, tuple(P(t, vs) for t in texts), WeightedGrading.units(len(vs)))


# ----------------------------------------------------------- worked bases


def test_reduced_basis_examples():
    gb = groebner_basis(I(("p1", "q1"), "p1 + q1", "p1*q1"))
    assert [str(b) for b in gb.basis] == ["p1 + q1", "q1^2"]

    gb = groebner_basis(I(("a0",), "a0"))
    assert [str(b) for b in gb.basis] == ["a0"]


def test_lex_basis_contains_cube():
    gb = groebner_basis(I(A3, "a0^2", "a0*a1", "a0*a2 + a1^2"), Lex())
    assert P("a1^3", A3) in gb.basis


def test_spolynomial_cancels_leading_terms():
    order = WeightedGrevlex((1, 1))
    f = P("x^2 + y", XY)
    g = P("x*y + 1", XY)
    s = s_polynomial(f, g, order)
    # lcm(x^2, xy) = x^2 y; y*f - x*g = y^2 - x
    assert s == P("y^2 - x", XY)


def test_reduced_basis_is_monic_and_autoreduced():
    gb = groebner_basis(I(XYZ, "x^2 - y", "x*y - z", "3*y^2 - x*z"))
    order = gb.order
    for i, b in enumerate(gb.basis):
        lead = b.terms[gb.leading[i]]
        assert lead == Fraction(1)
        # no monomial of b is divisible by another element's leading monomial
        for j, other_lm in enumerate(gb.leading):
            if i == j:
                continue
            for exps in b.terms:
                assert not all(e >= m for e, m in zip(exps, other_lm))


# ------------------------------------------------------------ sympy oracle


def _random_ideal(rng, vs, max_terms=3, max_deg=2, count=2):
    gens = []
    n = len(vs)
    for _ in range(count):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = tuple(rng.randint(0, max_deg) for _ in range(n))
            c = rng.randint(-3, 3)
            if c:
                terms[exps] = Fraction(c)
        if terms:
            gens.append(Polynomial(vs, terms))
    if not gens:
        gens = [Polynomial.constant(vs, 1)]
    return Ideal(vs, tuple(gens), WeightedGrading.units(n))


def _to_sympy(p, syms):
    expr = sympy.Integer(0)
    for exps, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, exps):
            term *= s**e
        expr += term
    return expr


@pytest.mark.parametrize("seed", range(24))
def test_reduced_basis_matches_sympy(seed):
    rng = random.Random(seed)
    vs = XY if seed % 2 == 0 else XYZ
    ideal = _random_ideal(rng, vs, count=2 if len(vs) == 3 else 3)
    syms = sympy.symbols(" ".join(vs))
    ours = groebner_basis(ideal)
    theirs = sympy.groebner(
        [_to_sympy(g, syms) for g in ideal.generators],
        *syms,
        order="grevlex",
        domain="QQ",
    )
    ours_exprs = {sympy.expand(_to_sympy(b, syms)) for b in ours.basis}
    theirs_exprs = {sympy.expand(e) for e in theirs.exprs}
    assert ours_exprs == theirs_exprs


@pytest.mark.parametrize("seed", range(8))
def test_lex_basis_matches_sympy(seed):
    rng = random.Random(100 + seed)
    ideal = _random_ideal(rng, XY, count=2)
    syms = sympy.symbols("x y")
    ours = groebner_basis(ideal, Lex())
    theirs = sympy.groebner(
        [_to_sympy(g, syms) for g in ideal.generators], *syms, order="lex", domain="QQ"
    )
    ours_exprs = {sympy.expand(_to_sympy(b, syms)) for b in ours.basis}
    theirs_exprs = {sympy.expand(e) for e in theirs.exprs}
    assert ours_exprs == theirs_exprs


# ------------------------------------------------------------- normal form


def _fixed_gb():
    return groebner_basis(I(A3, "a0^2", "a0*a1", "a0*a2 + a1^2"))


poly3 = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5),
    max_size=5,
).map(lambda d: Polynomial(A3, d))


@given(poly3)
@settings(max_examples=100, deadline=None)
def test_normal_form_idempotent(p):
    gb = _fixed_gb()
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r


@given(poly3, poly3)
@settings(max_examples=100, deadline=None)
def test_normal_form_linear(p, q):
    gb = _fixed_gb()
    assert normal_form(p + q, gb) == normal_form(p, gb) + normal_form(q, gb)
    assert normal_form(p.scale(3), gb) == normal_form(p, gb).scale(3)


@given(poly3, st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_normal_form_kills_members(p, i):
    gb = _fixed_gb()
    member = p * gb.basis[i % len(gb.basis)]
    assert normal_form(member, gb).is_zero()


def test_normal_form_examples():
    gb = groebner_basis(I(("p1", "q1"), "p1 + q1", "p1*q1"))
    assert normal_form(P("p1*q1", ("p1", "q1")), gb).is_zero()
    assert normal_form(P("p1", ("p1", "q1")), gb) == P("-q1", ("p1", "q1"))

    one = Polynomial.constant(A3, 1)
    assert normal_form(one, _fixed_gb()) == one


# -------------------------------------------------------------- staircase


def test_zero_dimensionality():
    assert is_zero_dimensional(groebner_basis(I(("p1", "q1"), "p1 + q1", "p1*q1")))
    assert not is_zero_dimensional(groebner_basis(I(("a0", "a1"), "a0^2", "a0*a1")))
    assert is_zero_dimensional(groebner_basis(I(("x",), "x")))
    # the unit ideal has no standard monomials at all but is 0-dimensional
    assert is_zero_dimensional(groebner_basis(I(XY, "1")))


def test_standard_monomials():
    gb = groebner_basis(I(("p1", "q1"), "p1 + q1", "p1*q1"))
    assert standard_monomials(gb) == [(0, 0), (0, 1)]

    with pytest.raises(NotZeroDimensional):
        standard_monomials(groebner_basis(I(("a0", "a1"), "a0^2", "a0*a1")))

    assert standard_monomials(groebner_basis(I(XY, "1"))) == []


def test_standard_monomial_count_is_bezout_product():
    # zero-dimensional quasi-homogeneous complete intersection:
    # the count is the product of degree/weight ratios
    rng = random.Random(7)
    for _ in range(6):
        n = rng.randint(1, 3)
        vs = XYZ[:n]
        weights = tuple(rng.choice((1, 1, 2)) for _ in range(n))
        gens = []
        for i in range(n):
            k = rng.randint(1, 3)
            terms = {tuple(k if j == i else 0 for j in range(n)): Fraction(1)}
            gens.append(Polynomial(vs, terms))
        ideal = Ideal(vs, tuple(gens), WeightedGrading(weights))
        gb = groebner_basis(ideal, WeightedGrevlex(weights))
        count = len(standard_monomials(gb))
        # degree of the pure power x_i^k is k*w_i, so the ratio d_i/w_i is k
        expect = 1
        for i, g in enumerate(gens):
            k = next(iter(g.terms))[i]
            expect *= k
        assert count == expect


# ---------------------------------------------------------- hilbert series


def test_hilbert_series_examples():
    assert hilbert_series(I(("p1", "q1"), "p1 + q1", "p1*q1")) == UniPoly([1, 1])

    s = hilbert_series(I(("a0", "a1"), "a0^2", "a0*a1"))
    assert s == RationalSeries(UniPoly([1, 1, -1]), UniPoly([1, -1]))
    assert str(s) == "(1 + t - t^2)/(1 - t)"

    free = Ideal(("x",), (), WeightedGrading((1,)))
    assert hilbert_series(free) == RationalSeries(UniPoly([1]), UniPoly([1, -1]))

    unit = hilbert_series(I(XY, "1"))
    assert unit == RationalSeries(UniPoly([]), UniPoly([1]))


def test_hilbert_series_weighted():
    # C[x]/(x^2) with weight 2: dimensions live in degrees 0 and 2
    ideal = Ideal(("x",), (P("x^2", ("x",)),), WeightedGrading((2,)))
    assert hilbert_series(ideal) == UniPoly([1, 0, 1])


def test_hilbert_series_of_complete_intersection_is_weight_ratio():
    # for a regular sequence the series is prod(1-t^d_i) / prod(1-t^w_j)
    cases = [
        (XY, (1, 1), ("x^2", "y^3")),
        (XY, (1, 2), ("x^4", "y^2")),
        (XYZ, (1, 1, 1), ("x^2", "y^2", "z^2")),
        (("p1", "q1"), (1, 1), ("p1 + q1", "p1*q1")),
    ]
    for vs, weights, texts in cases:
        grading = WeightedGrading(weights)
        gens = tuple(P(t, vs) for t in texts)
        ideal = Ideal(vs, gens, grading)
        degrees = []
        from multalg.poly import weighted_degree

        for g in gens:
            degrees.append(weighted_degree(g, grading))
        want = RationalSeries.from_weight_ratio(tuple(degrees), weights)
        assert hilbert_series(ideal) == want


def test_hilbert_series_counts_standard_monomials():
    # independent route: brute-force count monomials outside the staircase
    ideal = I(XY, "x^3", "x*y^2")
    gb = groebner_basis(ideal)
    lms = gb.leading
    series = hilbert_series(ideal)
    # count monomials of total degree up to 8 not divisible by any LM
    counts = [0] * 9
    for a in range(0, 9):
        for b in range(0, 9):
            if a + b > 8:
                continue
            if any(a >= l[0] and b >= l[1] for l in lms):
                continue
            counts[a + b] += 1
    # expand the series to degree 8 by long division
    num, den = series.numerator, series.denominator
    expansion = []
    rem = list(num.coeffs) + [0] * 12
    d0 = den.coefficient(0)
    assert d0 != 0
    for k in range(9):
        c = Fraction(rem[k], d0)
        expansion.append(c)
        for j, dc in enumerate(den.coeffs):
            if k + j < len(rem):
                rem[k + j] -= c * dc
    assert [int(c) for c in expansion] == counts


# ------------------------------------------------------------------- krull


def test_krull_dimension_examples():
    assert krull_dimension(I(("a0", "a1"), "a0^2", "a0*a1")) == 1
    assert krull_dimension(Ideal(A3, (), WeightedGrading.units(3))) == 3
    assert krull_dimension(I(XY, "1")) == 0
    assert krull_dimension(I(("p1", "q1"), "p1 + q1", "p1*q1")) == 0


def test_krull_dimension_matches_brute_force():
    # oracle: max size of a variable subset S such that no leading monomial
    # is supported inside S, checked by exhaustive enumeration
    from itertools import combinations

    rng = random.Random(11)
    for _ in range(10):
        ideal = _random_ideal(rng, XYZ, count=2)
        gb = groebner_basis(ideal)
        if not gb.basis or gb.basis[0].is_constant():
            assert krull_dimension(gb) == 0
            continue
        supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading]
        best = 0
        for r in range(3, -1, -1):
            for S in combinations(range(3), r):
                sset = set(S)
                if all(not (sup <= sset) for sup in supports):
                    best = r
                    break
            if best:
                break
        assert krull_dimension(gb) == best


# --------------------------------------------------- intersection / product


def test_intersection_examples():
    linear = I(("a0", "a1"), "a0", "a1")
    sq = ideal_product(linear, linear)
    assert ideal_equal(
        ideal_intersection(sq, I(("a0", "a1"), "a0")),
        I(("a0", "a1"), "a0^2", "a0*a1"),
    )
    assert ideal_equal(
        ideal_intersection(I(("a0", "a1"), "a0"), I(("a0", "a1"), "a1")),
        I(("a0", "a1"), "a0*a1"),
    )


def test_intersection_members_lie_in_both():
    rng = random.Random(3)
    for _ in range(6):
        a = _random_ideal(rng, XY, count=2)
        b = _random_ideal(rng, XY, count=2)
        meet = ideal_intersection(a, b)
        gba, gbb = groebner_basis(a), groebner_basis(b)
        for g in meet.generators:
            assert normal_form(g, gba).is_zero()
            assert normal_form(g, gbb).is_zero()


def test_product_generators():
    prod = ideal_product(I(XY, "x", "y"), I(XY, "x", "y"))
    assert set(map(str, prod.generators)) == {"x^2", "x*y", "y^2"}


def test_ideal_equal():
    assert ideal_equal(I(("x",), "x"), I(("x",), "2*x"))
    assert not ideal_equal(I(A3, "a0*a2 + a1^2"), I(A3, "2*a0*a2 + a1^2"))
    # different generator presentations of one ideal
    assert ideal_equal(
        I(XY, "x + y", "x - y"),
        I(XY, "x", "y"),
    )


def test_elimination_order_keeps_blocks_separate():
    # eliminating t from (t*x - 1, t*y - 1) yields x - y among the t-free part
    vs = ("t", "x", "y")
    ideal = I(vs, "t*x - 1", "t*y - 1")
    order = EliminationOrder(block=1)
    gb = groebner_basis(ideal, order)
    t_free = [b for b in gb.basis if all(e[0] == 0 for e in b.terms)]
    assert any(b == P("x - y", vs) or b == P("y - x", vs) for b in t_free)


# ---------------------------------------------------------- certification


def test_certify_accepts_valid_bases():
    for ideal in (
        I(("p1", "q1"), "p1 + q1", "p1*q1"),
        I(A3, "a0^2", "a0*a1", "a0*a2 + a1^2"),
        I(XYZ, "x^2 - y", "y^2 - z"),
    ):
        assert certify(groebner_basis(ideal))


def test_certify_rejects_non_basis():
    # (x^2 + y^2 - 1, x*y) is not its own Groebner basis
    ideal = I(XY, "x^2 + y^2 - 1", "x*y")
    order = ideal.default_order()
    fake = GroebnerBasis(XY, order, ideal.generators, ideal.generators)
    with pytest.raises(CertificationError):
        certify(fake)


def test_certify_rejects_basis_missing_source_membership():
    # a correct basis for a DIFFERENT ideal fails the source-generator check
    good = groebner_basis(I(XY, "x"))
    impostor = GroebnerBasis(XY, good.order, good.basis, (P("y", XY),))
    with pytest.raises(CertificationError):
        certify(impostor)


# -------------------------------------------------------------- resources


def test_resource_cap_raises():
    tiny = ReductionLimits(max_pair_reductions=1)
    with pytest.raises(ResourceLimitExceeded) as err:
        groebner_basis(
            I(XYZ, "x^2 + y*z", "y^2 + x*z", "z^2 + x*y"), limits=tiny
        )
    assert err.value.cap == 1


def test_cache_returns_identical_object():
    clear_cache()
    ideal = I(XY, "x^2 - y", "y^2")
    a = groebner_basis(ideal)
    b = groebner_basis(ideal)
    assert a is b
    clear_cache()
    c = groebner_basis(ideal)
    assert c is not a and c == a


def test_buchberger_direct_raw_output_certifies():
    # the uncached engine also produces a certified basis
    ideal = I(XYZ, "x*y - z", "y*z - x")
    gb = buchberger(ideal, WeightedGrevlex((1, 1, 1)), DEFAULT_LIMITS)
    assert certify(gb)


def test_ideal_validation():
    with pytest.raises(ValueError):
        Ideal(XY, (Polynomial.zero(XY),), WeightedGrading.units(2))
    mixed = P("x", ("x", "z"))
    with pytest.raises(ValueError):
        Ideal(XY, (mixed,), WeightedGrading.units(2))

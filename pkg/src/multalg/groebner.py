"""Buchberger engine over Q with exact arithmetic, plus ideal queries.

The construction uses the two classical pair-discarding criteria (coprime
leading monomials, and the chain criterion in its order-safe form: a pair
(i, j) is dropped only when some k has lm_k dividing lcm(lm_i, lm_j) and
*both* pairs (i, k) and (j, k) have already left the queue).  Pair
selection is the normal strategy: smallest lcm in the monomial order.

Every run is bounded by an explicit cap on processed S-pair reductions;
exceeding it raises ResourceLimitExceeded rather than returning anything.
`certify` recomputes every S-polynomial of a finished basis with no
criteria applied, as an independent correctness pass.

Reduced bases are unique for a fixed monomial order, so ideal equality is
literal equality of reduced bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, Sequence

from .orders import EliminationOrder, MonomialOrder, WeightedGrevlex
from .poly import (
    Exponents,
    NotQuasiHomogeneous,
    Polynomial,
    PolynomialError,
    WeightedGrading,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    quasi_homogeneity_witness,
    weighted_degree,
)
from .series import RationalSeries, UniPoly, one_minus_power, weight_denominator

__all__ = [
    "GroebnerError",
    "ResourceLimitExceeded",
    "CertificationError",
    "NotZeroDimensional",
    "ReductionLimits",
    "DEFAULT_LIMITS",
    "Ideal",
    "GroebnerBasis",
    "leading_exponents",
    "s_polynomial",
    "buchberger",
    "groebner_basis",
    "normal_form",
    "certify",
    "is_zero_dimensional",
    "standard_monomials",
    "hilbert_series",
    "krull_dimension",
    "ideal_intersection",
    "ideal_product",
    "ideal_equal",
    "clear_cache",
]


class GroebnerError(Exception):
    pass


class ResourceLimitExceeded(GroebnerError):
    """The pair-reduction cap was hit; no basis is returned."""

    def __init__(self, cap: int, context: str = "buchberger"):
        self.cap = cap
        self.context = context
        super().__init__(f"{context}: exceeded the cap of {cap} pair reductions")


class CertificationError(GroebnerError):
    """An S-polynomial of a claimed basis failed to reduce to zero."""

    def __init__(self, detail: str, witness: Polynomial):
        self.witness = witness
        super().__init__(detail)


class NotZeroDimensional(GroebnerError):
    """Raised by staircase queries on a positive-dimensional ideal."""

    def __init__(self, basis: "GroebnerBasis"):
        self.basis = basis
        super().__init__("ideal is not zero-dimensional; offending basis attached")


@dataclass(frozen=True)
class ReductionLimits:
    """Explicit resource cap: processed S-pair reductions per run."""

    max_pair_reductions: int = 500_000


DEFAULT_LIMITS = ReductionLimits()


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """Finite generator list over a fixed variable tuple.

    Zero generators are rejected; the empty list is the zero ideal.
    An optional grading travels with the ideal so graded queries
    (Hilbert series, canonical orders) know the intended weights.
    """

    variables: tuple[str, ...]
    generators: tuple[Polynomial, ...]
    grading: WeightedGrading | None = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if not isinstance(g, Polynomial):
                raise PolynomialError(f"ideal generator {g!r} is not a Polynomial")
            if g.variables != self.variables:
                raise PolynomialError(
                    f"generator over {g.variables} in ideal over {self.variables}"
                )
            if g.is_zero():
                raise PolynomialError("zero polynomial cannot be an ideal generator")
        if self.grading is not None and len(self.grading.weights) != len(self.variables):
            raise PolynomialError("grading length does not match the variable count")

    @classmethod
    def of(cls, generators: Sequence[Polynomial], grading: WeightedGrading | None = None) -> "Ideal":
        if not generators:
            raise PolynomialError("use Ideal(variables, ()) for the zero ideal")
        return cls(generators[0].variables, tuple(generators), grading)

    def is_zero(self) -> bool:
        return not self.generators

    def default_order(self) -> MonomialOrder:
        if self.grading is not None:
            return WeightedGrevlex(self.grading.weights)
        return WeightedGrevlex.units(len(self.variables))


class GroebnerBasis:
    """Reduced basis: monic, mutually irreducible, sorted by leading monomial."""

    __slots__ = ("variables", "order", "basis", "leading", "source")

    def __init__(
        self,
        variables: tuple[str, ...],
        order: MonomialOrder,
        basis: tuple[Polynomial, ...],
        source: tuple[Polynomial, ...] | None = None,
    ):
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "leading", tuple(leading_exponents(g, order) for g in basis))
        object.__setattr__(self, "source", source)

    def __setattr__(self, name, value):
        raise AttributeError("GroebnerBasis is immutable")

    def __len__(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.variables == other.variables
            and self.order == other.order
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.order, self.basis))

    def __repr__(self) -> str:
        return f"GroebnerBasis({len(self.basis)} elements over {self.variables})"


def leading_exponents(p: Polynomial, order: MonomialOrder) -> Exponents:
    if p.is_zero():
        raise PolynomialError("the zero polynomial has no leading monomial")
    return max(p.terms, key=order.key)


def _shift_scale(p: Polynomial, shift: Exponents, scalar: Fraction) -> dict[Exponents, Fraction]:
    return {mono_mul(e, shift): c * scalar for e, c in p.terms.items()}


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lmf = leading_exponents(f, order)
    lmg = leading_exponents(g, order)
    big = mono_lcm(lmf, lmg)
    left = _shift_scale(f, mono_div(big, lmf), 1 / f.terms[lmf])
    right = _shift_scale(g, mono_div(big, lmg), 1 / g.terms[lmg])
    out = dict(left)
    for e, c in right.items():
        s = out.get(e, Fraction(0)) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return Polynomial(f.variables, out)


def _content_normalize(p: Polynomial, order: MonomialOrder) -> Polynomial:
    """Primitive integer coefficients, leading coefficient positive."""
    mult = 1
    for c in p.terms.values():
        mult = mult * c.denominator // gcd(mult, c.denominator)
    num_gcd = 0
    for c in p.terms.values():
        num_gcd = gcd(num_gcd, abs(c.numerator * (mult // c.denominator)))
    scale = Fraction(mult, num_gcd)
    if p.terms[leading_exponents(p, order)] < 0:
        scale = -scale
    return p.scale(scale)


def _nf_terms(
    terms: dict[Exponents, Fraction],
    lms: Sequence[Exponents],
    polys: Sequence[Polynomial],
    keyfn: Callable,
    variables: tuple[str, ...],
) -> Polynomial:
    """Full remainder of division by (lms, polys); divisor = first match."""
    work = dict(terms)
    rem: dict[Exponents, Fraction] = {}
    keycache: dict[Exponents, object] = {}

    def key_of(e: Exponents):
        v = keycache.get(e)
        if v is None:
            v = keycache[e] = keyfn(e)
        return v

    while work:
        m = max(work, key=key_of)
        c = work.pop(m)
        for lm, g in zip(lms, polys):
            if mono_divides(lm, m):
                factor = c / g.terms[lm]
                for e2, c2 in g.terms.items():
                    if e2 == lm:
                        continue
                    tgt = mono_mul(e2, mono_div(m, lm))
                    s = work.get(tgt, Fraction(0)) - factor * c2
                    if s:
                        work[tgt] = s
                    else:
                        work.pop(tgt, None)
                break
        else:
            rem[m] = c
    return Polynomial(variables, rem)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of p modulo the (reduced) basis."""
    if p.variables != gb.variables:
        raise PolynomialError("polynomial and basis live over different variables")
    if p.is_zero() or not gb.basis:
        return p
    return _nf_terms(p.terms, gb.leading, gb.basis, gb.order.key, gb.variables)


# ---------------------------------------------------------------------------


def buchberger(
    ideal: Ideal,
    order: MonomialOrder | None = None,
    limits: ReductionLimits = DEFAULT_LIMITS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal under the given order."""
    if order is None:
        order = ideal.default_order()
    variables = ideal.variables
    key = order.key

    work = [_content_normalize(g, order) for g in ideal.generators]
    lms = [leading_exponents(g, order) for g in work]

    pending: dict[tuple[int, int], Exponents] = {}
    for j in range(len(work)):
        for i in range(j):
            pending[(i, j)] = mono_lcm(lms[i], lms[j])

    processed = 0
    while pending:
        (i, j) = min(pending, key=lambda ij: (key(pending[ij]), ij))
        big = pending.pop((i, j))
        # coprime criterion
        if big == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion (order-safe form)
        skip = False
        for k in range(len(work)):
            if k in (i, j):
                continue
            if not mono_divides(lms[k], big):
                continue
            if (min(i, k), max(i, k)) in pending:
                continue
            if (min(j, k), max(j, k)) in pending:
                continue
            skip = True
            break
        if skip:
            continue
        processed += 1
        if processed > limits.max_pair_reductions:
            raise ResourceLimitExceeded(limits.max_pair_reductions)
        s = s_polynomial(work[i], work[j], order)
        if s.is_zero():
            continue
        r = _nf_terms(s.terms, lms, work, key, variables)
        if r.is_zero():
            continue
        r = _content_normalize(r, order)
        t = len(work)
        work.append(r)
        lms.append(leading_exponents(r, order))
        for i2 in range(t):
            pending[(i2, t)] = mono_lcm(lms[i2], lms[t])

    reduced = _reduce_basis(work, order)
    return GroebnerBasis(variables, order, reduced, source=ideal.generators)


def _reduce_basis(work: list[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    key = order.key
    indexed = sorted(range(len(work)), key=lambda i: key(leading_exponents(work[i], order)))
    kept: list[Polynomial] = []
    kept_lms: list[Exponents] = []
    for i in indexed:
        lm = leading_exponents(work[i], order)
        if any(mono_divides(k, lm) for k in kept_lms):
            continue
        kept.append(work[i])
        kept_lms.append(lm)
    # tail-reduce each element against the others, then make monic
    out: list[Polynomial] = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        other_lms = kept_lms[:i] + kept_lms[i + 1 :]
        r = _nf_terms(g.terms, other_lms, others, key, g.variables)
        lc = r.terms[leading_exponents(r, order)]
        out.append(r.scale(1 / lc))
        kept[i] = out[-1]
    out.sort(key=lambda g: key(leading_exponents(g, order)))
    return tuple(out)


@lru_cache(maxsize=256)
def _cached_basis(ideal: Ideal, order: MonomialOrder, limits: ReductionLimits) -> GroebnerBasis:
    return buchberger(ideal, order, limits)


def groebner_basis(
    ideal: Ideal,
    order: MonomialOrder | None = None,
    limits: ReductionLimits = DEFAULT_LIMITS,
) -> GroebnerBasis:
    """Cached front end to `buchberger` (ideals and orders are value types)."""
    if order is None:
        order = ideal.default_order()
    return _cached_basis(ideal, order, limits)


def clear_cache() -> None:
    _cached_basis.cache_clear()


def certify(gb: GroebnerBasis, limits: ReductionLimits = DEFAULT_LIMITS) -> bool:
    """Independent pass: reduce every S-polynomial, no pair criteria.

    Also re-reduces the source generators when the basis remembers them.
    Returns True or raises CertificationError with the nonzero witness.
    """
    n = len(gb.basis)
    budget = limits.max_pair_reductions
    count = 0
    for j in range(n):
        for i in range(j):
            count += 1
            if count > budget:
                raise ResourceLimitExceeded(budget, context="certify")
            s = s_polynomial(gb.basis[i], gb.basis[j], gb.order)
            if s.is_zero():
                continue
            r = normal_form(s, gb)
            if not r.is_zero():
                raise CertificationError(
                    f"S-polynomial of basis elements {i} and {j} does not reduce to zero",
                    witness=r,
                )
    for g in gb.source or ():
        r = normal_form(g, gb)
        if not r.is_zero():
            raise CertificationError(
                "an original generator does not reduce to zero", witness=r
            )
    return True


# ---------------------------------------------------------------------------
# staircase queries


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff the staircase is finite: every variable has a pure-power
    leading monomial (the constant monomial counts for every variable)."""
    n = len(gb.variables)
    for i in range(n):
        if not any(
            lm[i] >= 0 and all(e == 0 for j, e in enumerate(lm) if j != i) for lm in gb.leading
        ):
            return False
    return True


def standard_monomials(gb: GroebnerBasis) -> list[Exponents]:
    """All monomials outside the leading-term ideal, sorted by order key.

    Raises NotZeroDimensional when the staircase is infinite.
    """
    if not is_zero_dimensional(gb):
        raise NotZeroDimensional(gb)
    n = len(gb.variables)
    start = (0,) * n
    seen = {start}
    queue = [start]
    found: list[Exponents] = []
    while queue:
        m = queue.pop()
        if any(mono_divides(lm, m) for lm in gb.leading):
            continue
        found.append(m)
        for i in range(n):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    found.sort(key=gb.order.key)
    return found


def _minimalize(gens: Iterable[Exponents]) -> tuple[Exponents, ...]:
    uniq = sorted(set(gens), key=lambda e: (sum(e), e))
    out: list[Exponents] = []
    for g in uniq:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


def _monomial_numerator(gens: tuple[Exponents, ...], weights: tuple[int, ...]) -> UniPoly:
    """Numerator N with Hilb(R/(gens)) = N / prod(1 - t^w), by pivot recursion."""
    gens = _minimalize(gens)
    if not gens:
        return UniPoly.one()
    n = len(weights)
    if any(not any(g) for g in gens):
        return UniPoly()  # unit ideal
    if len(gens) == 1:
        return one_minus_power(sum(w * e for w, e in zip(weights, gens[0])))
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    pivot_var = max(range(n), key=lambda i: counts[i])
    if counts[pivot_var] < 2:
        # pairwise disjoint supports: the quotient is a tensor product
        out = UniPoly.one()
        for g in gens:
            out = out * one_minus_power(sum(w * e for w, e in zip(weights, g)))
        return out
    # split along the pivot variable x_v:  N(I) = N(I + (x_v)) + t^w N(I : x_v)
    pivot = tuple(1 if i == pivot_var else 0 for i in range(n))
    plus = tuple(g for g in gens if g[pivot_var] == 0) + (pivot,)
    colon = tuple(
        g[:pivot_var] + (max(0, g[pivot_var] - 1),) + g[pivot_var + 1 :] for g in gens
    )
    left = _monomial_numerator(plus, weights)
    right = _monomial_numerator(colon, weights)
    return left + UniPoly.term(1, weights[pivot_var]) * right


def hilbert_series(
    ideal: Ideal,
    grading: WeightedGrading | None = None,
    limits: ReductionLimits = DEFAULT_LIMITS,
) -> RationalSeries:
    """Graded dimension series of R/I for quasi-homogeneous I, fully reduced.

    Inhomogeneous generators are reported with a pair of witness monomials.
    """
    if grading is None:
        grading = ideal.grading or WeightedGrading.units(len(ideal.variables))
    for g in ideal.generators:
        witness = quasi_homogeneity_witness(g, grading)
        if witness is not None:
            raise NotQuasiHomogeneous(*witness)
    denom = weight_denominator(grading.weights)
    if ideal.is_zero():
        return RationalSeries(UniPoly.one(), denom)
    gb = groebner_basis(ideal, WeightedGrevlex(grading.weights), limits)
    numerator = _monomial_numerator(gb.leading, grading.weights)
    return RationalSeries(numerator, denom)


def krull_dimension(ideal_or_gb: Ideal | GroebnerBasis, limits: ReductionLimits = DEFAULT_LIMITS) -> int:
    """Dimension of R/I: the largest variable subset S such that no leading
    monomial is supported entirely inside S.  (Unit ideal: returns 0, the
    convention chosen here for the empty scheme.)"""
    if isinstance(ideal_or_gb, Ideal):
        if ideal_or_gb.is_zero():
            return len(ideal_or_gb.variables)
        gb = groebner_basis(ideal_or_gb, limits=limits)
    else:
        gb = ideal_or_gb
    supports = {frozenset(i for i, e in enumerate(lm) if e) for lm in _minimalize(gb.leading)}
    if frozenset() in supports:
        return 0
    n = len(gb.variables)
    memo: dict[frozenset[int], int] = {}

    def best(avail: frozenset[int]) -> int:
        got = memo.get(avail)
        if got is not None:
            return got
        violated = None
        for s in supports:
            if s <= avail:
                violated = s
                break
        if violated is None:
            result = len(avail)
        else:
            result = max(best(avail - {v}) for v in violated)
        memo[avail] = result
        return result

    return best(frozenset(range(n)))


# ---------------------------------------------------------------------------
# ideal-level operations


def _fresh_name(taken: Sequence[str]) -> str:
    for base in ("t", "s", "u"):
        if base not in taken:
            return base
    i = 0
    while f"t{i}" in taken:
        i += 1
    return f"t{i}"


def _lift(p: Polynomial, new_vars: tuple[str, ...], t_exp: int) -> dict[Exponents, Fraction]:
    return {(t_exp,) + e: c for e, c in p.terms.items()}


def ideal_intersection(left: Ideal, right: Ideal, limits: ReductionLimits = DEFAULT_LIMITS) -> Ideal:
    """I ∩ J via the tag-variable trick: eliminate t from t·I + (1-t)·J."""
    if left.variables != right.variables:
        raise PolynomialError("intersection needs a common variable tuple")
    variables = left.variables
    grading = left.grading if left.grading == right.grading else None
    if left.is_zero() or right.is_zero():
        return Ideal(variables, (), grading)
    tag = _fresh_name(variables)
    new_vars = (tag,) + variables
    gens: list[Polynomial] = []
    for f in left.generators:
        gens.append(Polynomial(new_vars, _lift(f, new_vars, 1)))
    for g in right.generators:
        terms = _lift(g, new_vars, 0)
        for e, c in _lift(g, new_vars, 1).items():
            terms[e] = terms.get(e, Fraction(0)) - c
            if not terms[e]:
                del terms[e]
        gens.append(Polynomial(new_vars, terms))
    inner_weights = grading.weights if grading is not None else (1,) * len(variables)
    order = EliminationOrder(
        block=1, first=WeightedGrevlex((1,)), rest=WeightedGrevlex(inner_weights)
    )
    gb = buchberger(Ideal(new_vars, tuple(gens)), order, limits)
    kept: list[Polynomial] = []
    for p, lm in zip(gb.basis, gb.leading):
        if lm[0] == 0:
            # elimination order: a t-free leading monomial forces a t-free element
            kept.append(Polynomial(variables, {e[1:]: c for e, c in p.terms.items()}))
    return Ideal(variables, tuple(kept), grading)


def ideal_product(left: Ideal, right: Ideal) -> Ideal:
    if left.variables != right.variables:
        raise PolynomialError("product needs a common variable tuple")
    grading = left.grading if left.grading == right.grading else None
    gens = tuple(f * g for f in left.generators for g in right.generators)
    return Ideal(left.variables, gens, grading)


def ideal_equal(
    left: Ideal,
    right: Ideal,
    order: MonomialOrder | None = None,
    limits: ReductionLimits = DEFAULT_LIMITS,
) -> bool:
    """Equality of ideals = equality of reduced bases under one fixed order."""
    if left.variables != right.variables:
        raise PolynomialError("equality needs a common variable tuple")
    if order is None:
        order = WeightedGrevlex.units(len(left.variables))
    gb_left = groebner_basis(left, order, limits)
    gb_right = groebner_basis(right, order, limits)
    return gb_left.basis == gb_right.basis

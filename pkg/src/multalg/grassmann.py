"""Gaussian binomials and presented Grassmannian cohomology rings.

Grading convention: a class of real cohomological degree 2i gets t-degree
i (Chern-class degree).  Every polynomial below is in that halved grading;
the doubling is deliberate and matches the t-binomial normalization.

The ring H*(Gr(k,n)) is presented on Chern roots of the two tautological
bundles: variables p_1..p_k (weight i for p_i) and q_1..q_{n-k} (weight j
for q_j), with relations the coefficients of x^0..x^{n-1} in

    (x^k + p_1 x^(k-1) + ... + p_k) * (x^(n-k) + q_1 x^(n-k-1) + ... + q_(n-k)) - x^n.

The relations are emitted in ascending weighted degree (degree 1 first).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .groebner import DEFAULT_LIMITS, ReductionLimits, hilbert_series
from .poly import Polynomial
from .rings import PresentedRing
from .series import RationalSeries, UniPoly, one_minus_power

__all__ = [
    "gaussian_binomial",
    "grassmann_presentation",
    "DivisorData",
    "grassmann_multiplicity",
    "product_hilbert",
]


def gaussian_binomial(n: int, k: int) -> UniPoly:
    """[n k]_t = prod_{i=1}^{k} (1 - t^(n-i+1)) / (1 - t^i), by exact division.

    Degree k(n-k); value C(n,k) at t=1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = UniPoly.one()
    for i in range(1, k + 1):
        num = num * one_minus_power(n - i + 1)
    for i in range(1, k + 1):
        num = num.divide_exact(one_minus_power(i))
    return num


def grassmann_presentation(n: int, k: int) -> PresentedRing:
    """Presented cohomology ring of the Grassmannian of k-planes in n-space."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    variables = tuple(f"p{i}" for i in range(1, k + 1)) + tuple(
        f"q{j}" for j in range(1, n - k + 1)
    )
    weights = tuple(range(1, k + 1)) + tuple(range(1, n - k + 1))

    def coeff_poly(names_value: dict[int, str], degree_of_x: int, total: int) -> Polynomial:
        # coefficient of x^degree_of_x in a monic polynomial of degree `total`
        if degree_of_x == total:
            return Polynomial.constant(variables, 1)
        name = names_value[total - degree_of_x]
        return Polynomial.variable(variables, name)

    p_names = {i: f"p{i}" for i in range(1, k + 1)}
    q_names = {j: f"q{j}" for j in range(1, n - k + 1)}
    # relation of weighted degree n - s = coefficient of x^s in P(x)Q(x) - x^n
    relations = []
    for s in range(n - 1, -1, -1):
        acc = Polynomial.zero(variables)
        for a in range(0, k + 1):
            b = s - a
            if not 0 <= b <= n - k:
                continue
            acc = acc + coeff_poly(p_names, a, k) * coeff_poly(q_names, b, n - k)
        relations.append(acc)
    return PresentedRing(variables, weights, tuple(relations), provenance=f"grassmann({n},{k})")


@dataclass(frozen=True)
class DivisorData:
    """Rank n together with point multiplicities m = (m_1, ..., m_(n-1)).

    Only the multiplicities enter the algebra; the underlying points do
    not.  The product formula below additionally assumes the divisor is
    reduced -- that assumption is reported, never verified here.
    """

    n: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if self.n < 1:
            raise ValueError("rank must be positive")
        if len(self.m) != self.n - 1:
            raise ValueError(f"m must have length n-1 = {self.n - 1}, got {len(self.m)}")
        if any(x < 0 for x in self.m):
            raise ValueError("multiplicities must be non-negative")


def grassmann_multiplicity(d: DivisorData) -> UniPoly:
    """prod_i [n i]_t^(m_i): the multiplicity polynomial of the divisor data.

    At t=1 this is prod_i C(n,i)^(m_i), the expected point count.
    """
    out = UniPoly.one()
    for i, mult in enumerate(d.m, start=1):
        if mult:
            out = out * gaussian_binomial(d.n, i) ** mult
    return out


def product_hilbert(
    rings: list[PresentedRing] | tuple[PresentedRing, ...],
    limits: ReductionLimits = DEFAULT_LIMITS,
) -> RationalSeries:
    """Hilbert series of the tensor product: the product of the factors'."""
    out = RationalSeries.from_polynomial(UniPoly.one())
    for ring in rings:
        out = out * hilbert_series(ring.ideal(), ring.grading(), limits)
    return out


def expected_point_count(d: DivisorData) -> int:
    """prod_i C(n,i)^(m_i) -- the t=1 value of grassmann_multiplicity."""
    out = 1
    for i, mult in enumerate(d.m, start=1):
        out *= comb(d.n, i) ** mult
    return out

"""Local multiplicity algebras of quasi-homogeneous maps.

Given a square quasi-homogeneous map h = (h_1, ..., h_N) in N weighted
variables, the quotient Q = C[x_1..x_N]/(h_1..h_N) -- when it is finite
dimensional -- is a graded Artinian algebra with a tight structure:

  1. finite dimensional, with the standard monomials as a basis;
  2. the degree-0 piece is one-dimensional, spanned by 1;
  3. Gorenstein: the socle (annihilator of the maximal ideal) is
     one-dimensional, concentrated in top degree m = sum(deg h_i) -
     sum(weights), and spanned by the Jacobian determinant of h;
  4. the bilinear pairing (a, b) = ell(a*b), with ell the coefficient
     functional of the socle generator, is perfect in complementary
     degrees Q^k x Q^(m-k);
  5. the Poincare polynomial sum dim(Q^k) t^k equals the equivariant
     multiplicity  prod(1 - t^(deg h_i)) / prod(1 - t^(w_j)).

`verify_structure_theorem` checks every clause independently with exact
arithmetic and returns a report; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .groebner import (
    DEFAULT_LIMITS,
    GroebnerBasis,
    Ideal,
    NotZeroDimensional,
    ReductionLimits,
    groebner_basis,
    normal_form,
    standard_monomials,
)
from .linalg import nullspace, rank
from .orders import WeightedGrevlex
from .poly import (
    Exponents,
    Polynomial,
    PolynomialMap,
    WeightedGrading,
    jacobian_determinant,
    mono_mul,
    monomial_to_text,
)
from .series import RationalSeries, UniPoly

__all__ = [
    "NotFinite",
    "FiniteGradedAlgebra",
    "build_quotient",
    "poincare_polynomial",
    "equivariant_multiplicity",
    "socle",
    "jacobian_spans_socle",
    "DegreePairing",
    "PairingReport",
    "pairing_matrices",
    "StructureReport",
    "verify_structure_theorem",
    "hitchin_base_weights",
]

# build_quotient raises the staircase error unchanged; the basis rides along
# so degenerate (non-finite) inputs can still be analyzed by ideal queries.
NotFinite = NotZeroDimensional


class FiniteGradedAlgebra:
    """Zero-dimensional graded quotient with its standard-monomial basis.

    Multiplication is polynomial product followed by normal form; the
    result is always supported on the basis again.  Normal forms of
    monomials are cached, since every structure check below reduces the
    same products repeatedly.
    """

    __slots__ = ("gb", "grading", "variables", "basis", "degrees", "index", "source_map", "_nf_cache")

    def __init__(
        self,
        gb: GroebnerBasis,
        grading: WeightedGrading,
        source_map: PolynomialMap | None = None,
    ):
        basis = tuple(standard_monomials(gb))  # raises NotZeroDimensional
        object.__setattr__(self, "gb", gb)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "variables", gb.variables)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "degrees", tuple(grading.degree(b) for b in basis))
        object.__setattr__(self, "index", {b: i for i, b in enumerate(basis)})
        object.__setattr__(self, "source_map", source_map)
        object.__setattr__(self, "_nf_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGradedAlgebra is immutable")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def top_degree(self) -> int:
        return max(self.degrees, default=0)

    def basis_monomial(self, i: int) -> str:
        return monomial_to_text(self.basis[i], self.variables)

    def coordinates(self, p: Polynomial) -> list[Fraction]:
        """Coordinates of the class of p in the standard-monomial basis."""
        nf = normal_form(p, self.gb)
        vec = [Fraction(0)] * len(self.basis)
        for exps, coeff in nf.terms.items():
            vec[self.index[exps]] = coeff
        return vec

    def monomial_coordinates(self, exps: Exponents) -> list[Fraction]:
        got = self._nf_cache.get(exps)
        if got is None:
            got = self.coordinates(Polynomial(self.variables, {exps: Fraction(1)}))
            self._nf_cache[exps] = got
        return got

    def product_coordinates(self, i: int, j: int) -> list[Fraction]:
        """Coordinates of basis[i] * basis[j]."""
        return self.monomial_coordinates(mono_mul(self.basis[i], self.basis[j]))

    def variable_matrix(self, var_index: int) -> list[list[Fraction]]:
        """Matrix of multiplication by x_v; column j = coords of x_v * b_j."""
        n = len(self.variables)
        unit = tuple(1 if k == var_index else 0 for k in range(n))
        cols = [self.monomial_coordinates(mono_mul(b, unit)) for b in self.basis]
        dim = len(self.basis)
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def build_quotient(
    m: PolynomialMap, limits: ReductionLimits = DEFAULT_LIMITS
) -> FiniteGradedAlgebra:
    """Quotient by the components of a quasi-homogeneous map.

    Raises NotFinite (with the Groebner basis attached) when the quotient
    is not finite dimensional -- the degenerate case where the fibre of
    the map through the origin is positive-dimensional.
    """
    ideal = Ideal(m.variables, m.components, m.grading)
    gb = groebner_basis(ideal, WeightedGrevlex(m.grading.weights), limits)
    return FiniteGradedAlgebra(gb, m.grading, source_map=m)


def poincare_polynomial(q: FiniteGradedAlgebra) -> UniPoly:
    """Coefficient of t^k = number of standard monomials of weighted degree k."""
    if not q.basis:
        return UniPoly()
    counts = [0] * (q.top_degree + 1)
    for d in q.degrees:
        counts[d] += 1
    return UniPoly(counts)


def equivariant_multiplicity(
    domain: Iterable[int], codomain: Iterable[int]
) -> RationalSeries:
    """Reduced  prod_{d in codomain}(1 - t^d) / prod_{w in domain}(1 - t^w).

    For a finite quotient of a quasi-homogeneous map this equals the
    Poincare polynomial; for a degenerate map it stays a genuine series.
    """
    dom = tuple(int(w) for w in domain)
    cod = tuple(int(d) for d in codomain)
    if not dom or not cod:
        raise ValueError("weight multisets must be nonempty")
    if any(w <= 0 for w in dom + cod):
        raise ValueError("weights must be positive")
    return RationalSeries.from_weight_ratio(cod, dom)


def socle(q: FiniteGradedAlgebra) -> tuple[Polynomial, ...]:
    """Basis of ann(maximal ideal) = intersection of kernels of all x_v.

    Solved as one exact linear system: stack the multiplication matrices
    of every variable and take the nullspace.
    """
    dim = q.dimension
    if dim == 0:
        return ()
    stacked: list[list[Fraction]] = []
    for v in range(len(q.variables)):
        stacked.extend(q.variable_matrix(v))
    out = []
    for vec in nullspace(stacked, dim):
        terms = {q.basis[i]: c for i, c in enumerate(vec) if c}
        out.append(Polynomial(q.variables, terms))
    return tuple(out)


def jacobian_spans_socle(q: FiniteGradedAlgebra) -> bool:
    """True iff NF of the Jacobian determinant is nonzero and proportional
    to the (one-dimensional) socle."""
    if q.source_map is None:
        raise ValueError("algebra does not remember its source map")
    soc = socle(q)
    if len(soc) != 1:
        return False
    jac = q.coordinates(jacobian_determinant(q.source_map))
    if not any(jac):
        return False
    gen = q.coordinates(soc[0])
    return rank([jac, gen]) == 1


@dataclass(frozen=True)
class DegreePairing:
    degree: int
    complementary_degree: int
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    perfect: bool


@dataclass(frozen=True)
class PairingReport:
    top_degree: int
    jacobian_normalized: bool  # ell scaled so that ell(Jacobian) = 1
    by_degree: tuple[DegreePairing, ...]
    perfect: bool


def pairing_matrices(q: FiniteGradedAlgebra) -> PairingReport:
    """Pairing (a, b) = ell(a*b) between Q^k and Q^(m-k) for every k.

    ell is the coefficient functional of the socle generator, scaled so
    that ell(Jacobian) = 1 when the map is available and the Jacobian has
    a nonzero socle coefficient (perfection does not depend on the scale).
    Raises ValueError when the socle is not one-dimensional.
    """
    soc = socle(q)
    if len(soc) != 1:
        raise ValueError(f"socle is {len(soc)}-dimensional, pairing needs dimension 1")
    gen_vec = q.coordinates(soc[0])
    support = [i for i, c in enumerate(gen_vec) if c]
    if len(support) != 1:
        # graded Gorenstein always lands here with a single top monomial,
        # but fall back to the first supported coordinate otherwise
        support = support[:1]
    slot = support[0]
    scale = Fraction(1) / gen_vec[slot]
    normalized = False
    if q.source_map is not None:
        jac = q.coordinates(jacobian_determinant(q.source_map))
        if jac[slot]:
            scale = Fraction(1) / jac[slot]
            normalized = True

    def ell(coords: list[Fraction]) -> Fraction:
        return coords[slot] * scale

    m = q.top_degree
    by_deg: list[DegreePairing] = []
    all_perfect = True
    for k in range(m + 1):
        rows_idx = [i for i, d in enumerate(q.degrees) if d == k]
        cols_idx = [j for j, d in enumerate(q.degrees) if d == m - k]
        matrix = tuple(
            tuple(ell(q.product_coordinates(i, j)) for j in cols_idx) for i in rows_idx
        )
        r = rank([list(row) for row in matrix]) if rows_idx and cols_idx else 0
        perfect = len(rows_idx) == len(cols_idx) and r == len(rows_idx)
        by_deg.append(DegreePairing(k, m - k, matrix, r, perfect))
        all_perfect = all_perfect and perfect
    return PairingReport(m, normalized, tuple(by_deg), all_perfect)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Outcome of every structure clause, checked independently.

    When the quotient is not finite dimensional only `finite_dimensional`
    is meaningful; the remaining fields stay None and `clauses` is empty.
    """

    finite_dimensional: bool
    dimension: int | None = None
    top_degree: int | None = None
    expected_top_degree: int | None = None
    poincare: UniPoly | None = None
    m_at_1: int | None = None
    socle_degree: int | None = None
    socle_basis: tuple[str, ...] = ()
    pairing_perfect_per_degree: tuple[bool, ...] = ()
    equivariant: RationalSeries | None = None
    clauses: Mapping[str, bool] = field(default_factory=dict)

    def all_true(self) -> bool:
        return self.finite_dimensional and bool(self.clauses) and all(self.clauses.values())

    def to_json_dict(self) -> dict:
        out: dict = {"finite_dimensional": self.finite_dimensional}
        if not self.finite_dimensional:
            return out
        out.update(
            {
                "dimension": self.dimension,
                "top_degree": self.top_degree,
                "expected_top_degree": self.expected_top_degree,
                "poincare": str(self.poincare),
                "m_at_1": self.m_at_1,
                "socle_degree": self.socle_degree,
                "socle_basis": list(self.socle_basis),
                "pairing_perfect_per_degree": list(self.pairing_perfect_per_degree),
                "equivariant_multiplicity": str(self.equivariant),
                "clauses": dict(self.clauses),
                "all_clauses_true": self.all_true(),
            }
        )
        return out


def verify_structure_theorem(
    m: PolynomialMap, limits: ReductionLimits = DEFAULT_LIMITS
) -> StructureReport:
    """Run every clause of the structure suite on one map, exactly.

    No clause subsumes another: each boolean in `clauses` is computed from
    its own definition (socle dimension by linear algebra, pairing by rank,
    palindromicity by coefficient comparison, the Poincare/multiplicity
    agreement by reduced-series equality).
    """
    try:
        q = build_quotient(m, limits)
    except NotFinite:
        return StructureReport(finite_dimensional=False)

    poincare = poincare_polynomial(q)
    expected_top = sum(m.degrees) - sum(m.grading.weights)
    soc = socle(q)
    socle_degrees = sorted(
        {q.grading.degree(e) for s in soc for e in s.terms}
    )
    gorenstein = len(soc) == 1
    socle_degree = socle_degrees[0] if len(socle_degrees) == 1 else None
    try:
        pairing = pairing_matrices(q)
        per_degree = tuple(p.perfect for p in pairing.by_degree)
        pairing_perfect = pairing.perfect
    except ValueError:
        per_degree = ()
        pairing_perfect = False
    equivariant = equivariant_multiplicity(m.grading.weights, m.degrees)

    clauses = {
        "degree_zero_dim1": sum(1 for d in q.degrees if d == 0) == 1,
        "gorenstein_socle_dim1": gorenstein,
        "socle_in_top_degree": gorenstein and socle_degree == expected_top,
        "socle_is_jacobian": jacobian_spans_socle(q),
        "pairing_perfect": pairing_perfect,
        "palindromic": poincare.is_palindromic(),
        "monic": poincare.is_monic_top(),
        "nonnegative": poincare.nonnegative(),
        "poincare_equals_equivariant_multiplicity": equivariant
        == RationalSeries.from_polynomial(poincare),
    }
    return StructureReport(
        finite_dimensional=True,
        dimension=q.dimension,
        top_degree=q.top_degree,
        expected_top_degree=expected_top,
        poincare=poincare,
        m_at_1=poincare(1),
        socle_degree=socle_degree,
        socle_basis=tuple(str(s) for s in soc),
        pairing_perfect_per_degree=per_degree,
        equivariant=equivariant,
        clauses=clauses,
    )


def hitchin_base_weights(n: int, g: int) -> tuple[int, ...]:
    """Torus weights on the base of the rank-n genus-g integrable system.

    Weight 1 with multiplicity g, and weight i with multiplicity
    (2i-1)(g-1) for 2 <= i <= n; the total count is n^2(g-1) + 1.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    if g < 2:
        raise ValueError("genus must be at least 2 for these section counts")
    out = [1] * g
    for i in range(2, n + 1):
        out.extend([i] * ((2 * i - 1) * (g - 1)))
    return tuple(out)

"""Jet presentations of presented rings.

J_d parametrizes maps from the length-d thickened point: substitute

    x_i  ->  x_i^(0) + x_i^(1) z + ... + x_i^(d-1) z^(d-1)

into every relation, truncate modulo z^d, and take the d coefficient
polynomials of each relation as the new relations.  Truncation order d
means variables are indexed 0..d-1, so J_1 is the ring itself (with
variables renamed x -> x0).

Naming: index j is appended directly to the base name ("a" -> "a0"),
with an underscore separator when the base name already ends in a digit
("p1" -> "p1_0"); collisions are rejected rather than repaired.

Grading assumption: the jet variable x_i^(j) gets weight w_i + j, i.e.
the torus rescales z with weight 1 on top of the base scaling.  Every
jet relation is quasi-homogeneous for that grading, and invariant
reports carry the assumption text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .groebner import (
    DEFAULT_LIMITS,
    Ideal,
    ReductionLimits,
    groebner_basis,
    hilbert_series,
    is_zero_dimensional,
    krull_dimension,
    standard_monomials,
)
from .orders import WeightedGrevlex
from .poly import (
    Polynomial,
    PolynomialError,
    WeightedGrading,
    quasi_homogeneity_witness,
)
from .rings import PresentedRing
from .series import RationalSeries

__all__ = [
    "GRADING_ASSUMPTION",
    "JetPresentation",
    "jet_presentation",
    "apply_substitution",
    "JetInvariants",
    "jet_invariants",
]

GRADING_ASSUMPTION = (
    "weight(x_i^(j)) = weight(x_i) + j "
    "(z carries weight 1 on top of the base scaling)"
)


def _jet_names(variables: tuple[str, ...], d: int) -> list[list[str]]:
    out: list[list[str]] = []
    for v in variables:
        sep = "_" if v and v[-1].isdigit() else ""
        out.append([f"{v}{sep}{j}" for j in range(d)])
    flat = [name for group in out for name in group]
    if len(set(flat)) != len(flat):
        dupes = sorted({n for n in flat if flat.count(n) > 1})
        raise PolynomialError(f"jet variable names collide: {dupes}")
    return out


@dataclass(frozen=True)
class JetPresentation:
    base: PresentedRing
    order: int
    ring: PresentedRing


def _truncated_product(
    a: list[Polynomial], b: list[Polynomial], d: int, zero: Polynomial
) -> list[Polynomial]:
    out = [zero] * d
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j >= d:
                break
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def jet_presentation(base: PresentedRing, d: int) -> JetPresentation:
    """The order-d jet ring of `base` (see module docstring for conventions)."""
    if d < 1:
        raise ValueError("jet order must be at least 1")
    groups = _jet_names(base.variables, d)
    jet_vars = tuple(name for group in groups for name in group)
    jet_weights = tuple(
        w + j for w, group in zip(base.weights, groups) for j in range(d)
    )
    zero = Polynomial.zero(jet_vars)
    one = [Polynomial.constant(jet_vars, 1)] + [zero] * (d - 1)
    # image of base variable i: the truncated series with the new variables
    images: list[list[Polynomial]] = []
    for group in groups:
        images.append([Polynomial.variable(jet_vars, name) for name in group])

    relations: list[Polynomial] = []
    for rel in base.relations:
        coeffs = [zero] * d
        power_cache: dict[tuple[int, int], list[Polynomial]] = {}

        def power(i: int, e: int) -> list[Polynomial]:
            if e == 0:
                return one
            got = power_cache.get((i, e))
            if got is None:
                got = _truncated_product(power(i, e - 1), images[i], d, zero)
                power_cache[(i, e)] = got
            return got

        for exps, c in rel.terms.items():
            term = [Polynomial.constant(jet_vars, c)] + [zero] * (d - 1)
            for i, e in enumerate(exps):
                if e:
                    term = _truncated_product(term, power(i, e), d, zero)
            coeffs = [acc + t for acc, t in zip(coeffs, term)]
        relations.extend(coeffs)

    ring = PresentedRing(
        jet_vars,
        jet_weights,
        tuple(relations),
        provenance=f"jet({base.provenance}, {d})",
    )
    return JetPresentation(base, d, ring)


def apply_substitution(ideal: Ideal, assignment: Mapping[str, Polynomial]) -> Ideal:
    """Image ideal under a variable substitution, zero images pruned.

    Unassigned variables map to themselves; the target ring is the common
    variable tuple of the provided images (the source ring when the
    assignment is empty or partial within the same ring).
    """
    images = list(assignment.values())
    target = images[0].variables if images else ideal.variables
    for img in images:
        if img.variables != target:
            raise PolynomialError("substitution images live in different rings")
    full: dict[str, Polynomial] = {}
    for v in ideal.variables:
        if v in assignment:
            full[v] = assignment[v]
        else:
            if v not in target:
                raise PolynomialError(
                    f"variable {v!r} has no image and no counterpart in the target ring"
                )
            full[v] = Polynomial.variable(target, v)
    gens = []
    for g in ideal.generators:
        image = g.substitute(full)
        if not image.is_zero():
            gens.append(image)
    return Ideal(target, tuple(gens), None)


@dataclass(frozen=True)
class JetInvariants:
    krull_dimension: int
    hilbert: RationalSeries
    series_weights: tuple[int, ...]
    finite: bool
    dimension: int | None
    grading_assumption: str = GRADING_ASSUMPTION

    def to_json_dict(self) -> dict:
        return {
            "krull_dimension": self.krull_dimension,
            "hilbert_series": str(self.hilbert),
            "series_weights": list(self.series_weights),
            "finite": self.finite,
            "dimension": self.dimension,
            "grading_assumption": self.grading_assumption,
        }


def jet_invariants(
    jet: JetPresentation, limits: ReductionLimits = DEFAULT_LIMITS
) -> JetInvariants:
    """Krull dimension, Hilbert series, and finiteness of the jet ideal.

    The series counts plain vector-space dimensions (unit weights)
    whenever the jet relations are homogeneous in the ordinary sense --
    every jet of a unit-graded base is.  A base with genuinely weighted
    relations has no unit grading to count by, so the series falls back
    to the level-shifted weights of the presentation itself; either way
    `series_weights` records the grading the series was computed under.
    Krull dimension, finiteness, and vector-space dimension are
    order-theoretic and carry no such choice.
    """
    ideal = jet.ring.ideal()
    units = WeightedGrading.units(len(jet.ring.variables))
    gb = groebner_basis(ideal, WeightedGrevlex(units.weights), limits)
    finite = is_zero_dimensional(gb)
    dimension = len(standard_monomials(gb)) if finite else None
    unit_graded = all(
        quasi_homogeneity_witness(g, units) is None for g in ideal.generators
    )
    series_grading = units if unit_graded else jet.ring.grading()
    return JetInvariants(
        krull_dimension=krull_dimension(gb),
        hilbert=hilbert_series(ideal, series_grading, limits),
        series_weights=series_grading.weights,
        finite=finite,
        dimension=dimension,
    )

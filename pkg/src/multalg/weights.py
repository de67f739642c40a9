"""Dominance order and orbit combinatorics for GL_n dominant weights.

A dominant weight is a weakly decreasing integer vector.  Dominance
compares only weights with the same total (same determinant character):
lambda <= mu iff all partial sums of lambda are bounded by those of mu
and the totals agree.  Weights with different totals are incomparable
and `dominance_leq` returns False for them rather than raising.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

__all__ = [
    "DominantWeight",
    "fundamental_weight",
    "dominance_leq",
    "lower_set",
    "weyl_orbit_size",
    "fundamental_decomposition",
    "is_minuscule",
]


@dataclass(frozen=True)
class DominantWeight:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if not self.entries:
            raise ValueError("a weight needs at least one entry")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"entries must be weakly decreasing: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def fundamental_weight(n: int, k: int, scale: int = 1) -> DominantWeight:
    """scale * omega_k in GL_n: `scale` repeated k times, then zeros."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return DominantWeight((scale,) * k + (0,) * (n - k))


def dominance_leq(lam: DominantWeight, mu: DominantWeight) -> bool:
    """Partial-sum criterion; False when totals differ (incomparable)."""
    if len(lam) != len(mu):
        raise ValueError(f"lengths differ: {len(lam)} vs {len(mu)}")
    if lam.total != mu.total:
        return False
    acc_l = acc_m = 0
    for a, b in zip(lam.entries, mu.entries):
        acc_l += a
        acc_m += b
        if acc_l > acc_m:
            return False
    return True


def lower_set(mu: DominantWeight) -> list[DominantWeight]:
    """All dominant lambda with lambda <= mu, descending lexicographic.

    Descending lex is dominance-compatible: whenever lambda < nu in
    dominance they also compare that way lexicographically, so mu itself
    is always first.  Enumeration walks entries left to right, keeping
    partial sums within mu's and the remainder spreadable over the
    remaining slots (remaining <= slots * current entry).
    """
    n = len(mu)
    total = mu.total
    prefix_mu = []
    acc = 0
    for e in mu.entries:
        acc += e
        prefix_mu.append(acc)
    out: list[DominantWeight] = []
    entries: list[int] = []

    def walk(i: int, prev: int, acc: int):
        if i == n - 1:
            last = total - acc
            if last <= prev and acc + last <= prefix_mu[i]:
                out.append(DominantWeight(tuple(entries) + (last,)))
            return
        remaining_slots = n - i - 1
        hi = min(prev, prefix_mu[i] - acc)
        for e in range(hi, -(10**18), -1):
            rest = total - acc - e
            # entries after position i are at most e each
            if rest > remaining_slots * e:
                break  # e too small already; smaller e only gets worse
            entries.append(e)
            walk(i + 1, e, acc + e)
            entries.pop()

    walk(0, 10**18, 0)
    return out


def weyl_orbit_size(mu: DominantWeight) -> int:
    """n! divided by the factorials of the entry multiplicities."""
    size = factorial(len(mu))
    for count in Counter(mu.entries).values():
        size //= factorial(count)
    return size


def fundamental_decomposition(mu: DominantWeight) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Coefficients alpha with mu = sum alpha_i omega_i, and the reversed
    exponent vector (alpha_n, ..., alpha_1) used for divisor exponents.

    alpha_i = mu_i - mu_(i+1) >= 0 for i < n; alpha_n = mu_n (any sign).
    """
    e = mu.entries
    n = len(e)
    alpha = tuple(e[i] - e[i + 1] for i in range(n - 1)) + (e[n - 1],)
    return alpha, tuple(reversed(alpha))


def is_minuscule(mu: DominantWeight) -> bool:
    """Minimal in dominance order: entries take at most two adjacent values."""
    return max(mu.entries) - min(mu.entries) <= 1

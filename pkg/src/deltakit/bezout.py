"""Bezout couples, the Bezout table and the table route to the Delta set.

For coprime (d1, d3) and 1 <= i <= max(d1, d3) every index i has two
integer solutions of a*d1 + b*d3 = i singled out by a normalization:

* the lambda couple, with 0 < b <= d1;
* the mu couple, with 0 < a <= d3.

A couple is irreducible when it is not the sum of two couples of the same
kind. The Delta set of the semigroup is g times the set of indices that
carry at least one irreducible couple, where g = gcd(d1, d3) and the table
is built for (d1/g, d3/g).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import gcd
from typing import Optional

from deltakit.errors import IndexOutOfRange, NotCoprime
from deltakit.presentation import (
    DeltaInvariants,
    MinimalPresentation,
    delta_invariants,
    minimal_presentation,
)
from deltakit.semigroup import DeltaSet, Factorization, GeneratorTriple, as_triple


class Kind(str, enum.Enum):
    LAMBDA = "lambda"
    MU = "mu"

    def flipped(self) -> "Kind":
        return Kind.MU if self is Kind.LAMBDA else Kind.LAMBDA


@dataclass(frozen=True)
class BezoutCouple:
    index: int
    kind: Kind
    a: int
    b: int
    irreducible: Optional[bool] = None

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


def _check_deltas(d1: int, d3: int) -> None:
    if d1 < 1 or d3 < 1:
        raise ValueError(f"deltas must be positive, got {(d1, d3)}")
    if gcd(d1, d3) != 1:
        raise NotCoprime(f"gcd({d1}, {d3}) = {gcd(d1, d3)}; normalize first")


def _check_index(i: int, d1: int, d3: int) -> None:
    if not 1 <= i <= max(d1, d3):
        raise IndexOutOfRange(f"index {i} outside 1..{max(d1, d3)}")


def lambda_couple(i: int, d1: int, d3: int) -> BezoutCouple:
    _check_deltas(d1, d3)
    _check_index(i, d1, d3)
    return _lambda(i, d1, d3, pow(d3, -1, d1))


def mu_couple(i: int, d1: int, d3: int) -> BezoutCouple:
    _check_deltas(d1, d3)
    _check_index(i, d1, d3)
    return _mu(i, d1, d3, pow(d1, -1, d3))


# The inverses are computed once per table; each index is then O(1).
def _lambda(i: int, d1: int, d3: int, inv_d3: int) -> BezoutCouple:
    b = i * inv_d3 % d1 or d1
    return BezoutCouple(i, Kind.LAMBDA, (i - b * d3) // d1, b)


def _mu(i: int, d1: int, d3: int, inv_d1: int) -> BezoutCouple:
    a = i * inv_d1 % d3 or d3
    return BezoutCouple(i, Kind.MU, a, (i - a * d1) // d3)


@dataclass(frozen=True)
class BezoutRow:
    index: int
    lam: BezoutCouple
    mu: BezoutCouple


@dataclass(frozen=True)
class BezoutTable:
    delta1: int
    delta3: int
    rows: tuple[BezoutRow, ...]

    def couples(self, kind: Kind) -> list[BezoutCouple]:
        return [row.lam if kind is Kind.LAMBDA else row.mu for row in self.rows]

    def irreducible_indices(self) -> list[int]:
        return [r.index for r in self.rows if r.lam.irreducible or r.mu.irreducible]

    def irreducible_couple(self, i: int) -> BezoutCouple:
        """An irreducible couple of index i (the lambda one when both are)."""
        row = self.rows[i - 1]
        for c in (row.lam, row.mu):
            if c.irreducible:
                return c
        raise LookupError(f"index {i} has no irreducible couple")


def build_table(d1: int, d3: int) -> BezoutTable:
    """Bezout table for coprime (d1, d3), irreducibility not yet decided."""
    _check_deltas(d1, d3)
    inv_d3, inv_d1 = pow(d3, -1, d1), pow(d1, -1, d3)
    rows = tuple(
        BezoutRow(i, _lambda(i, d1, d3, inv_d3), _mu(i, d1, d3, inv_d1))
        for i in range(1, max(d1, d3) + 1)
    )
    return BezoutTable(d1, d3, rows)


def _reducible(pairs: list[tuple[int, int]], i: int) -> bool:
    # A decomposition x_i = x_j + x_k forces i = j + k.
    a, b = pairs[i - 1]
    for j in range(1, i // 2 + 1):
        aj, bj = pairs[j - 1]
        ak, bk = pairs[i - j - 1]
        if aj + ak == a and bj + bk == b:
            return True
    return False


def classify_irreducible(table: BezoutTable) -> BezoutTable:
    lam = [r.lam.pair for r in table.rows]
    mu = [r.mu.pair for r in table.rows]
    rows = tuple(
        replace(
            r,
            lam=replace(r.lam, irreducible=not _reducible(lam, r.index)),
            mu=replace(r.mu, irreducible=not _reducible(mu, r.index)),
        )
        for r in table.rows
    )
    return replace(table, rows=rows)


def bezout_table(d1: int, d3: int) -> BezoutTable:
    return classify_irreducible(build_table(d1, d3))


def table_delta_set(d1: int, d3: int) -> DeltaSet:
    """Delta set determined by the invariants (d1, d3), via the Bezout table."""
    if d1 < 1 or d3 < 1:
        raise ValueError(f"deltas must be positive, got {(d1, d3)}")
    if d1 == d3:
        return DeltaSet([d1])
    g = gcd(d1, d3)
    table = bezout_table(d1 // g, d3 // g)
    return DeltaSet(g * i for i in table.irreducible_indices())


def delta_set_via_table(g: GeneratorTriple) -> DeltaSet:
    inv = delta_invariants(minimal_presentation(as_triple(g)))
    return table_delta_set(inv.delta1, inv.delta3)


@dataclass(frozen=True)
class TauVector:
    tau: tuple[int, int, int]

    @property
    def plus(self) -> tuple[int, int, int]:
        return tuple(max(t, 0) for t in self.tau)

    @property
    def minus(self) -> tuple[int, int, int]:
        return tuple(max(-t, 0) for t in self.tau)

    @property
    def length(self) -> int:
        return sum(self.tau)


def tau_vector(p: MinimalPresentation, couple: BezoutCouple, inv: Optional[DeltaInvariants] = None) -> TauVector:
    """tau = a*v1 + b*v3 for a couple of the normalized deltas of p."""
    inv = inv or delta_invariants(p)
    d1, d3 = inv.delta1 // inv.g, inv.delta3 // inv.g
    if couple.index < 1 or couple.a * d1 + couple.b * d3 != couple.index:
        raise ValueError(f"{couple} is not a couple of index {couple.index} for ({d1}, {d3})")
    tau = tuple(couple.a * x + couple.b * y for x, y in zip(p.v1, p.v3))
    t = TauVector(tau)
    assert t.length == inv.g * couple.index
    return t


def witness_element(g: GeneratorTriple, couple: BezoutCouple) -> tuple[int, Factorization, Factorization]:
    """An element s with factorizations tau^- and tau^+ at length distance g*i.

    For an irreducible couple no factorization of s has a length strictly
    between the two, so g*i lies in the Delta set of s.
    """
    if couple.irreducible is False:
        raise ValueError("witness elements need an irreducible couple")
    g = as_triple(g)
    p = minimal_presentation(g)
    t = tau_vector(p, couple)
    lo, hi = Factorization.of(g, t.minus), Factorization.of(g, t.plus)
    assert lo.value == hi.value
    return lo.value, lo, hi


def witness_for(g: GeneratorTriple, d: int) -> tuple[BezoutCouple, int, Factorization, Factorization]:
    """Pick an irreducible couple producing the Delta value d and its witness."""
    g = as_triple(g)
    inv = delta_invariants(minimal_presentation(g))
    if d % inv.g:
        raise ValueError(f"{d} is not a multiple of gcd(delta1, delta3) = {inv.g}")
    d1, d3 = inv.delta1 // inv.g, inv.delta3 // inv.g
    i = d // inv.g
    _check_index(i, d1, d3)
    couple = bezout_table(d1, d3).irreducible_couple(i)
    s, lo, hi = witness_element(g, couple)
    return couple, s, lo, hi

"""Delta sets from the subtraction form of Euclid's algorithm.

Starting from (dk, dj) = (max, min) of the two delta invariants, each stage
lists dk, dk - dj, dk - 2*dj, ... down to dk mod dj and then moves on to
(dj, dk mod dj). The nonzero values met along the way form the Delta set.

The couple maps below relate Bezout couples of consecutive stages and are
what makes the shortcut agree with the Bezout table; they are kept for
verification and display, the fast path never builds couples.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from deltakit.bezout import BezoutCouple, Kind
from deltakit.errors import IndexOutOfRange, NotCoprime
from deltakit.presentation import delta_invariants, minimal_presentation
from deltakit.semigroup import DeltaSet, GeneratorTriple, as_triple


@dataclass(frozen=True)
class EuclidStage:
    larger: int
    smaller: int
    values: tuple[int, ...]

    @property
    def quotient(self) -> int:
        return self.larger // self.smaller

    @property
    def remainder(self) -> int:
        return self.larger % self.smaller


@dataclass(frozen=True)
class EuclidTrace:
    stages: tuple[EuclidStage, ...]

    def value_set(self) -> DeltaSet:
        return DeltaSet(v for st in self.stages for v in st.values if v)


def _check_positive(d1: int, d3: int) -> None:
    if d1 < 1 or d3 < 1:
        raise ValueError(f"deltas must be positive, got {(d1, d3)}")


def euclid_trace(d1: int, d3: int) -> EuclidTrace:
    _check_positive(d1, d3)
    k, j = max(d1, d3), min(d1, d3)
    stages = []
    while j:
        # floor quotient: the last value listed is k mod j, which is 0 on
        # the terminal stage and dropped from the set
        q = k // j
        stages.append(EuclidStage(k, j, tuple(k - t * j for t in range(q + 1))))
        k, j = j, k % j
    return EuclidTrace(tuple(stages))


def euclid_remainder_set(d1: int, d3: int) -> DeltaSet:
    _check_positive(d1, d3)
    k, j = max(d1, d3), min(d1, d3)
    seen = set()
    while j:
        r = k % j
        seen.update(range(k, r - 1, -j))
        k, j = j, r
    seen.discard(0)
    return DeltaSet(seen)


def delta_set_fast(g) -> DeltaSet:
    """Delta set of a nonsymmetric <n1, n2, n3>, presentation included.

    Runs on the raw invariants: every value of the trace scales linearly
    with gcd(delta1, delta3), so no normalization is needed.
    """
    inv = delta_invariants(minimal_presentation(as_triple(g)))
    return euclid_remainder_set(inv.delta1, inv.delta3)


# Couples for a pair (dk, dj) are (a, b) with a*dk + b*dj = index.

def _check_couple(x: BezoutCouple, first: int, second: int, limit: int) -> None:
    if x.a * first + x.b * second != x.index:
        raise ValueError(f"{x.pair} does not give {x.index} for ({first}, {second})")
    if not 1 <= x.index <= limit:
        raise IndexOutOfRange(f"index {x.index} outside 1..{limit}")


def couple_descend(x: BezoutCouple, dk: int, dj: int) -> BezoutCouple:
    """Map a couple for (dk, dj) to the couple for (dj, dk mod dj) of the same index."""
    _check_couple(x, dk, dj, dj)
    q = dk // dj
    return BezoutCouple(x.index, x.kind.flipped(), q * x.a + x.b, x.a, x.irreducible)


def couple_lift(x: BezoutCouple, dk: int, dj: int) -> BezoutCouple:
    """Inverse of couple_descend: a couple for (dj, dk mod dj) back to (dk, dj)."""
    _check_couple(x, dj, dk % dj, dj)
    q = dk // dj
    return BezoutCouple(x.index, x.kind.flipped(), x.b, x.a - q * x.b, x.irreducible)


def _kind_in(a: int, b: int, first: int, second: int) -> Kind:
    if 0 < b <= first and a <= 0:
        return Kind.LAMBDA
    if 0 < a <= second and b <= 0:
        return Kind.MU
    raise AssertionError(f"{(a, b)} is not a Bezout couple for {(first, second)}")


def euclid_stage_couples(d1: int, d3: int) -> list[list[tuple[int, tuple[int, int]]]]:
    """Per stage, the (value, couple) entries in (max, min) coordinates.

    Each stage contributes the local couples (1, -t), t = 0..q, whose values
    are dk - t*dj; the zero value of the terminal stage is omitted. They are
    lifted back through every earlier stage.
    """
    _check_positive(d1, d3)
    if gcd(d1, d3) != 1:
        raise NotCoprime(f"gcd({d1}, {d3}) = {gcd(d1, d3)}")
    trace = euclid_trace(d1, d3)
    out = []
    for s, stage in enumerate(trace.stages):
        row = []
        for t, value in enumerate(stage.values):
            if value == 0:
                continue
            a, b = 1, -t
            for prev in reversed(trace.stages[:s]):
                a, b = b, a - prev.quotient * b
            row.append((value, (a, b)))
        out.append(row)
    return out


def euclid_couples(d1: int, d3: int) -> tuple[list[BezoutCouple], list[BezoutCouple]]:
    """Irreducible couples produced by the trace, in (d1, d3) coordinates.

    Returns (lambda couples, mu couples) in order of first appearance.
    Couples are deduplicated; distinct couples sharing an index are both
    kept.
    """
    lam, mu, seen = [], [], set()
    swap = d1 < d3
    for row in euclid_stage_couples(d1, d3):
        for value, (a, b) in row:
            if swap:
                a, b = b, a
            if (a, b) in seen:
                continue
            seen.add((a, b))
            kind = _kind_in(a, b, d1, d3)
            (lam if kind is Kind.LAMBDA else mu).append(BezoutCouple(value, kind, a, b, True))
    return lam, mu

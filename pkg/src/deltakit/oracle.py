"""Brute-force cross-checks for the two Delta set algorithms."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from typing import Optional

from deltakit.bezout import bezout_table, delta_set_via_table, tau_vector
from deltakit.euclid import delta_set_fast
from deltakit.presentation import delta_invariants, minimal_presentation
from deltakit.semigroup import (
    DeltaSet,
    Factorization,
    GeneratorTriple,
    as_triple,
    check_int64,
    delta_of_element,
)

log = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 10**6


def oracle_cap() -> int:
    return int(os.environ.get("DELTAKIT_ORACLE_CAP", DEFAULT_ORACLE_CAP))


def _bit_positions(x: int) -> list[int]:
    bits = bin(x)[:1:-1]
    out = []
    i = bits.find("1")
    while i >= 0:
        out.append(i)
        i = bits.find("1", i + 1)
    return out


def oracle_delta_union(g: GeneratorTriple, bound: int) -> DeltaSet:
    """Union of the Delta sets of all elements 0..bound.

    Length sets are bitmasks built bottom-up from
    L(s) = (L(s - n1) | L(s - n2) | L(s - n3)) << 1, i.e. straight from the
    definition of a factorization. The result equals the union of
    delta_of_element over the same range.

    Two consecutive lengths p < q of s that both come from the same L(s - n_i)
    are consecutive there too, so q - p was already collected at s - n_i.
    Only pairs whose lower end p is missing from some predecessor can be new;
    their upper ends are located for all p at once by letting a carry run
    through the zero gaps of the mask.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    check_int64(bound)
    n1, n2, n3 = g
    masks = [0] * n3  # ring buffer indexed by s mod n3
    masks[0] = 1
    found: set[int] = set()
    for s in range(1, bound + 1):
        a1 = masks[(s - n1) % n3] << 1 if s >= n1 else 0
        a2 = masks[(s - n2) % n3] << 1 if s >= n2 else 0
        a3 = masks[s % n3] << 1 if s >= n3 else 0
        m = a1 | a2 | a3
        masks[s % n3] = m
        if not m & (m - 1):
            continue
        starts = m ^ (a1 & a2 & a3)
        gaps = ((1 << (m.bit_length() + 1)) - 1) ^ m
        old = 0
        for a in (a1, a2, a3):
            old |= (gaps + ((starts & a) << 1)) & a
        ends = (gaps + (starts << 1)) & m
        if ends & ~old:
            found.update(q - p for p, q in zip(_bit_positions(starts), _bit_positions(ends)))
    return DeltaSet(found)


def oracle_delta_union_naive(g: GeneratorTriple, bound: int) -> DeltaSet:
    """Element-by-element union through delta_of_element; slow, for cross-checks."""
    found: set[int] = set()
    for s in range(bound + 1):
        found.update(delta_of_element(g, s))
    return DeltaSet(found)


@dataclass(frozen=True)
class WitnessResult:
    delta: int
    element: int
    shorter: Factorization
    longer: Factorization
    confirmed: bool


@dataclass(frozen=True)
class VerificationReport:
    triple: GeneratorTriple
    fast: DeltaSet
    table: DeltaSet
    oracle: DeltaSet
    bound: int
    witnesses: tuple[WitnessResult, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return (
            self.fast == self.table
            and self.oracle <= self.fast
            and len(self.witnesses) == len(self.fast)
            and all(w.confirmed for w in self.witnesses)
        )

    def to_dict(self) -> dict:
        return {
            "triple": list(self.triple),
            "fast": self.fast.to_list(),
            "table": self.table.to_list(),
            "oracle": self.oracle.to_list(),
            "bound": self.bound,
            "witnesses": [
                {
                    "delta": w.delta,
                    "element": w.element,
                    "shorter": list(w.shorter.coords),
                    "longer": list(w.longer.coords),
                    "confirmed": w.confirmed,
                }
                for w in self.witnesses
            ],
            "verdict": "pass" if self.passed else "fail",
        }


def witnesses(g: GeneratorTriple, deltas: DeltaSet) -> list[WitnessResult]:
    """Build and check a witness element for every value in deltas."""
    p = minimal_presentation(g)
    inv = delta_invariants(p)
    table = bezout_table(inv.delta1 // inv.g, inv.delta3 // inv.g)
    out = []
    for d in deltas:
        try:
            if d % inv.g:
                raise LookupError(d)
            couple = table.irreducible_couple(d // inv.g)
        except (LookupError, IndexError):
            empty = Factorization(0, 0, 0, 0)
            out.append(WitnessResult(d, -1, empty, empty, False))
            continue
        t = tau_vector(p, couple, inv)
        lo, hi = Factorization.of(g, t.minus), Factorization.of(g, t.plus)
        ok = lo.value == hi.value and hi.length - lo.length == d and d in delta_of_element(g, lo.value)
        out.append(WitnessResult(d, lo.value, lo, hi, ok))
    return out


def verify(g, bound: Optional[int] = None) -> VerificationReport:
    g = as_triple(g)
    fast = delta_set_fast(g)
    table = delta_set_via_table(g)
    wit = witnesses(g, fast)
    if bound is None:
        bound = max([w.element for w in wit] + [4 * g.n3])
        cap = oracle_cap()
        if bound > cap:
            log.warning("oracle bound %d capped at %d", bound, cap)
            bound = cap
    oracle = oracle_delta_union(g, bound)
    return VerificationReport(g, fast, table, oracle, bound, tuple(wit))

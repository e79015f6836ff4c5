"""Numerical semigroups with three generators: validation, factorizations, Delta sets.

Everything here works directly from the definitions and is used as the
brute-force reference for the faster methods in :mod:`deltakit.bezout` and
:mod:`deltakit.euclid`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator

from deltakit.errors import (
    ArithmeticOverflow,
    DuplicateGenerator,
    NonPositive,
    NotCoprime,
    NotMinimal,
)

INT64_MAX = 2**63 - 1


def check_int64(*values: int) -> None:
    """Raise ArithmeticOverflow unless every value fits in a signed 64-bit word."""
    for v in values:
        if not -INT64_MAX - 1 <= v <= INT64_MAX:
            raise ArithmeticOverflow(f"{v} does not fit in 64 bits")


@dataclass(frozen=True)
class GeneratorTriple:
    n1: int
    n2: int
    n3: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.n1, self.n2, self.n3))

    def __getitem__(self, i: int) -> int:
        return (self.n1, self.n2, self.n3)[i]

    def evaluate(self, x: Iterable[int]) -> int:
        """The element x1*n1 + x2*n2 + x3*n3."""
        x1, x2, x3 = x
        return x1 * self.n1 + x2 * self.n2 + x3 * self.n3

    def __str__(self) -> str:
        return f"<{self.n1},{self.n2},{self.n3}>"


@dataclass(frozen=True)
class Factorization:
    x1: int
    x2: int
    x3: int
    value: int = field(compare=False)

    @classmethod
    def of(cls, g: GeneratorTriple, x: Iterable[int]) -> "Factorization":
        x1, x2, x3 = x
        if min(x1, x2, x3) < 0:
            raise ValueError(f"factorization coordinates must be nonnegative: {(x1, x2, x3)}")
        return cls(x1, x2, x3, g.evaluate((x1, x2, x3)))

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.x1, self.x2, self.x3)

    @property
    def length(self) -> int:
        return self.x1 + self.x2 + self.x3


class DeltaSet:
    """An immutable, ascending set of positive integers."""

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(sorted({int(v) for v in values}))
        if vals and vals[0] < 1:
            raise ValueError(f"Delta set entries must be positive, got {vals[0]}")
        self._values = vals

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, x: object) -> bool:
        return x in set(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DeltaSet):
            return self._values == other._values
        if isinstance(other, (set, frozenset)):
            return set(self._values) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __le__(self, other: "DeltaSet") -> bool:
        return set(self._values) <= set(other)

    def __or__(self, other: "DeltaSet") -> "DeltaSet":
        return DeltaSet(set(self._values) | set(other))

    def __repr__(self) -> str:
        return f"DeltaSet({list(self._values)})"

    def __str__(self) -> str:
        return str(list(self._values))

    @property
    def min(self) -> int:
        return self._values[0]

    @property
    def max(self) -> int:
        return self._values[-1]

    def to_list(self) -> list[int]:
        return list(self._values)


def two_gen_membership(n: int, p: int, q: int) -> bool:
    """Decide whether n = x*p + y*q has a solution in nonnegative integers."""
    return two_gen_representation(n, p, q) is not None


def two_gen_representation(n: int, p: int, q: int) -> tuple[int, int] | None:
    """The representation n = x*p + y*q (x, y >= 0) with the smallest x, or None.

    Every other representation is obtained by moving (q/d, -p/d) with
    d = gcd(p, q), so the smallest x is found with one modular inverse.
    """
    if p < 1 or q < 1:
        raise ValueError("generators must be positive")
    if n < 0:
        return None
    d = gcd(p, q)
    if n % d:
        return None
    nn, pp, qq = n // d, p // d, q // d
    x = nn * pow(pp, -1, qq) % qq
    if x * pp > nn:
        return None
    return x, (nn - x * pp) // qq


def validate_generators(a: int, b: int, c: int) -> GeneratorTriple:
    raw = (a, b, c)
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"generators must be integers, got {v!r}")
        if v <= 0:
            raise NonPositive(f"generator {v} is not positive")
    check_int64(*raw)
    if len(set(raw)) < 3:
        raise DuplicateGenerator(f"repeated generator in {raw}")
    n1, n2, n3 = sorted(raw)
    if gcd(gcd(n1, n2), n3) != 1:
        raise NotCoprime(f"gcd{(n1, n2, n3)} = {gcd(gcd(n1, n2), n3)}")
    for ni, nj, nk in ((n1, n2, n3), (n2, n1, n3), (n3, n1, n2)):
        if two_gen_membership(ni, nj, nk):
            raise NotMinimal(f"{ni} lies in the monoid generated by {nj} and {nk}")
    return GeneratorTriple(n1, n2, n3)


def as_triple(g) -> GeneratorTriple:
    """Pass GeneratorTriple through; validate anything else as three integers."""
    if isinstance(g, GeneratorTriple):
        return g
    return validate_generators(*g)


def _iter_factorizations(g: GeneratorTriple, s: int) -> Iterator[tuple[int, int, int]]:
    # x3 outer, x2 inner. Only x2 in the residue class that makes the
    # remainder divisible by n1 are visited, so the cost tracks |Z(s)|.
    n1, n2, n3 = g
    d = gcd(n1, n2)
    step = n1 // d
    inv = pow(n2 // d, -1, step)
    for x3 in range(s // n3 + 1):
        rem = s - x3 * n3
        if rem % d:
            continue
        start = (rem // d) * inv % step
        for x2 in range(start, rem // n2 + 1, step):
            yield (rem - x2 * n2) // n1, x2, x3


def enumerate_factorizations(g: GeneratorTriple, s: int) -> frozenset[Factorization]:
    """All factorizations of s; empty when s is not in the semigroup."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    check_int64(s)
    return frozenset(Factorization(x1, x2, x3, s) for x1, x2, x3 in _iter_factorizations(g, s))


def length_set(g: GeneratorTriple, s: int) -> list[int]:
    """Sorted distinct lengths of the factorizations of s."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    check_int64(s)
    return sorted({sum(x) for x in _iter_factorizations(g, s)})


def delta_of_element(g: GeneratorTriple, s: int) -> DeltaSet:
    lengths = length_set(g, s)
    return DeltaSet(b - a for a, b in zip(lengths, lengths[1:]))

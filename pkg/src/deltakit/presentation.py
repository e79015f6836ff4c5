"""Symmetry test, minimal presentation and delta invariants of <n1, n2, n3>."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from deltakit.errors import SearchBoundExceeded, SymmetricSemigroup
from deltakit.semigroup import GeneratorTriple, check_int64, two_gen_membership, two_gen_representation

Vector = tuple[int, int, int]


def is_symmetric(g: GeneratorTriple) -> bool:
    """Structural symmetry test, no Frobenius number involved.

    S is symmetric exactly when, for some split {n_i, n_j} | {n_k} with
    a = gcd(n_i, n_j) > 1, n_k is a non-generator element of
    <n_i/a, n_j/a>.
    """
    n = tuple(g)
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        a = gcd(n[i], n[j])
        if a == 1:
            continue
        p, q = n[i] // a, n[j] // a
        if n[k] not in (p, q) and two_gen_membership(n[k], p, q):
            return True
    return False


def _others(i: int) -> tuple[int, int]:
    return {1: (2, 3), 2: (1, 3), 3: (1, 2)}[i]


def critical_multiple(g: GeneratorTriple, i: int) -> tuple[int, int, int]:
    """Return (c_i, r_ij, r_ik) with j < k the two other indices.

    c_i is the least k >= 1 with k*n_i in <n_j, n_k>; the representation
    c_i*n_i = r_ij*n_j + r_ik*n_k is unique with both parts positive when
    S is not symmetric.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"index must be 1, 2 or 3, got {i}")
    if is_symmetric(g):
        raise SymmetricSemigroup()
    j, k = _others(i)
    ni, nj, nk = g[i - 1], g[j - 1], g[k - 1]
    # nj*nk*ni is always representable, so the scan stops well before the cap.
    cap = nj * nk
    for c in range(1, cap + 1):
        target = c * ni
        rep = two_gen_representation(target, nj, nk)
        if rep is None:
            continue
        r_j, r_k = rep
        if r_j == 0 or r_k == 0 or r_k >= nj // gcd(nj, nk):
            # a zero part, or a second representation reachable by shifting r_k down
            raise SymmetricSemigroup(
                f"semigroup is symmetric: {c}*{ni} has no unique positive representation"
            )
        check_int64(c, r_j, r_k)
        return c, r_j, r_k
    raise SearchBoundExceeded(f"no multiple of {ni} up to {cap} lies in <{nj},{nk}>")


@dataclass(frozen=True)
class MinimalPresentation:
    generators: GeneratorTriple
    c1: int
    c2: int
    c3: int
    r12: int
    r13: int
    r21: int
    r23: int
    r31: int
    r32: int

    @property
    def v1(self) -> Vector:
        return (self.c1, -self.r12, -self.r13)

    @property
    def v2(self) -> Vector:
        return (-self.r21, self.c2, -self.r23)

    @property
    def v3(self) -> Vector:
        return (self.r31, self.r32, -self.c3)

    def relations(self) -> list[tuple[Vector, Vector]]:
        """The three relations as pairs of factorizations, in display order."""
        return [
            ((self.c1, 0, 0), (0, self.r12, self.r13)),
            ((0, self.c2, 0), (self.r21, 0, self.r23)),
            ((0, 0, self.c3), (self.r31, self.r32, 0)),
        ]

    def check(self) -> None:
        """Raise AssertionError if any structural identity fails."""
        n1, n2, n3 = self.generators
        assert self.c1 * n1 == self.r12 * n2 + self.r13 * n3
        assert self.c2 * n2 == self.r21 * n1 + self.r23 * n3
        assert self.c3 * n3 == self.r31 * n1 + self.r32 * n2
        assert self.c1 == self.r21 + self.r31
        assert self.c2 == self.r12 + self.r32
        assert self.c3 == self.r13 + self.r23
        assert all(r > 0 for r in (self.r12, self.r13, self.r21, self.r23, self.r31, self.r32))
        assert self.v2 == tuple(b - a for a, b in zip(self.v1, self.v3))
        assert self.c1 > self.r12 + self.r13
        assert self.c3 < self.r31 + self.r32


def minimal_presentation(g: GeneratorTriple) -> MinimalPresentation:
    c1, r12, r13 = critical_multiple(g, 1)
    c2, r21, r23 = critical_multiple(g, 2)
    c3, r31, r32 = critical_multiple(g, 3)
    p = MinimalPresentation(g, c1, c2, c3, r12, r13, r21, r23, r31, r32)
    p.check()
    return p


@dataclass(frozen=True)
class DeltaInvariants:
    delta1: int
    delta2: int
    delta3: int
    g: int


def delta_invariants(p: MinimalPresentation) -> DeltaInvariants:
    d1 = p.c1 - p.r12 - p.r13
    d3 = p.r31 + p.r32 - p.c3
    d2 = abs(p.c2 - p.r21 - p.r23)
    assert d1 > 0 and d3 > 0
    assert d2 == abs(d1 - d3)
    return DeltaInvariants(d1, d2, d3, gcd(d1, d3))

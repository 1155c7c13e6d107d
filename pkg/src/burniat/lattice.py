"""Picard lattices of blowups of the projective plane.

A class n_h*h + n_1*e_1 + ... + n_k*e_k is stored as the integer tuple
(n_h, n_1, ..., n_k); the intersection form is diagonal with h.h = +1 and
e_i.e_i = -1.  The canonical class is normalised as K = -3h + e_1 + ... + e_k.

All values are immutable and all operations are pure, so everything in this
module can be shared freely.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import lattice_index, bits_add


class DimensionError(ValueError):
    """Classes from lattices of different rank were combined."""


@dataclass(frozen=True)
class YClass:
    """Divisor class on Bl_k P^2, coefficients (n_h, n_1, ..., n_k)."""

    coeffs: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "YClass") -> "YClass":
        self._check(other)
        return YClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "YClass") -> "YClass":
        self._check(other)
        return YClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "YClass":
        return YClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "YClass":
        return YClass(tuple(n * a for a in self.coeffs))

    def dot(self, other: "YClass") -> int:
        self._check(other)
        s = self.coeffs[0] * other.coeffs[0]
        return s - sum(a * b for a, b in zip(self.coeffs[1:], other.coeffs[1:]))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "YClass") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionError(f"rank {len(self.coeffs)} vs {len(other.coeffs)}")

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        names = ["h"] + [f"e{i}" for i in range(1, len(self.coeffs))]
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else mag}{name}")
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out


@dataclass(frozen=True)
class SurfaceLattice:
    """Pic(Bl_k P^2) with its fixed orthogonal basis h, e_1, ..., e_k."""

    k: int

    @property
    def rank(self) -> int:
        return self.k + 1

    def zero(self) -> YClass:
        return YClass((0,) * (self.k + 1))

    def h(self) -> YClass:
        return YClass((1,) + (0,) * self.k)

    def e(self, i: int) -> YClass:
        if not 1 <= i <= self.k:
            raise DimensionError(f"e_{i} not in Bl_{self.k}")
        c = [0] * (self.k + 1)
        c[i] = 1
        return YClass(tuple(c))

    def cls(self, nh: int, *ni: int) -> YClass:
        if len(ni) != self.k:
            raise DimensionError(f"expected {self.k} e-coefficients, got {len(ni)}")
        return YClass((nh,) + tuple(ni))


def intersect(x: YClass, y: YClass) -> int:
    """Intersection number under the diagonal form (+1, -1, ..., -1)."""
    return x.dot(y)


def canonical_class(lat: SurfaceLattice) -> YClass:
    return YClass((-3,) + (1,) * lat.k)


def arithmetic_genus(d: YClass) -> int:
    """p_a(D) = D(D+K)/2 + 1, always an integer on these lattices."""
    k = canonical_class(SurfaceLattice(d.k))
    twice = d.dot(d + k)
    assert twice % 2 == 0
    return twice // 2 + 1


def negative_curves(lat: SurfaceLattice, selfint: int) -> list[YClass]:
    """All classes C with C.C = selfint (-1 or -2) and the matching K-degree.

    Bounded coefficient search over |n_h| <= 3, |n_i| <= 2; the bound covers
    every blowup of the plane with k <= 6 points (checked against the known
    line counts for small k).
    """
    if selfint not in (-1, -2):
        raise ValueError("selfint must be -1 or -2")
    if lat.k > 6:
        raise ValueError("search bound only validated for k <= 6")
    k_cls = canonical_class(lat)
    k_degree = -(2 + selfint)  # adjunction with p_a = 0
    found = []
    for nh in range(-3, 4):
        for ni in itertools.product(range(-2, 3), repeat=lat.k):
            c = YClass((nh,) + ni)
            if c.dot(c) == selfint and c.dot(k_cls) == k_degree:
                found.append(c)
    found.sort(key=lambda c: c.coeffs)
    return found


# ---------------------------------------------------------------------------
# Finitely generated groups Z^r x (Z/2)^m
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MixedElement:
    free: tuple[int, ...]
    bits: tuple[int, ...]

    def __add__(self, other: "MixedElement") -> "MixedElement":
        return MixedElement(
            tuple(a + b for a, b in zip(self.free, other.free)),
            bits_add(self.bits, other.bits),
        )


@dataclass(frozen=True)
class MixedGroup:
    """The group Z^free_rank x (Z/2)^torsion_rank."""

    free_rank: int
    torsion_rank: int

    def element(self, free: tuple[int, ...], bits: tuple[int, ...]) -> MixedElement:
        if len(free) != self.free_rank or len(bits) != self.torsion_rank:
            raise DimensionError("element shape does not match group")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("torsion coordinates must be bits")
        return MixedElement(tuple(free), tuple(bits))

    def zero(self) -> MixedElement:
        return MixedElement((0,) * self.free_rank, (0,) * self.torsion_rank)


def subgroup_index(generators: list[MixedElement], ambient: MixedGroup) -> int | None:
    """Index of the generated subgroup, or None when it is infinite.

    Each (Z/2)-coordinate is encoded as an extra Z-coordinate together with a
    relation row 2*unit; the index is then read off the Hermite normal form
    of the stacked integer rows.
    """
    r, m = ambient.free_rank, ambient.torsion_rank
    rows = [list(g.free) + list(g.bits) for g in generators]
    for j in range(m):
        rel = [0] * (r + m)
        rel[r + j] = 2
        rows.append(rel)
    return lattice_index(rows, r + m)

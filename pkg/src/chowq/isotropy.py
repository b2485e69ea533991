"""Projection and inclusion maps between an isotropic quadric and its inner core.

For a quadric of dimension D with Witt index a, the inner (anisotropic
core) geometry has dimension D - 2a.  Single-factor projection shifts
indices down by a (negatives vanish); inclusion shifts them up.  The
multi-index maps are indexed by signatures (i_1, ..., i_r) with each
i_j in [0, a] or [D-a+1, D]: positions with i_j = a are projected
factorwise, positions with i_j < a require the factor l_(i_j), and
positions with i_j > a require h^(D-i_j); mismatches send a term to 0.
The direct sum of all projections is an isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .basis import (
    ArityError,
    BasisFactor,
    Cycle,
    GeometryError,
    QuadricGeometry,
    Term,
)


@dataclass(frozen=True)
class IsotropySignature:
    """Witt index a plus per-position indices selecting a motivic summand."""

    a: int
    D: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError("Witt index must be positive")
        if self.D < 2 * self.a:
            raise GeometryError(f"D={self.D} is too small for Witt index {self.a}")
        for i in self.indices:
            if not (0 <= i <= self.a or self.D - self.a + 1 <= i <= self.D):
                raise ValueError(
                    f"signature index {i} outside [0,{self.a}] u "
                    f"[{self.D - self.a + 1},{self.D}]"
                )

    @property
    def arity(self) -> int:
        return len(self.indices)

    @property
    def s(self) -> int:
        """Arity of the inner image: number of positions carrying the core."""
        return sum(1 for i in self.indices if i == self.a)

    @property
    def inner_geometry(self) -> QuadricGeometry:
        return QuadricGeometry(self.D - 2 * self.a)


def all_signatures(geometry: QuadricGeometry, a: int, r: int) -> list[IsotropySignature]:
    """Every signature of arity r, in lexicographic index order."""
    choices = list(range(a + 1)) + list(range(geometry.D - a + 1, geometry.D + 1))
    return [
        IsotropySignature(a, geometry.D, idx)
        for idx in itertools.product(choices, repeat=r)
    ]


def _pr_factor(f: BasisFactor, a: int) -> BasisFactor | None:
    i = f.index - a
    return BasisFactor(f.kind, i) if i >= 0 else None


def pr_single(alpha: Cycle, a: int) -> Cycle:
    """Index shift down by a on an arity-1 cycle; negatives vanish."""
    if alpha.arity != 1:
        raise ArityError("pr_single acts on arity-1 cycles")
    inner = QuadricGeometry(alpha.geometry.D - 2 * a)
    acc: set[Term] = set()
    for (f,) in alpha.terms:
        g = _pr_factor(f, a)
        if g is not None:
            acc.add((g,))
    return Cycle(inner, 1, frozenset(acc))


def in_single(alpha: Cycle, a: int) -> Cycle:
    """Index shift up by a, from the inner geometry back to the big one."""
    if alpha.arity != 1:
        raise ArityError("in_single acts on arity-1 cycles")
    outer = QuadricGeometry(alpha.geometry.D + 2 * a)
    acc = frozenset((BasisFactor(f.kind, f.index + a),) for (f,) in alpha.terms)
    return Cycle(outer, 1, acc)


def pr_multi(alpha: Cycle, sig: IsotropySignature) -> Cycle:
    """Projection onto the motivic summand named by the signature."""
    if alpha.geometry.D != sig.D:
        raise GeometryError("signature built for a different geometry")
    if alpha.arity != sig.arity:
        raise ArityError(f"signature arity {sig.arity} != cycle arity {alpha.arity}")
    inner = sig.inner_geometry
    acc: set[Term] = set()
    for term in alpha.terms:
        out: list[BasisFactor] = []
        dead = False
        for f, i in zip(term, sig.indices):
            if i == sig.a:
                g = _pr_factor(f, sig.a)
                if g is None:
                    dead = True
                    break
                out.append(g)
            elif i < sig.a:
                if f != BasisFactor("l", i):
                    dead = True
                    break
            else:
                if f != BasisFactor("h", sig.D - i):
                    dead = True
                    break
        if not dead:
            acc.symmetric_difference_update((tuple(out),))
    return Cycle(inner, sig.s, frozenset(acc))


def in_multi(beta: Cycle, sig: IsotropySignature) -> Cycle:
    """Inclusion from the motivic summand named by the signature."""
    if beta.geometry.D != sig.D - 2 * sig.a:
        raise GeometryError("cycle does not live over the signature's inner geometry")
    if beta.arity != sig.s:
        raise ArityError(f"signature expects inner arity {sig.s}, got {beta.arity}")
    outer = QuadricGeometry(sig.D)
    acc: set[Term] = set()
    for term in beta.terms:
        out: list[BasisFactor] = []
        k = 0
        for i in sig.indices:
            if i == sig.a:
                f = term[k]
                out.append(BasisFactor(f.kind, f.index + sig.a))
                k += 1
            elif i < sig.a:
                out.append(BasisFactor("l", i))
            else:
                out.append(BasisFactor("h", sig.D - i))
        acc.add(tuple(out))
    return Cycle(outer, sig.arity, frozenset(acc))


def generic_point_pullback(alpha: Cycle) -> Cycle:
    """Keep terms led by h^0 and strip that factor; kill everything else."""
    if alpha.arity < 2:
        raise ArityError("generic point pull-back needs arity of at least 2")
    h0 = BasisFactor("h", 0)
    acc = frozenset(t[1:] for t in alpha.terms if t[0] == h0)
    return Cycle(alpha.geometry, alpha.arity - 1, acc)


def descend(alpha: Cycle, a: int) -> Cycle:
    """Inductive restriction: generic point pull-back, then the all-a projection."""
    stripped = generic_point_pullback(alpha)
    sig = IsotropySignature(a, alpha.geometry.D, (a,) * stripped.arity)
    return pr_multi(stripped, sig)


__all__ = [
    "IsotropySignature",
    "all_signatures",
    "descend",
    "generic_point_pullback",
    "in_multi",
    "in_single",
    "pr_multi",
    "pr_single",
]

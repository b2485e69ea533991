"""Correspondence calculus: composition, diagonal class, pull/push maps, derivatives.

Composition pairs the LAST factor of the left cycle against the FIRST
factor of the right cycle: a basis term b1 x ... x br composed with
b'1 x ... x b'r' gives b1 x ... x b(r-1) x b'2 x ... x b'r' when
br * b'1 = l_0, and zero otherwise.  Other pairings are obtained by
conjugating with permutations.
"""

from __future__ import annotations

from .basis import (
    ArityError,
    BasisFactor,
    Cycle,
    GeometryError,
    QuadricGeometry,
    Term,
    single,
)
from .ring import external_product, h_power_term, mul, mul_factor_raw

_L0 = BasisFactor("l", 0)


def _partners(geometry: QuadricGeometry, f: BasisFactor) -> list[BasisFactor]:
    """All factors g with f * g = l_0."""
    out = []
    if f.kind == "h":
        out.append(BasisFactor("l", f.index))
    else:
        if f.index == 0:
            out.append(BasisFactor("h", 0))
        elif f.index <= geometry.d:
            out.append(BasisFactor("h", f.index))
    d = geometry.d
    if f.kind == "l" and f.index == d and ((geometry.D + 1) * (d + 1)) % 2 == 1:
        out.append(BasisFactor("l", d))
    return out


def compose(alpha: Cycle, alpha2: Cycle) -> Cycle:
    """Compose alpha (a correspondence into the last factor) with alpha2 (out of the first)."""
    if alpha.geometry != alpha2.geometry:
        raise GeometryError("cycles live over different geometries")
    if alpha.arity < 1 or alpha2.arity < 1:
        raise ArityError("composition needs arities of at least 1 on both sides")
    if alpha.arity == 1 and alpha2.arity == 1:
        raise ArityError("composition of two arity-1 cycles is not supported")
    geometry = alpha.geometry
    by_first: dict[BasisFactor, list[Term]] = {}
    for t in alpha2.terms:
        by_first.setdefault(t[0], []).append(t[1:])
    acc: set[Term] = set()
    for s in alpha.terms:
        head, last = s[:-1], s[-1]
        for g in _partners(geometry, last):
            for tail in by_first.get(g, ()):
                acc.symmetric_difference_update((head + tail,))
    return Cycle(geometry, alpha.arity + alpha2.arity - 2, frozenset(acc))


def diagonal_class(geometry: QuadricGeometry) -> Cycle:
    """The class of the diagonal in the square, reduced mod 2."""
    d = geometry.d
    terms: list[Term] = []
    for i in range(d + 1):
        terms.append((BasisFactor("h", i), BasisFactor("l", i)))
        terms.append((BasisFactor("l", i), BasisFactor("h", i)))
    if ((geometry.D + 1) * (d + 1)) % 2 == 1:
        terms.append((BasisFactor("h", d), BasisFactor("h", d)))
    return Cycle(geometry, 2, frozenset(terms))


def pullback_projection(alpha: Cycle) -> Cycle:
    """Pull back along the projection forgetting the first factor: prepend h^0."""
    h0 = BasisFactor("h", 0)
    acc = frozenset((h0,) + t for t in alpha.terms)
    return Cycle(alpha.geometry, alpha.arity + 1, acc)


def pushforward_projection(alpha: Cycle) -> Cycle:
    """Push forward along the first projection: l_0 x rest -> rest, else 0."""
    if alpha.arity < 2:
        raise ArityError("projection push-forward needs arity of at least 2")
    acc = frozenset(t[1:] for t in alpha.terms if t[0] == _L0)
    return Cycle(alpha.geometry, alpha.arity - 1, acc)


def pullback_diagonal(alpha: Cycle) -> Cycle:
    """Pull back along the diagonal of the first two factors: multiply them."""
    if alpha.arity < 2:
        raise ArityError("diagonal pull-back needs arity of at least 2")
    acc: set[Term] = set()
    for t in alpha.terms:
        p = mul_factor_raw(alpha.geometry, t[0], t[1])
        if p is not None:
            acc.symmetric_difference_update(((p,) + t[2:],))
    return Cycle(alpha.geometry, alpha.arity - 1, frozenset(acc))


def pushforward_diagonal(alpha: Cycle) -> Cycle:
    """Push forward along the diagonal: duplicate the first factor against the diagonal class."""
    if alpha.arity < 1:
        raise ArityError("diagonal push-forward needs arity of at least 1")
    geometry = alpha.geometry
    delta = diagonal_class(geometry)
    h0 = single(geometry, BasisFactor("h", 0))
    acc: set[Term] = set()
    for t in alpha.terms:
        doubled = mul(external_product(single(geometry, t[0]), h0), delta)
        for pair in doubled.terms:
            acc.symmetric_difference_update((pair + t[1:],))
    return Cycle(geometry, alpha.arity + 1, frozenset(acc))


def derivative(alpha: Cycle, i: int, j: int) -> Cycle:
    """Product with h^i x h^j; valid for orders up to dim(alpha) - D."""
    if alpha.arity != 2:
        raise ArityError("derivatives are defined for arity-2 cycles")
    if alpha.is_zero:
        return alpha
    if not alpha.is_homogeneous:
        raise ValueError("derivatives need a homogeneous cycle")
    order_cap = alpha.dimension - alpha.geometry.D
    if order_cap < 0:
        raise ValueError("derivatives need dimension at least D")
    if i < 0 or j < 0 or i + j > order_cap:
        raise ValueError(f"derivative order {i}+{j} exceeds {order_cap}")
    factor = Cycle(alpha.geometry, 2, frozenset({h_power_term(alpha.geometry, i, j)}))
    return mul(alpha, factor)


def delta_pullback_q(alpha: Cycle) -> Cycle:
    """Pull back along x1 x x2 -> x1 x x2 x x1 x x2: terms map to (b1 b3) x (b2 b4)."""
    if alpha.arity != 4:
        raise ArityError("this pull-back is defined for arity-4 cycles")
    acc: set[Term] = set()
    for t in alpha.terms:
        p = mul_factor_raw(alpha.geometry, t[0], t[2])
        q = mul_factor_raw(alpha.geometry, t[1], t[3])
        if p is not None and q is not None:
            acc.symmetric_difference_update(((p, q),))
    return Cycle(alpha.geometry, 2, frozenset(acc))


__all__ = [
    "compose",
    "delta_pullback_q",
    "derivative",
    "diagonal_class",
    "pullback_diagonal",
    "pullback_projection",
    "pushforward_diagonal",
    "pushforward_projection",
]

"""Graded ring structure on cycles: products, permutations, homogeneous parts.

The arity-1 product is generated by h^(d+1) = 0, h * l_i = l_(i-1) with
l_(-1) = 0, and l_d * l_d = (D+1)(d+1) * l_0 mod 2.  All other l_i * l_j
vanish: writing l_j = h^(d-j) * l_d and applying the generating rules
forces l_i * l_j = h^(d-i) h^(d-j) l_d^2 = 0 for (i, j) != (d, d).
Higher arities multiply factorwise.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .basis import (
    ArityError,
    BasisFactor,
    Cycle,
    GeometryError,
    QuadricGeometry,
    Term,
    cycle,
    term_dimension,
    term_is_essential,
)


def mul_factor_raw(
    geometry: QuadricGeometry, a: BasisFactor, b: BasisFactor
) -> BasisFactor | None:
    """Product of two arity-1 basis factors; None encodes zero."""
    d = geometry.d
    if a.kind == "h" and b.kind == "h":
        s = a.index + b.index
        return BasisFactor("h", s) if s <= d else None
    if a.kind == "h":
        a, b = b, a
    if b.kind == "h":
        # a is l_i, b is h^j
        s = a.index - b.index
        return BasisFactor("l", s) if s >= 0 else None
    # both l factors: only l_d * l_d may survive, with coefficient (D+1)(d+1)
    if a.index == d and b.index == d and ((geometry.D + 1) * (d + 1)) % 2 == 1:
        return BasisFactor("l", 0)
    return None


def mul_factor(geometry: QuadricGeometry, a: BasisFactor, b: BasisFactor) -> Cycle:
    """Arity-1 cycle form of the factor product."""
    r = mul_factor_raw(geometry, a, b)
    terms = [(r,)] if r is not None else []
    return cycle(geometry, 1, terms)


def mul_term(geometry: QuadricGeometry, s: Term, t: Term) -> Term | None:
    """Factorwise product of two terms of equal arity; None encodes zero."""
    out = []
    for a, b in zip(s, t):
        r = mul_factor_raw(geometry, a, b)
        if r is None:
            return None
        out.append(r)
    return tuple(out)


def _check_same(alpha: Cycle, beta: Cycle) -> None:
    if alpha.geometry != beta.geometry:
        raise GeometryError("cycles live over different geometries")
    if alpha.arity != beta.arity:
        raise ArityError(f"arity mismatch: {alpha.arity} vs {beta.arity}")


def mul(alpha: Cycle, beta: Cycle) -> Cycle:
    """Bilinear factorwise product of two cycles of equal geometry and arity."""
    _check_same(alpha, beta)
    acc: set[Term] = set()
    for s in alpha.terms:
        for t in beta.terms:
            p = mul_term(alpha.geometry, s, t)
            if p is not None:
                acc.symmetric_difference_update((p,))
    return Cycle(alpha.geometry, alpha.arity, frozenset(acc))


def external_product(alpha: Cycle, beta: Cycle) -> Cycle:
    """Concatenation of factor tuples, bilinear over terms."""
    if alpha.geometry != beta.geometry:
        raise GeometryError("cycles live over different geometries")
    acc: set[Term] = set()
    for s in alpha.terms:
        for t in beta.terms:
            acc.symmetric_difference_update((s + t,))
    return Cycle(alpha.geometry, alpha.arity + beta.arity, frozenset(acc))


def permute(alpha: Cycle, sigma: Sequence[int]) -> Cycle:
    """Reorder factors: position j of the result holds factor sigma[j] of the input.

    sigma is given 0-based as an ordering of range(arity); permute(permute(a, s), t)
    equals permute(a, composition of s after t).
    """
    if sorted(sigma) != list(range(alpha.arity)):
        raise ValueError(f"{sigma!r} is not a permutation of 0..{alpha.arity - 1}")
    acc = frozenset(tuple(term[j] for j in sigma) for term in alpha.terms)
    return Cycle(alpha.geometry, alpha.arity, acc)


def transpose(alpha: Cycle, i: int = 0, j: int = 1) -> Cycle:
    """Swap factor positions i and j (0-based)."""
    sigma = list(range(alpha.arity))
    sigma[i], sigma[j] = sigma[j], sigma[i]
    return permute(alpha, sigma)


def sym(alpha: Cycle) -> Cycle:
    """GF(2) sum of all permutations of the factors."""
    acc: set[Term] = set()
    for sigma in itertools.permutations(range(alpha.arity)):
        for term in alpha.terms:
            acc.symmetric_difference_update((tuple(term[j] for j in sigma),))
    return Cycle(alpha.geometry, alpha.arity, frozenset(acc))


def homogeneous_component(alpha: Cycle, dim: int) -> Cycle:
    """Sub-sum of terms of the given total dimension."""
    acc = frozenset(
        t for t in alpha.terms if term_dimension(alpha.geometry, t) == dim
    )
    return Cycle(alpha.geometry, alpha.arity, acc)


def homogeneous_components(alpha: Cycle) -> dict[int, Cycle]:
    """All non-zero homogeneous components keyed by dimension."""
    by_dim: dict[int, set[Term]] = {}
    for t in alpha.terms:
        by_dim.setdefault(term_dimension(alpha.geometry, t), set()).add(t)
    return {
        dim: Cycle(alpha.geometry, alpha.arity, frozenset(ts))
        for dim, ts in sorted(by_dim.items())
    }


def essential_part(alpha: Cycle) -> Cycle:
    """Sub-sum of terms containing at least one l-factor."""
    acc = frozenset(t for t in alpha.terms if term_is_essential(t))
    return Cycle(alpha.geometry, alpha.arity, acc)


def intersection(alpha: Cycle, beta: Cycle) -> Cycle:
    """Term-set intersection of two cycles."""
    _check_same(alpha, beta)
    return Cycle(alpha.geometry, alpha.arity, alpha.terms & beta.terms)


def h_power_term(geometry: QuadricGeometry, *exponents: int) -> Term:
    """The non-essential term h^e1 x ... x h^er."""
    return tuple(BasisFactor("h", e) for e in exponents)


def unit(geometry: QuadricGeometry, arity: int) -> Cycle:
    """The multiplicative identity h^0 x ... x h^0."""
    return Cycle(geometry, arity, frozenset({h_power_term(geometry, *([0] * arity))}))


__all__ = [
    "essential_part",
    "external_product",
    "h_power_term",
    "homogeneous_component",
    "homogeneous_components",
    "intersection",
    "mul",
    "mul_factor",
    "mul_factor_raw",
    "mul_term",
    "permute",
    "sym",
    "transpose",
    "unit",
]

"""Basis elements and cycles for the mod-2 Chow groups of powers of a split quadric.

A split quadric of dimension D (with d = floor(D/2)) has the Chow basis
h^0..h^d (plane sections, codimension i) and l_0..l_d (linear subspaces,
dimension i).  For even D the two rulings in the middle dimension are
represented by the single symbol l_d; the conjugate class is h^d + l_d.
A cycle of arity r is a GF(2) sum of r-fold external products of these
factors, stored as a set of factor tuples (adding a term twice cancels it).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class GeometryError(ValueError):
    """Raised for invalid geometry parameters or geometry mismatches."""


class ArityError(ValueError):
    """Raised when cycle arities do not match an operation's requirements."""


class CycleSyntaxError(ValueError):
    """Raised when cycle text does not conform to the grammar."""


class BasisFactor(NamedTuple):
    """A single factor h^i or l_i; kind is "h" or "l", index is in [0, d]."""

    kind: str
    index: int


@dataclass(frozen=True)
class QuadricGeometry:
    """Dimension data of a split quadric: D with derived d = floor(D/2)."""

    D: int

    def __post_init__(self) -> None:
        if self.D < 0:
            raise GeometryError(f"quadric dimension must be non-negative, got {self.D}")

    @property
    def d(self) -> int:
        return self.D // 2

    @property
    def is_even(self) -> bool:
        return self.D % 2 == 0

    def factor_dimension(self, f: BasisFactor) -> int:
        return self.D - f.index if f.kind == "h" else f.index

    def check_factor(self, f: BasisFactor) -> None:
        if f.kind not in ("h", "l"):
            raise ValueError(f"unknown factor kind {f.kind!r}")
        if not 0 <= f.index <= self.d:
            raise GeometryError(
                f"factor index {f.index} out of range [0, {self.d}] for D={self.D}"
            )

    def factors(self) -> list[BasisFactor]:
        """All arity-1 basis factors in canonical order (h's first, index ascending)."""
        return [BasisFactor("h", i) for i in range(self.d + 1)] + [
            BasisFactor("l", i) for i in range(self.d + 1)
        ]


Term = tuple[BasisFactor, ...]


@dataclass(frozen=True)
class BasisElement:
    """An external product of arity >= 1 basis factors."""

    geometry: QuadricGeometry
    factors: Term

    def __post_init__(self) -> None:
        if len(self.factors) < 1:
            raise ArityError("a basis element needs at least one factor")
        for f in self.factors:
            self.geometry.check_factor(f)

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def dimension(self) -> int:
        return sum(self.geometry.factor_dimension(f) for f in self.factors)

    @property
    def codimension(self) -> int:
        return self.arity * self.geometry.D - self.dimension

    @property
    def is_essential(self) -> bool:
        return any(f.kind == "l" for f in self.factors)


def term_dimension(geometry: QuadricGeometry, term: Term) -> int:
    return sum(geometry.factor_dimension(f) for f in term)


def term_is_essential(term: Term) -> bool:
    return any(f.kind == "l" for f in term)


@dataclass(frozen=True)
class Cycle:
    """A GF(2) sum of basis elements of fixed arity (empty term set = zero)."""

    geometry: QuadricGeometry
    arity: int
    terms: frozenset[Term] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ArityError(f"arity must be non-negative, got {self.arity}")
        for term in self.terms:
            if len(term) != self.arity:
                raise ArityError(
                    f"term of length {len(term)} in a cycle of arity {self.arity}"
                )
            for f in term:
                self.geometry.check_factor(f)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        dims = {term_dimension(self.geometry, t) for t in self.terms}
        return len(dims) <= 1

    @property
    def dimension(self) -> int:
        """Common dimension of all terms; fails on non-homogeneous or zero cycles."""
        dims = {term_dimension(self.geometry, t) for t in self.terms}
        if len(dims) != 1:
            raise ValueError("dimension is defined only for homogeneous non-zero cycles")
        return dims.pop()

    @property
    def codimension(self) -> int:
        return self.arity * self.geometry.D - self.dimension

    def __add__(self, other: "Cycle") -> "Cycle":
        if self.geometry != other.geometry:
            raise GeometryError("cannot add cycles over different geometries")
        if self.arity != other.arity:
            raise ArityError("cannot add cycles of different arities")
        return Cycle(self.geometry, self.arity, self.terms ^ other.terms)

    def __contains__(self, term: Term) -> bool:
        return term in self.terms

    def sorted_terms(self) -> list[Term]:
        return sorted(self.terms)


def cycle(geometry: QuadricGeometry, arity: int, terms: Iterable[Term] = ()) -> Cycle:
    """Build a cycle from an iterable of factor tuples with GF(2) cancellation."""
    acc: set[Term] = set()
    for term in terms:
        acc.symmetric_difference_update((term,))
    return Cycle(geometry, arity, frozenset(acc))


def zero(geometry: QuadricGeometry, arity: int) -> Cycle:
    return Cycle(geometry, arity, frozenset())


def single(geometry: QuadricGeometry, *factors: BasisFactor) -> Cycle:
    """The cycle consisting of exactly one basis element."""
    return Cycle(geometry, len(factors), frozenset({tuple(factors)}))


def h(i: int) -> BasisFactor:
    return BasisFactor("h", i)


def l(i: int) -> BasisFactor:
    return BasisFactor("l", i)


def enumerate_basis(
    geometry: QuadricGeometry, r: int, dim: int | None = None
) -> list[BasisElement]:
    """All arity-r basis elements in canonical order, optionally filtered by dimension."""
    if r < 1:
        raise ArityError(f"arity must be at least 1, got {r}")
    if dim is not None and not 0 <= dim <= r * geometry.D:
        raise ValueError(f"dimension {dim} out of range [0, {r * geometry.D}]")
    out = []
    for term in itertools.product(geometry.factors(), repeat=r):
        if dim is not None and term_dimension(geometry, term) != dim:
            continue
        out.append(BasisElement(geometry, term))
    return out


_FACTOR_RE = re.compile(r"([hl])(\d+)")


def parse_cycle(text: str, geometry: QuadricGeometry, arity: int) -> Cycle:
    """Parse "h0 x l2 + l2 x h0" style text; "0" denotes the zero cycle."""
    text = text.strip()
    if text == "0":
        return zero(geometry, arity)
    terms: set[Term] = set()
    pos = 0
    for chunk in text.split(" + "):
        factors = []
        for token in chunk.split(" x "):
            token = token.strip()
            m = _FACTOR_RE.fullmatch(token)
            if m is None:
                raise CycleSyntaxError(
                    f"bad factor {token!r} at position {pos} (expected h<i> or l<i>)"
                )
            f = BasisFactor(m.group(1), int(m.group(2)))
            geometry.check_factor(f)
            factors.append(f)
        if len(factors) != arity:
            raise ArityError(
                f"term {chunk!r} has arity {len(factors)}, expected {arity}"
            )
        terms.symmetric_difference_update((tuple(factors),))
        pos += len(chunk) + 3
    return Cycle(geometry, arity, frozenset(terms))


def render_cycle(c: Cycle) -> str:
    """Canonical text form: terms sorted (h before l, index ascending, lexicographic)."""
    if c.is_zero:
        return "0"
    return " + ".join(
        " x ".join(f"{f.kind}{f.index}" for f in term) for term in c.sorted_terms()
    )


def cycle_to_json(c: Cycle) -> dict:
    return {
        "D": c.geometry.D,
        "r": c.arity,
        "terms": [[[f.kind, f.index] for f in term] for term in c.sorted_terms()],
    }


def cycle_from_json(data: dict) -> Cycle:
    geometry = QuadricGeometry(data["D"])
    return cycle(
        geometry,
        data["r"],
        (tuple(BasisFactor(k, i) for k, i in term) for term in data["terms"]),
    )


__all__ = [
    "ArityError",
    "BasisElement",
    "BasisFactor",
    "Cycle",
    "CycleSyntaxError",
    "GeometryError",
    "QuadricGeometry",
    "cycle",
    "cycle_from_json",
    "cycle_to_json",
    "enumerate_basis",
    "h",
    "l",
    "parse_cycle",
    "render_cycle",
    "single",
    "term_dimension",
    "term_is_essential",
    "zero",
]

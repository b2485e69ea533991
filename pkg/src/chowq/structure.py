"""Restriction system for candidate rational-cycle families.

A RationalFamily holds, for each arity up to a bound, a GF(2) subspace of
cycles presumed to come from the base field.  The closure operator adds
everything forced by rationality: non-essential elements, products,
homogeneous components, permutations, first-position projection/diagonal
pull-backs and push-forwards, and the total Steenrod operation.  The
checkers then test the structural constraints a genuine family must
satisfy (point-degree parity, binary-size, shell-triangle symmetries,
minimal/primordial decomposition, small-quadric shape, descent).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .basis import (
    ArityError,
    BasisFactor,
    Cycle,
    QuadricGeometry,
    Term,
    cycle,
    enumerate_basis,
    term_dimension,
    term_is_essential,
)
from .correspondence import (
    derivative,
    pullback_diagonal,
    pullback_projection,
    pushforward_diagonal,
    pushforward_projection,
)
from .gf2 import Gf2Subspace
from .isotropy import all_signatures, pr_multi
from .ring import (
    essential_part,
    homogeneous_components,
    mul,
    permute,
    sym,
    transpose,
)
from .steenrod import steenrod_k, steenrod_total

# ---------------------------------------------------------------------------
# coordinates: cycles <-> int bitsets over the canonical basis order


_COORD_CACHE: dict[tuple[int, int], tuple[list[Term], dict[Term, int]]] = {}


def _coords(geometry: QuadricGeometry, r: int) -> tuple[list[Term], dict[Term, int]]:
    key = (geometry.D, r)
    if key not in _COORD_CACHE:
        terms = [be.factors for be in enumerate_basis(geometry, r)]
        _COORD_CACHE[key] = (terms, {t: i for i, t in enumerate(terms)})
    return _COORD_CACHE[key]


def encode_cycle(c: Cycle) -> int:
    _, index = _coords(c.geometry, c.arity)
    v = 0
    for t in c.terms:
        v |= 1 << index[t]
    return v


def decode_cycle(geometry: QuadricGeometry, r: int, v: int) -> Cycle:
    terms, _ = _coords(geometry, r)
    acc = []
    while v:
        low = v & -v
        acc.append(terms[low.bit_length() - 1])
        v ^= low
    return Cycle(geometry, r, frozenset(acc))


# ---------------------------------------------------------------------------
# splitting data


@dataclass(frozen=True)
class SplittingData:
    """Higher Witt indices of an anisotropic form, with their partial sums."""

    witt_indices: tuple[int, ...]
    dim_form: int | None = None

    def __post_init__(self) -> None:
        if not self.witt_indices or any(i < 1 for i in self.witt_indices):
            raise ValueError("higher Witt indices must be a non-empty positive sequence")

    @property
    def height(self) -> int:
        return len(self.witt_indices)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """j_0 = 0 followed by the cumulative sums j_1 .. j_height."""
        return (0,) + tuple(itertools.accumulate(self.witt_indices))

    def shells(self) -> range:
        return range(1, self.height + 1)


class FamilyError(ValueError):
    """Raised when a family is structurally unusable for the requested check."""


@dataclass
class RationalFamily:
    """Candidate subgroups of rational cycles, one GF(2) subspace per arity."""

    geometry: QuadricGeometry
    max_arity: int
    groups: dict[int, Gf2Subspace] = field(default_factory=dict)
    splitting: SplittingData | None = None
    closed: bool = False

    def __post_init__(self) -> None:
        if self.max_arity < 1:
            raise ArityError("max_arity must be at least 1")
        for r in range(1, self.max_arity + 1):
            self.groups.setdefault(r, Gf2Subspace())

    def add(self, c: Cycle) -> bool:
        if c.geometry != self.geometry:
            raise ValueError("generator over a different geometry")
        if not 1 <= c.arity <= self.max_arity:
            raise ArityError(f"generator arity {c.arity} outside 1..{self.max_arity}")
        self.closed = False
        return self.groups[c.arity].add(encode_cycle(c))

    def contains(self, c: Cycle) -> bool:
        if c.arity not in self.groups:
            return False
        return encode_cycle(c) in self.groups[c.arity]

    def members(self, r: int) -> list[Cycle]:
        return [decode_cycle(self.geometry, r, v) for v in self.groups[r].rows()]

    def support_terms(self, r: int) -> set[Term]:
        """Basis elements appearing in some member of the arity-r group."""
        return set(decode_cycle(self.geometry, r, self.groups[r].support()).terms)

    def copy(self) -> "RationalFamily":
        return RationalFamily(
            self.geometry,
            self.max_arity,
            {r: s.copy() for r, s in self.groups.items()},
            self.splitting,
            self.closed,
        )


def family_from_generators(
    geometry: QuadricGeometry,
    max_arity: int,
    generators: Iterable[Cycle],
    splitting: SplittingData | None = None,
) -> RationalFamily:
    fam = RationalFamily(geometry, max_arity, splitting=splitting)
    for g in generators:
        fam.add(g)
    return fam


# ---------------------------------------------------------------------------
# closure


def _nonessential_seed(geometry: QuadricGeometry, r: int) -> list[Cycle]:
    d = geometry.d
    out = []
    for exps in itertools.product(range(d + 1), repeat=r):
        out.append(
            Cycle(geometry, r, frozenset({tuple(BasisFactor("h", e) for e in exps)}))
        )
    return out


def closure(family: RationalFamily) -> RationalFamily:
    """Smallest family containing the input and closed under the forced operations."""
    fam = family.copy()
    for r in range(1, fam.max_arity + 1):
        for c in _nonessential_seed(fam.geometry, r):
            fam.groups[r].add(encode_cycle(c))

    def feed(c: Cycle) -> bool:
        if c.is_zero or not 1 <= c.arity <= fam.max_arity:
            return False
        return fam.groups[c.arity].add(encode_cycle(c))

    changed = True
    while changed:
        changed = False
        for r in range(1, fam.max_arity + 1):
            members = fam.members(r)
            for c in members:
                for piece in homogeneous_components(c).values():
                    changed |= feed(piece)
                for sigma in itertools.permutations(range(r)):
                    changed |= feed(permute(c, sigma))
                changed |= feed(steenrod_total(c))
                changed |= feed(pullback_projection(c))
                changed |= feed(pushforward_diagonal(c))
                if r >= 2:
                    changed |= feed(pushforward_projection(c))
                    changed |= feed(pullback_diagonal(c))
            for c1, c2 in itertools.combinations_with_replacement(members, 2):
                changed |= feed(mul(c1, c2))
    fam.closed = True
    return fam


def _require_closed(family: RationalFamily) -> None:
    if not family.closed:
        raise FamilyError("this check needs a closed family; run closure first")


# ---------------------------------------------------------------------------
# elementary checkers


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witnesses: tuple = ()

    def __bool__(self) -> bool:
        return self.passed


def check_springer(family: RationalFamily) -> CheckResult:
    """An anisotropic quadric admits no rational point class l_0 (nor any lone l_i)."""
    geometry = family.geometry
    bad = []
    for i in range(geometry.d + 1):
        if geometry.is_even and i == geometry.D // 2:
            continue  # middle class may be rational without forcing a point
        li = Cycle(geometry, 1, frozenset({(BasisFactor("l", i),)}))
        if family.contains(li):
            bad.append(i)
    return CheckResult("springer", not bad, tuple(bad))


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def binary_cycle(geometry: QuadricGeometry, i: int) -> Cycle:
    return Cycle(
        geometry,
        2,
        frozenset(
            {
                (BasisFactor("h", 0), BasisFactor("l", i)),
                (BasisFactor("l", i), BasisFactor("h", 0)),
            }
        ),
    )


def check_binary_size(family: RationalFamily) -> CheckResult:
    """A rational h^0 x l_i + l_i x h^0 forces D - i + 1 to be a power of 2."""
    geometry = family.geometry
    bad = []
    for i in range(geometry.d + 1):
        if family.contains(binary_cycle(geometry, i)):
            if not _is_power_of_two(geometry.D - i + 1):
                bad.append(i)
    return CheckResult("binary_size", not bad, tuple(bad))


def witt_index_readoff(family: RationalFamily) -> int:
    """One more than the largest rational l_i at arity 1; zero when none exists."""
    geometry = family.geometry
    best = -1
    for i in range(geometry.d + 1):
        li = Cycle(geometry, 1, frozenset({(BasisFactor("l", i),)}))
        if family.contains(li):
            best = i
    return best + 1


def splitting_readoff(family: RationalFamily) -> SplittingData:
    """Recover the partial sums j_q by scanning for h^0 x h^j1 x ... x l_(j-1) terms."""
    _require_closed(family)
    geometry = family.geometry
    d = geometry.d
    js: list[int] = []
    while not js or js[-1] < d + 1:
        r = len(js) + 2
        if r > family.max_arity:
            raise FamilyError(
                f"insufficient data: need arity {r} to read off step {len(js) + 1}"
            )
        support = family.support_terms(r)
        prefix = (BasisFactor("h", 0),) + tuple(BasisFactor("h", j) for j in js)
        best = None
        for j in range(1, d + 2):
            if prefix + (BasisFactor("l", j - 1),) in support:
                best = j
        if best is None:
            raise FamilyError(f"insufficient data: no step found at arity {r}")
        js.append(best)
    indices = tuple(b - a for a, b in zip([0] + js, js))
    return SplittingData(indices)


# ---------------------------------------------------------------------------
# minimal and primordial cycles


def _essential_upper_mask(geometry: QuadricGeometry) -> int:
    """Coordinate mask of essential arity-2 elements of codimension at most D."""
    terms, _ = _coords(geometry, 2)
    mask = 0
    for i, t in enumerate(terms):
        if term_is_essential(t) and term_dimension(geometry, t) >= geometry.D:
            mask |= 1 << i
    return mask


def diagonal_essential_sum(geometry: QuadricGeometry) -> Cycle:
    """The dimension-D identity: sum of all h^i x l_i and l_i x h^i."""
    terms = []
    for i in range(geometry.d + 1):
        terms.append((BasisFactor("h", i), BasisFactor("l", i)))
        terms.append((BasisFactor("l", i), BasisFactor("h", i)))
    return Cycle(geometry, 2, frozenset(terms))


def minimal_cycles(family: RationalFamily, cap: int = 1 << 20) -> list[Cycle]:
    """Atoms of the essential codimension-at-most-D part of the arity-2 group.

    Each atom is the intersection of all group members containing one of its
    basis elements; the atoms are pairwise disjoint and span the part.
    """
    _require_closed(family)
    if family.max_arity < 2:
        raise FamilyError("minimal cycles need an arity-2 group")
    geometry = family.geometry
    mask = _essential_upper_mask(geometry)
    ess = Gf2Subspace(v & mask for v in family.groups[2].rows())
    middle = geometry.d
    ld_ld = (BasisFactor("l", middle), BasisFactor("l", middle))
    _, index = _coords(geometry, 2)
    if ess.support() >> index[ld_ld] & 1:
        raise FamilyError("family contains l_d x l_d in a rational cycle")
    try:
        elements = [v for v in ess.enumerate(cap) if v]
    except ValueError as exc:
        raise FamilyError(str(exc)) from exc
    atoms: dict[int, int] = {}
    support = ess.support()
    bit = 1
    pos = 0
    while bit <= support:
        if support & bit:
            meet = None
            for v in elements:
                if v & bit:
                    meet = v if meet is None else meet & v
            assert meet is not None
            if meet not in ess:
                raise FamilyError(
                    "intersection closure violated; the family is inconsistent"
                )
            atoms[meet] = meet
        bit <<= 1
        pos += 1
    out = [decode_cycle(geometry, 2, v) for v in atoms]
    for a, b in itertools.combinations(atoms, 2):
        if a & b:
            raise FamilyError("minimal cycles are not pairwise disjoint")
    return sorted(out, key=lambda c: (c.dimension, c.sorted_terms()))


def check_minimal_diagonal(family: RationalFamily) -> CheckResult:
    """The dimension-D minimal cycles must sum to the diagonal essential part."""
    try:
        minimals = minimal_cycles(family)
    except FamilyError as exc:
        return CheckResult("minimal_diagonal", False, (str(exc),))
    geometry = family.geometry
    dim_d = [c for c in minimals if c.dimension == geometry.D]
    total = cycle(geometry, 2, itertools.chain.from_iterable(c.terms for c in dim_d))
    ok = total == diagonal_essential_sum(geometry)
    return CheckResult("minimal_diagonal", ok, () if ok else (total,))


@dataclass(frozen=True)
class PrimordialReport:
    minimal_cycles: tuple[Cycle, ...]
    primordial: tuple[Cycle, ...]
    f_map: dict[Cycle, int]


def _highest_derivative_sum(pis: Iterable[Cycle]) -> Cycle | None:
    total = None
    for pi in pis:
        k = pi.dimension - pi.geometry.D
        for i in range(k + 1):
            der = derivative(pi, i, k - i)
            total = der if total is None else total + der
    return total


def primordial_cycles(
    family: RationalFamily, splitting: SplittingData
) -> PrimordialReport:
    """Build the chain of primordial cycles shell by shell."""
    _require_closed(family)
    geometry = family.geometry
    minimals = minimal_cycles(family)
    js = splitting.partial_sums
    if js[-1] != geometry.d + 1:
        raise FamilyError(
            f"splitting sums to {js[-1]}, expected d+1 = {geometry.d + 1}"
        )
    pis: list[Cycle] = []
    f_map: dict[Cycle, int] = {}
    for q in splitting.shells():
        alpha = _highest_derivative_sum(pis)
        missing = [
            i
            for i in range(js[q - 1], js[q])
            if alpha is None
            or (BasisFactor("h", i), BasisFactor("l", i)) not in alpha.terms
        ]
        if not missing:
            continue
        top = (BasisFactor("h", js[q - 1]), BasisFactor("l", js[q] - 1))
        candidates = [m for m in minimals if top in m.terms]
        if not candidates:
            raise FamilyError(
                f"family inconsistent: no minimal cycle contains the shell-{q} top cell"
            )
        pi = candidates[0]
        if pi != transpose(pi):
            raise FamilyError(f"shell-{q} primordial candidate is not symmetric")
        pis.append(pi)
        f_map[pi] = q
    alpha = _highest_derivative_sum(pis)
    if alpha is None or essential_part(alpha) != diagonal_essential_sum(geometry):
        raise FamilyError(
            "highest derivatives of the primordial set do not cover the diagonal cells"
        )
    if 1 not in f_map.values():
        raise FamilyError("the first shell produced no primordial cycle")
    return PrimordialReport(tuple(minimals), tuple(pis), f_map)


# ---------------------------------------------------------------------------
# shell-triangle checkers


def forbidden_cells(
    geometry: QuadricGeometry, splitting: SplittingData, k: int
) -> set[Term]:
    """Cells excluded from any rational cycle of dimension D + k - 1 (k >= 1)."""
    if k < 1:
        return set()
    js = splitting.partial_sums
    out: set[Term] = set()
    for q in splitting.shells():
        iq = splitting.witt_indices[q - 1]
        for i in range(max(iq - k + 1, 0), iq):
            x = js[q - 1] + i
            y = js[q - 1] + i + k - 1
            if x <= geometry.d and y <= geometry.d:
                out.add((BasisFactor("h", x), BasisFactor("l", y)))
                out.add((BasisFactor("l", y), BasisFactor("h", x)))
    return out


def check_forbidden(alpha: Cycle, splitting: SplittingData) -> CheckResult:
    """No homogeneous piece of a rational cycle may meet its forbidden cells."""
    bad = []
    for dim, piece in homogeneous_components(alpha).items():
        k = dim - alpha.geometry.D + 1
        cells = forbidden_cells(alpha.geometry, splitting, k)
        bad.extend(sorted(piece.terms & cells))
    return CheckResult("forbidden_cells", not bad, tuple(bad))


def check_pairs(alpha: Cycle, splitting: SplittingData) -> CheckResult:
    """Left/right shell-triangle mirror symmetry of the diagram of alpha."""
    geometry = alpha.geometry
    js = splitting.partial_sums
    bad = []
    for dim, piece in homogeneous_components(alpha).items():
        k = dim - geometry.D
        if k < 0:
            continue
        for q in splitting.shells():
            for x in range(js[q - 1], js[q] - k):
                y = js[q - 1] + js[q] - 1 - x
                if x + k > geometry.d or y > geometry.d:
                    continue
                left = (BasisFactor("h", x), BasisFactor("l", x + k))
                right = (BasisFactor("l", y), BasisFactor("h", y - k))
                if (left in piece.terms) != (right in piece.terms):
                    bad.append((left, right))
    return CheckResult("pairs", not bad, tuple(bad))


def check_even_essential(alpha: Cycle) -> CheckResult:
    """Every homogeneous piece of codimension at most D has an even point count."""
    bad = []
    for dim, piece in homogeneous_components(alpha).items():
        if dim < alpha.geometry.D:
            continue
        n = sum(1 for t in piece.terms if term_is_essential(t))
        if n % 2:
            bad.append((dim, n))
    return CheckResult("even_essential", not bad, tuple(bad))


def check_neravenstva(
    n_primordial: int,
    n_primordial_inner: int,
    contains_binary: bool,
) -> CheckResult:
    """Counting inequalities between the primordial sets of a quadric and its core."""
    ok = n_primordial - 1 <= n_primordial_inner
    if not contains_binary:
        ok = ok and n_primordial <= n_primordial_inner
    return CheckResult(
        "neravenstva", ok, (n_primordial, n_primordial_inner, contains_binary)
    )


# ---------------------------------------------------------------------------
# small-quadric shape


def known_generator(geometry: QuadricGeometry, a: int) -> Cycle:
    """The symmetric staircase cycle of a small quadric with first index a."""
    d = geometry.d
    if (d + 1) % a != 0:
        raise ValueError(f"{a} does not divide d+1 = {d + 1}")
    terms = [
        (BasisFactor("h", (i - 1) * a), BasisFactor("l", i * a - 1))
        for i in range(1, (d + 1) // a + 1)
    ]
    return sym(Cycle(geometry, 2, frozenset(terms)))


def check_known(family: RationalFamily, splitting: SplittingData) -> CheckResult:
    """Small-quadric structure: divisibility, the staircase cycle, spanning derivatives."""
    _require_closed(family)
    geometry = family.geometry
    a = splitting.witt_indices[0]
    problems: list = []
    if any(iq % a for iq in splitting.witt_indices) or (geometry.d + 1) % a:
        problems.append("divisibility")
        return CheckResult("known", False, tuple(problems))
    pi = known_generator(geometry, a)
    if not family.contains(pi):
        problems.append("staircase-not-rational")
    terms, _ = _coords(geometry, 2)
    for k in range(0, geometry.D + 1):
        mask = 0
        for i, t in enumerate(terms):
            if term_is_essential(t) and term_dimension(geometry, t) == geometry.D + k:
                mask |= 1 << i
        got = Gf2Subspace(v & mask for v in family.groups[2].rows() if v & mask)
        want = Gf2Subspace()
        if k < a:
            for j in range(1, a - k + 1):
                want.add(encode_cycle(derivative(pi, j - 1, a - k - j)))
        if got != want:
            problems.append(("slice", k))
    return CheckResult("known", not problems, tuple(problems))


# ---------------------------------------------------------------------------
# first-index exclusion via the Steenrod operation


def i1_exclusion_via_steenrod(D: int, i1_candidate: int) -> str:
    """Mechanize the 2-adic bound on the first higher Witt index.

    With dim(form) = D + 2 and 2^r the largest power of two dividing
    dim(form) - i1: a candidate i1 > 2^r is refuted by applying the order
    2^r Steenrod operation to the forced top cycle and exhibiting a mirror
    asymmetry; otherwise the candidate survives.  Returns "excluded" or
    "not-excluded".
    """
    if i1_candidate < 1:
        raise ValueError("the first Witt index must be positive")
    dim_form = D + 2
    v = dim_form - i1_candidate
    if v <= 0:
        raise ValueError("candidate exceeds the dimension of the form")
    two_r = v & -v
    if i1_candidate <= two_r:
        return "not-excluded"

    geometry = QuadricGeometry(D)
    i1 = i1_candidate
    known = Cycle(
        geometry,
        2,
        frozenset(
            {
                (BasisFactor("h", 0), BasisFactor("l", i1 - 1)),
                (BasisFactor("l", i1 - 1), BasisFactor("h", 0)),
            }
        ),
    )
    target = (BasisFactor("h", 0), BasisFactor("l", i1 - 1 - two_r))
    partner = (BasisFactor("l", i1 - 1), BasisFactor("h", two_r))
    image = steenrod_k(known, two_r)
    assert target in image.terms and partner not in image.terms

    # No allowed cell of the hypothetical top cycle can feed either side of the
    # mirror pair, so the asymmetry of the image is unavoidable.  Only the
    # first-shell exclusions are available; the rest of the splitting is unknown.
    blocked: set[Term] = set()
    for i in range(1, i1):
        if i <= geometry.d and i + i1 - 1 <= geometry.d:
            blocked.add((BasisFactor("h", i), BasisFactor("l", i + i1 - 1)))
            blocked.add((BasisFactor("l", i + i1 - 1), BasisFactor("h", i)))
    for be in enumerate_basis(geometry, 2, geometry.D + i1 - 1):
        t = be.factors
        if not be.is_essential or t in blocked or t in known.terms:
            continue
        img = steenrod_k(Cycle(geometry, 2, frozenset({t})), two_r)
        if target in img.terms or partner in img.terms:
            return "not-excluded"
    return "excluded"


def allowed_first_witt_indices(dim_form: int) -> set[int]:
    """Candidates for the first higher Witt index surviving the 2-adic exclusion."""
    if dim_form < 3:
        raise ValueError("the form must have dimension at least 3")
    return {
        i1
        for i1 in range(1, dim_form // 2 + 1)
        if i1_exclusion_via_steenrod(dim_form - 2, i1) == "not-excluded"
    }


# ---------------------------------------------------------------------------
# combined driver


def check_all(
    family: RationalFamily,
    inner_family: RationalFamily | None = None,
) -> dict[str, CheckResult]:
    """Close the family and run every applicable checker."""
    fam = family if family.closed else closure(family)
    report: dict[str, CheckResult] = {}
    report["springer"] = check_springer(fam)
    report["binary_size"] = check_binary_size(fam)

    even_bad: list = []
    forbidden_bad: list = []
    pairs_bad: list = []
    for r in range(1, fam.max_arity + 1):
        for member in fam.members(r):
            if r == 2:
                res = check_even_essential(member)
                even_bad.extend(res.witnesses)
                if fam.splitting is not None:
                    res = check_forbidden(member, fam.splitting)
                    forbidden_bad.extend(res.witnesses)
                    res = check_pairs(member, fam.splitting)
                    pairs_bad.extend(res.witnesses)
    report["even_essential"] = CheckResult("even_essential", not even_bad, tuple(even_bad))
    if fam.max_arity >= 2 and fam.splitting is not None:
        report["forbidden_cells"] = CheckResult(
            "forbidden_cells", not forbidden_bad, tuple(forbidden_bad)
        )
        report["pairs"] = CheckResult("pairs", not pairs_bad, tuple(pairs_bad))
        try:
            primordial_cycles(fam, fam.splitting)
            report["primordial"] = CheckResult("primordial", True)
        except FamilyError as exc:
            report["primordial"] = CheckResult("primordial", False, (str(exc),))
        a = fam.splitting.witt_indices[0]
        small = all(iq % a == 0 for iq in fam.splitting.witt_indices) and (
            fam.geometry.d + 1
        ) % a == 0
        if small:
            report["known"] = check_known(fam, fam.splitting)
    elif fam.max_arity >= 2:
        report["minimal_diagonal"] = check_minimal_diagonal(fam)

    if inner_family is not None and fam.splitting is not None:
        inner = inner_family if inner_family.closed else closure(inner_family)
        a = fam.splitting.witt_indices[0]
        if inner.geometry.D != fam.geometry.D - 2 * a:
            raise FamilyError(
                "inner family geometry does not match the first Witt index"
            )
        bad: list = []
        for r in range(1, fam.max_arity + 1):
            for sig in all_signatures(fam.geometry, a, r):
                if not 1 <= sig.s <= inner.max_arity:
                    continue
                for member in fam.members(r):
                    image = pr_multi(member, sig)
                    if not image.is_zero and not inner.contains(image):
                        bad.append((sig.indices, r))
        report["supplement"] = CheckResult("supplement", not bad, tuple(bad))
    return report


__all__ = [
    "CheckResult",
    "FamilyError",
    "PrimordialReport",
    "RationalFamily",
    "SplittingData",
    "allowed_first_witt_indices",
    "binary_cycle",
    "check_all",
    "check_binary_size",
    "check_even_essential",
    "check_forbidden",
    "check_known",
    "check_minimal_diagonal",
    "check_neravenstva",
    "check_pairs",
    "check_springer",
    "closure",
    "decode_cycle",
    "diagonal_essential_sum",
    "encode_cycle",
    "family_from_generators",
    "forbidden_cells",
    "i1_exclusion_via_steenrod",
    "known_generator",
    "minimal_cycles",
    "primordial_cycles",
    "splitting_readoff",
    "witt_index_readoff",
]

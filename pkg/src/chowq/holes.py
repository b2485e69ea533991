"""Construction cycles on the triple power and the dimension-gap certification.

For parameters (n, m, p) the quadric has d = 2^(n-1) + ... + 2^(m-1)
+ 2^(p-1) - 1 and D = 2d, with a = 2^(p-1), b = 2^(m-1), c = 2^m the
first three forced higher Witt indices.  The certification builds the
staircase cycle mu0 on the triple power, enumerates every admissible
defect part mu' (sums of the chi generators in the three slots),
computes

    xi = delta_q^*( compose(S_2a(mu) * (h^0 x h^0 x h^(b-1)), mu) )

and verifies that the cell h^a x l_(b-a-1) survives in every case.
Its survival contradicts the small-quadric structure theorem, which is
what rules out the corresponding dimension value.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .basis import (
    BasisFactor,
    Cycle,
    QuadricGeometry,
    Term,
    render_cycle,
    single,
)
from .correspondence import compose, delta_pullback_q
from .ring import external_product, mul, sym, transpose
from .steenrod import steenrod_k
from .structure import SplittingData

BRUTE_THRESHOLD = 1 << 20


@dataclass(frozen=True)
class HoleParams:
    """Parameters (n, m, p) with the derived geometry and counts."""

    n: int
    m: int
    p: int

    def __post_init__(self) -> None:
        if not (self.n >= 4 and 3 <= self.m <= self.n - 1 and 1 <= self.p <= self.m - 2):
            raise ValueError(
                f"need n >= 4, 3 <= m <= n-1, 1 <= p <= m-2; got {(self.n, self.m, self.p)}"
            )
        assert (self.d - self.a + 1) % self.b == 0
        assert (self.d - self.b - self.a + 1) % self.c == 0
        assert self.b % (4 * self.a) == 0
        assert (self.d + 1) % self.b == self.a % self.b

    @property
    def a(self) -> int:
        return 1 << (self.p - 1)

    @property
    def b(self) -> int:
        return 1 << (self.m - 1)

    @property
    def c(self) -> int:
        return 1 << self.m

    @property
    def d(self) -> int:
        return sum(1 << i for i in range(self.m - 1, self.n)) + (1 << (self.p - 1)) - 1

    @property
    def D(self) -> int:
        return 2 * self.d

    @property
    def geometry(self) -> QuadricGeometry:
        return QuadricGeometry(self.D)

    @property
    def dim_form(self) -> int:
        return self.D + 2

    @property
    def n_b(self) -> int:
        return (self.d - self.a + 1) // self.b

    @property
    def n_c(self) -> int:
        return (self.d - self.b - self.a + 1) // self.c

    @property
    def j_count(self) -> int:
        return (self.c - self.b) // self.a


def forced_witt_sequence(n: int, dim: int) -> SplittingData:
    """Witt indices forced for a form of dimension 2^n + 2^(n-1) + ... + 2^m + 2^p."""
    bits = [i for i in range(dim.bit_length()) if dim >> i & 1]
    if len(bits) < 3:
        raise ValueError(f"dimension {dim} is not of the required shape")
    p = bits[0]
    upper = bits[1:]
    m = upper[0]
    if upper != list(range(m, n + 1)) or not (3 <= m <= n - 1 and 1 <= p <= m - 2):
        raise ValueError(
            f"dimension {dim} is not 2^{n} + ... + 2^m + 2^p with valid (m, p)"
        )
    indices = (1 << (p - 1),) + tuple(1 << i for i in range(m - 1, n))
    return SplittingData(indices, dim_form=dim)


def _h(i: int) -> BasisFactor:
    return BasisFactor("h", i)


def _l(i: int) -> BasisFactor:
    return BasisFactor("l", i)


def build_mu_zero(params: HoleParams) -> Cycle:
    """Symmetrized staircase part of the triple-power construction cycle."""
    g = params.geometry
    a, b = params.a, params.b
    terms = [
        (_h(0), _h((i - 1) * b + a), _l(i * b + a - 1))
        for i in range(1, params.n_b + 1)
    ]
    mu0 = sym(Cycle(g, 3, frozenset(terms)))
    assert mu0.is_homogeneous
    return mu0


def build_chi(params: HoleParams, j: int) -> Cycle:
    """The j-th admissible defect generator carrying h^a on the first slot."""
    if not 1 <= j <= params.j_count:
        raise ValueError(f"j must be in 1..{params.j_count}, got {j}")
    g = params.geometry
    a, b, c = params.a, params.b, params.c
    inner = sym(
        Cycle(
            g,
            2,
            frozenset(
                (_h((i - 1) * c + b + a), _l(i * c + b + a - 1))
                for i in range(1, params.n_c + 1)
            ),
        )
    )
    shifted = mul(inner, single(g, _h((j - 1) * a), _h(c - b - j * a)))
    return external_product(single(g, _h(a)), shifted)


def mu_prime_generators(params: HoleParams) -> list[Cycle]:
    """The 3J admissible defect summands: chi_j per slot, slots 2 and 3 transposed."""
    out = []
    for j in range(1, params.j_count + 1):
        chi = build_chi(params, j)
        out.append(chi)
        out.append(transpose(chi, 0, 1))
        out.append(transpose(chi, 0, 2))
    return out


def _weight(params: HoleParams) -> Cycle:
    return single(params.geometry, _h(0), _h(0), _h(params.b - 1))


def build_xi(mu: Cycle, params: HoleParams) -> Cycle:
    """The contradiction cycle: compose mu with its twisted Steenrod image, pull back."""
    if mu.arity != 3:
        raise ValueError("the construction cycle must have arity 3")
    inner = mul(steenrod_k(mu, 2 * params.a), _weight(params))
    composite = compose(inner, mu)
    xi = delta_pullback_q(composite)
    if not xi.is_zero:
        assert xi.is_homogeneous
        assert xi.dimension == 2 * params.d + params.b - 2 * params.a - 1
    return xi


def target_cell(params: HoleParams) -> Term:
    return (_h(params.a), _l(params.b - params.a - 1))


def first_summand_formula(params: HoleParams) -> Cycle:
    """Closed form of the staircase-only part of the contradiction cycle."""
    g = params.geometry
    a, b = params.a, params.b
    terms = []
    for i in range(1, params.n_b + 1):
        terms.append((_h((i - 1) * b + a), _l(i * b - a - 1)))
        terms.append((_h((i - 1) * b + 3 * a), _l(i * b + a - 1)))
    return sym(Cycle(g, 2, frozenset(terms)))


# ---------------------------------------------------------------------------
# certification


def _xi_from_parts(
    mu0_terms: frozenset[Term],
    s_parts: list[frozenset[Term]],
    gen_terms: list[frozenset[Term]],
    selection: int,
    params: HoleParams,
) -> Cycle:
    """Assemble mu and its Steenrod image for one defect selection, then build xi."""
    g = params.geometry
    mu_terms = set(mu0_terms)
    s_terms = set(s_parts[0])
    for k in range(len(gen_terms)):
        if selection >> k & 1:
            mu_terms ^= gen_terms[k]
            s_terms ^= s_parts[k + 1]
    mu = Cycle(g, 3, frozenset(mu_terms))
    inner = mul(Cycle(g, 3, frozenset(s_terms)), _weight(params))
    return delta_pullback_q(compose(inner, mu))


def _tables(params: HoleParams):
    mu0 = build_mu_zero(params)
    gens = mu_prime_generators(params)
    k = 2 * params.a
    s_parts = [steenrod_k(mu0, k).terms] + [steenrod_k(g, k).terms for g in gens]
    return mu0.terms, s_parts, [g.terms for g in gens]


def _brute_range(args) -> tuple[int, list[int]]:
    n, m, p, lo, hi = args
    params = HoleParams(n, m, p)
    mu0_terms, s_parts, gen_terms = _tables(params)
    target = target_cell(params)
    failures = []
    for case in range(lo, hi):
        xi = _xi_from_parts(mu0_terms, s_parts, gen_terms, case, params)
        if target not in xi.terms:
            failures.append(case)
    return hi - lo, failures


def verify_contradiction(
    params: HoleParams, method: str | None = None, jobs: int = 1
) -> dict:
    """Certify that the target cell survives in xi for every admissible defect part.

    method "brute" enumerates all 2^(3J) defect selections; "bilinear" checks
    the parity of the target coefficient block by block.  The default picks
    brute force below BRUTE_THRESHOLD cases.
    """
    n_cases = 1 << (3 * params.j_count)
    if method is None:
        method = "brute" if n_cases <= BRUTE_THRESHOLD else "bilinear"
    if method not in ("brute", "bilinear"):
        raise ValueError(f"unknown method {method!r}")

    mu0 = build_mu_zero(params)
    gens = mu_prime_generators(params)
    target = target_cell(params)
    cert: dict = {
        "params": {"n": params.n, "m": params.m, "p": params.p},
        "geometry": {"D": params.D, "d": params.d},
        "constants": {
            "a": params.a,
            "b": params.b,
            "c": params.c,
            "generator_count": 3 * params.j_count,
        },
        "method": method,
        "target": render_cycle(single(params.geometry, *target)),
        "mu0": render_cycle(mu0),
        "generators": [render_cycle(g) for g in gens],
    }

    if method == "brute":
        if jobs > 1:
            chunk = (n_cases + jobs - 1) // jobs
            spans = [
                (params.n, params.m, params.p, lo, min(lo + chunk, n_cases))
                for lo in range(0, n_cases, chunk)
            ]
            checked = 0
            failures: list[int] = []
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for done, fails in pool.map(_brute_range, spans):
                    checked += done
                    failures.extend(fails)
        else:
            checked, failures = _brute_range(
                (params.n, params.m, params.p, 0, n_cases)
            )
        cert["cases"] = checked
        cert["failures"] = sorted(failures)
        cert["passed"] = checked == n_cases and not failures
    else:
        parts = [mu0] + gens
        k = 2 * params.a
        s_parts = [steenrod_k(x, k) for x in parts]
        blocks = {}
        bad = []
        for iy, sy in enumerate(s_parts):
            inner = mul(sy, _weight(params))
            for ix, x in enumerate(parts):
                xi_block = delta_pullback_q(compose(inner, x))
                bit = 1 if target in xi_block.terms else 0
                blocks[f"{ix},{iy}"] = bit
                expected = 1 if ix == iy == 0 else 0
                if bit != expected:
                    bad.append((ix, iy))
        cert["blocks"] = blocks
        cert["cases"] = n_cases
        cert["failures"] = bad
        cert["passed"] = not bad
    return cert


def certificate_json(cert: dict) -> str:
    return json.dumps(cert, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# dimension and splitting-pattern formulas


def dim_In_set(n: int, cap: int) -> set[int]:
    """Realized dimensions of anisotropic forms in the n-th power ideal, up to cap."""
    out = {(1 << (n + 1)) - (1 << i) for i in range(1, n + 2)}
    out = {v for v in out if v <= cap}
    out.update(range(1 << (n + 1), cap + 1, 2))
    return out


def small_splitting_pattern(n: int, m: int) -> set[int]:
    """Anisotropic-kernel dimensions of a small form: 2^(n+1) - 2^i for i = m..n+1."""
    if not 1 <= m <= n + 1:
        raise ValueError(f"need 1 <= m <= n+1, got m={m}")
    return {(1 << (n + 1)) - (1 << i) for i in range(m, n + 2)}


def vishik_pattern(n: int, m: int) -> set[int]:
    """The realizable splitting pattern with an even-dimensional tail up to m * 2^n."""
    out = {(1 << (n + 1)) - (1 << i) for i in range(1, n + 2)}
    out.update(range(1 << (n + 1), m * (1 << n) + 1, 2))
    return out


def _is_power_of_two(v: int) -> bool:
    return v > 0 and v & (v - 1) == 0


def gap_certificate(pattern: set[int]) -> tuple[bool, list[tuple[int, int, int]]]:
    """Check every jump of size > 2 against the binary-size restriction.

    For adjacent values b < c the quadric realizing the jump has
    dim - i1 + 1 = (b + c)/2 - 1, which must be a power of 2 strictly
    inside (b, c).  A jump is exempt when the next jump up is exactly
    half its size: such pairs belong to the halving head chain of a
    small form, where the restriction argument does not apply.  Returns
    (passed, violations as (b, c, witness)).
    """
    values = sorted(pattern)
    gaps = [hi - lo for lo, hi in zip(values, values[1:])]
    bad = []
    for k, (lo, hi) in enumerate(zip(values, values[1:])):
        g = gaps[k]
        if g <= 2:
            continue
        if k + 1 < len(gaps) and 2 * gaps[k + 1] == g:
            continue
        w = (lo + hi) // 2 - 1
        if not (_is_power_of_two(w) and lo < w < hi):
            bad.append((lo, hi, w))
    return (not bad, bad)


def check_min_splitting(n: int, pattern: set[int]) -> bool:
    """The least positive pattern value must be a power of 2 of size at least 2^n."""
    positive = [v for v in pattern if v > 0]
    if not positive:
        return False
    least = min(positive)
    return least >= (1 << n) and _is_power_of_two(least)


__all__ = [
    "BRUTE_THRESHOLD",
    "HoleParams",
    "build_chi",
    "build_mu_zero",
    "build_xi",
    "certificate_json",
    "check_min_splitting",
    "dim_In_set",
    "first_summand_formula",
    "forced_witt_sequence",
    "gap_certificate",
    "mu_prime_generators",
    "small_splitting_pattern",
    "target_cell",
    "vishik_pattern",
    "verify_contradiction",
]

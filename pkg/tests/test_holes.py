"""Tests for the triple-power construction and the dimension-gap formulas."""

import json

import pytest

from chowq.basis import enumerate_basis, h, l, single
from chowq.correspondence import compose, delta_pullback_q
from chowq.holes import (
    HoleParams,
    build_chi,
    build_mu_zero,
    build_xi,
    certificate_json,
    check_min_splitting,
    dim_In_set,
    first_summand_formula,
    forced_witt_sequence,
    gap_certificate,
    mu_prime_generators,
    small_splitting_pattern,
    target_cell,
    verify_contradiction,
    vishik_pattern,
)
from chowq.isotropy import generic_point_pullback
from chowq.ring import mul, sym
from chowq.steenrod import steenrod_k

VALID_PARAMS = [
    (4, 3, 1),
    (5, 3, 1), (5, 4, 1), (5, 4, 2),
    (6, 3, 1), (6, 4, 1), (6, 4, 2), (6, 5, 1), (6, 5, 2), (6, 5, 3),
]


# ---------------------------------------------------------------------------
# parameters


def test_params_derived_values():
    p = HoleParams(4, 3, 1)
    assert (p.a, p.b, p.c, p.d, p.D) == (1, 4, 8, 12, 24)
    assert (p.n_b, p.n_c, p.j_count) == (3, 1, 4)
    assert p.dim_form == 26
    q = HoleParams(5, 4, 2)
    assert (q.a, q.b, q.c, q.d, q.D) == (2, 8, 16, 25, 50)
    assert (q.n_b, q.n_c, q.j_count) == (3, 1, 4)


def test_params_validation():
    for bad in [(3, 3, 1), (4, 3, 2), (4, 2, 1), (4, 4, 1), (5, 4, 3)]:
        with pytest.raises(ValueError):
            HoleParams(*bad)
    for ok in VALID_PARAMS:
        HoleParams(*ok)


def test_forced_witt_sequence():
    s = forced_witt_sequence(4, 26)
    assert s.witt_indices == (1, 4, 8) and s.dim_form == 26
    assert forced_witt_sequence(5, 52).witt_indices == (2, 8, 16)
    assert forced_witt_sequence(5, 50).witt_indices == (1, 8, 16)
    # consistent with the parameter object: first index is a = 2^(p-1)
    assert forced_witt_sequence(5, 52).witt_indices[0] == HoleParams(5, 4, 2).a
    with pytest.raises(ValueError):
        forced_witt_sequence(4, 20)
    with pytest.raises(ValueError):
        forced_witt_sequence(4, 28)  # p = m - 1 is too large


# ---------------------------------------------------------------------------
# construction cycles


def test_mu_zero_shape():
    p = HoleParams(4, 3, 1)
    mu0 = build_mu_zero(p)
    assert len(mu0.terms) == 18
    assert mu0.is_homogeneous and mu0.dimension == 51
    g = p.geometry
    assert (h(0), h(1), l(4)) in mu0.terms
    assert (l(4), h(1), h(0)) in mu0.terms
    # the first slot h^0 projection recovers the two-slot staircase
    want = sym(
        single(g, h(1), l(4)) + single(g, h(5), l(8)) + single(g, h(9), l(12))
    )
    assert generic_point_pullback(mu0) == want


def test_mu_zero_h_indices_divisible():
    p = HoleParams(5, 4, 2)
    for t in build_mu_zero(p).terms:
        for f in t:
            if f.kind == "h":
                assert f.index % p.a == 0 or f.index == 0


def test_chi_shape():
    p = HoleParams(4, 3, 1)
    chi1 = build_chi(p, 1)
    g = p.geometry
    assert chi1 == single(g, h(1), h(5), l(9)) + single(g, h(1), l(12), h(8))
    for j in range(1, p.j_count + 1):
        for t in build_chi(p, j).terms:
            assert t[0] == h(p.a)
            for f in t:
                if f.kind == "h":
                    assert f.index % p.a == 0
    with pytest.raises(ValueError):
        build_chi(p, 0)
    with pytest.raises(ValueError):
        build_chi(p, p.j_count + 1)


def test_generator_count():
    for nmp in [(4, 3, 1), (5, 4, 2)]:
        p = HoleParams(*nmp)
        gens = mu_prime_generators(p)
        assert len(gens) == 3 * p.j_count == 12
        assert len(set(gens)) == len(gens)


def test_staircase_steenrod_image():
    p = HoleParams(4, 3, 1)
    g = p.geometry
    got = steenrod_k(build_mu_zero(p), 2 * p.a)
    want = sym(
        single(g, h(0), h(2), l(3))
        + single(g, h(0), h(6), l(7))
        + single(g, h(0), h(10), l(11))
    )
    assert got == want


@pytest.mark.parametrize("nmp", VALID_PARAMS)
def test_xi_homogeneous(nmp):
    p = HoleParams(*nmp)
    xi = build_xi(build_mu_zero(p), p)
    assert not xi.is_zero
    assert xi.is_homogeneous
    assert xi.dimension == 2 * p.d + p.b - 2 * p.a - 1


def test_xi_rejects_wrong_arity():
    p = HoleParams(4, 3, 1)
    with pytest.raises(ValueError):
        build_xi(single(p.geometry, h(0), l(0)), p)


def test_first_summand_exact():
    p = HoleParams(4, 3, 1)
    xi = build_xi(build_mu_zero(p), p)
    assert xi == first_summand_formula(p)
    assert len(xi.terms) == 12
    assert target_cell(p) == (h(1), l(2))
    assert target_cell(p) in xi.terms


def test_no_h_a_defects_do_not_reach_target():
    """Any admissible-shaped defect avoiding h^a leaves the target coefficient alone."""
    p = HoleParams(4, 3, 1)
    g = p.geometry
    mu0 = build_mu_zero(p)
    dim = mu0.dimension
    a = p.a
    candidates = []
    for t in (be.factors for be in enumerate_basis(g, 3, dim)):
        if any(f.kind == "h" and f.index == 0 for f in t):
            continue
        if any(f.kind == "h" and f.index % a for f in t):
            continue
        if any(f.kind == "h" and f.index == a for f in t):
            continue
        candidates.append(single(g, *t))
    assert candidates
    target = target_cell(p)
    k = 2 * p.a
    s_mu0 = steenrod_k(mu0, k)
    weight = single(g, h(0), h(0), h(p.b - 1))
    for nu in candidates:
        s_nu = steenrod_k(nu, k)
        for left, right in ((s_nu, mu0), (s_mu0, nu), (s_nu, nu)):
            block = delta_pullback_q(compose(mul(left, weight), right))
            assert target not in block.terms


# ---------------------------------------------------------------------------
# certification


@pytest.mark.parametrize("nmp", [(4, 3, 1), (5, 4, 2)])
def test_verify_both_methods(nmp):
    p = HoleParams(*nmp)
    brute = verify_contradiction(p, method="brute")
    bilinear = verify_contradiction(p, method="bilinear")
    assert brute["passed"] and bilinear["passed"]
    assert brute["cases"] == bilinear["cases"] == 4096
    assert brute["failures"] == [] and bilinear["failures"] == []
    assert brute["target"] == bilinear["target"]


def test_verify_parallel_matches():
    p = HoleParams(4, 3, 1)
    serial = verify_contradiction(p, method="brute")
    parallel = verify_contradiction(p, method="brute", jobs=2)
    assert parallel["passed"] and parallel["cases"] == serial["cases"]


def test_verify_default_method_and_errors():
    p = HoleParams(4, 3, 1)
    cert = verify_contradiction(p)
    assert cert["method"] == "brute"  # 4096 cases is under the threshold
    with pytest.raises(ValueError):
        verify_contradiction(p, method="magic")


def test_certificate_json_roundtrip():
    p = HoleParams(4, 3, 1)
    cert = verify_contradiction(p, method="bilinear")
    data = json.loads(certificate_json(cert))
    assert data["passed"] is True
    assert data["params"] == {"n": 4, "m": 3, "p": 1}
    assert data["blocks"]["0,0"] == 1


# ---------------------------------------------------------------------------
# dimension and splitting-pattern formulas


def test_dim_in_set():
    assert dim_In_set(3, 20) == {0, 8, 12, 14, 16, 18, 20}
    assert 10 not in dim_In_set(3, 100)
    assert 26 not in dim_In_set(4, 100)


def test_dim_in_set_gaps():
    for n in range(1, 11):
        s = dim_In_set(n, 1 << (n + 2))
        # no positive value below 2^n, and none strictly between 2^(n+1)-2 and 2^(n+1)
        assert not {v for v in s if 0 < v < (1 << n)}
        assert not {v for v in s if (1 << (n + 1)) - 2 < v < (1 << (n + 1))}


def test_patterns():
    assert vishik_pattern(2, 3) == {0, 4, 6, 8, 10, 12}
    assert small_splitting_pattern(4, 2) == {0, 16, 24, 28}
    assert len(small_splitting_pattern(4, 2)) - 1 == 3  # height
    assert small_splitting_pattern(4, 5) == {0}
    with pytest.raises(ValueError):
        small_splitting_pattern(4, 6)


def test_small_patterns_realized():
    for n in range(1, 7):
        realized = dim_In_set(n, 1 << (n + 1)) | {0}
        for m in range(1, n + 2):
            assert small_splitting_pattern(n, m) <= realized


def test_gap_certificate():
    ok, bad = gap_certificate({0, 4, 6, 8, 10, 12})
    assert ok and bad == []
    ok, bad = gap_certificate({0, 8, 12})
    assert not ok and bad == [(8, 12, 9)]
    for n in range(1, 6):
        for m in range(1, 6):
            ok, bad = gap_certificate(vishik_pattern(n, m))
            assert ok, (n, m, bad)


def test_check_min_splitting():
    for n in range(1, 6):
        assert check_min_splitting(n, vishik_pattern(n, 3))
    assert not check_min_splitting(3, vishik_pattern(2, 3))
    assert not check_min_splitting(1, {0, 3, 6})
    assert not check_min_splitting(1, {0})

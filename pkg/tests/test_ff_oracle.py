"""Finite-field checks.

The Grassmannian step counts are cross-checked against a brute force that
shares nothing with the package: it builds its own bilinear forms and its
own reduced-echelon subspace enumerator.
"""
import itertools

import numpy as np
import pytest

from nilorbit import (
    DEFAULT_BUDGET,
    Family,
    FlagCount,
    GrassStep,
    LeviType,
    descriptor,
    e_polynomial,
    enumerate_valid,
    fiber_point_count,
    grassmannian_count,
    minimal_richardson_orbits,
    parse_partition,
    polarizations,
    realize,
    resolve_budget,
)


def P(text):
    return parse_partition(text)


def L(text, fam=Family.B):
    return LeviType.from_text(text, fam)


# --- independent brute force ------------------------------------------------


def rref_subspaces(n, m, p):
    """Every m-dimensional subspace of F_p^n, as a reduced-echelon basis."""
    for pivots in itertools.combinations(range(n), m):
        free = [
            (r, c)
            for r in range(m)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free)):
            mat = np.zeros((m, n), dtype=np.int64)
            for r, c in zip(range(m), pivots):
                mat[r, c] = 1
            for (r, c), v in zip(free, values):
                mat[r, c] = v
            yield mat


def brute_isotropic_count(form, m, p):
    n = form.shape[0]
    total = 0
    for mat in rref_subspaces(n, m, p):
        if not np.any(mat @ form @ mat.T % p):
            total += 1
    return total


def split_symmetric_form(n):
    return np.flipud(np.eye(n, dtype=np.int64))


def symplectic_form(n):
    form = np.flipud(np.eye(n, dtype=np.int64))
    form[n // 2 :] *= -1
    return form


BRUTE_STEPS = [
    GrassStep("OG", 0, 0),
    GrassStep("OG", 0, 1),
    GrassStep("OG", 1, 2),
    GrassStep("OG", 1, 3),
    GrassStep("OG", 2, 4),
    GrassStep("OG", 2, 5),
    GrassStep("OG", 3, 6),
    GrassStep("IG", 1, 2),
    GrassStep("IG", 2, 4),
    GrassStep("IG", 3, 6),
]


class TestGrassmannianCounts:
    @pytest.mark.parametrize("step", BRUTE_STEPS, ids=str)
    def test_against_bruteforce_p3(self, step):
        form = (
            split_symmetric_form(step.n)
            if step.kind == "OG"
            else symplectic_form(step.n)
        )
        assert grassmannian_count(step, 3) == brute_isotropic_count(form, step.m, 3)

    @pytest.mark.parametrize("step", BRUTE_STEPS[:6] + BRUTE_STEPS[7:9], ids=str)
    def test_against_bruteforce_p5(self, step):
        form = (
            split_symmetric_form(step.n)
            if step.kind == "OG"
            else symplectic_form(step.n)
        )
        assert grassmannian_count(step, 5) == brute_isotropic_count(form, step.m, 5)

    def test_modulus_must_be_odd_prime(self):
        with pytest.raises(ValueError):
            grassmannian_count(GrassStep("OG", 1, 2), 4)


class TestRealize:
    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            realize(P("2,1"), Family.B, 3)
        with pytest.raises(ValueError):
            realize(P("3,1,1"), Family.B, 9)
        with pytest.raises(ValueError):
            realize(P("3,1,1"), Family.B, 2)
        with pytest.raises(ValueError):
            realize(P("3,1,1"), Family.B, 3, convention="sideways")

    def test_sweep_validates_internally(self):
        for fam, n in ((Family.B, 7), (Family.C, 6), (Family.D, 6)):
            for p in enumerate_valid(n, fam):
                for modulus in (3, 5):
                    for conv in ("default", "alternate"):
                        real = realize(p, fam, modulus, convention=conv)
                        assert real.dim == p.n

    def test_nilpotency_and_rank_pattern(self):
        p = P("3,3,2,1,1")
        real = realize(p, Family.C, 5)
        e = real.e
        for k in range(1, 4):
            assert _rank(e, k, 5) == sum(max(x - k, 0) for x in p.parts)
        assert not np.any(_pow(e, 3, 5))


def _pow(e, k, p):
    out = np.eye(e.shape[0], dtype=np.int64)
    for _ in range(k):
        out = out @ e % p
    return out


def _rank(e, k, p):
    mat = _pow(e, k, p) % p
    # row reduce over F_p
    mat = mat.copy()
    rank = 0
    rows, cols = mat.shape
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if mat[r, c] % p), None)
        if piv is None:
            continue
        mat[[rank, piv]] = mat[[piv, rank]]
        mat[rank] = mat[rank] * pow(int(mat[rank, c]), -1, p) % p
        for r in range(rows):
            if r != rank and mat[r, c] % p:
                mat[r] = (mat[r] - mat[r, c] * mat[rank]) % p
        rank += 1
    return rank


class TestFiberCounts:
    @pytest.mark.parametrize(
        "orbit,levi,expected3,expected5",
        [
            ("2,2,1", "1;3", 4, 6),
            ("3,1,1", "2;1", 2, 2),
            ("2,2,2,2,1", "4;1", 1, 1),
        ],
    )
    def test_spots(self, orbit, levi, expected3, expected5):
        for modulus, expected in ((3, expected3), (5, expected5)):
            real = realize(P(orbit), Family.B, modulus)
            res = fiber_point_count(real, L(levi))
            assert res.count == expected
            assert res.skipped is None

    def test_counts_match_e_polynomials(self):
        for fam, n in ((Family.B, 7), (Family.C, 6), (Family.D, 6)):
            for p in enumerate_valid(n, fam):
                for r in minimal_richardson_orbits(p, fam):
                    for levi in polarizations(r, fam):
                        expected = e_polynomial(descriptor(p, fam, r, levi))
                        for modulus in (3, 5):
                            real = realize(p, fam, modulus)
                            res = fiber_point_count(real, levi)
                            assert res.count == expected(modulus), (p, levi, modulus)

    def test_conventions_agree(self):
        for p, fam in ((P("2,2,1"), Family.B), (P("2,1,1"), Family.C), (P("2,2,1,1"), Family.D)):
            for r in minimal_richardson_orbits(p, fam):
                for levi in polarizations(r, fam):
                    counts = {
                        fiber_point_count(realize(p, fam, 3, convention=conv), levi).count
                        for conv in ("default", "alternate")
                    }
                    assert len(counts) == 1

    def test_empty_levi_detects_zero(self):
        real = realize(P("1,1,1,1,1"), Family.B, 3)
        assert fiber_point_count(real, L(";5")).count == 1
        real = realize(P("3,1,1"), Family.B, 3)
        assert fiber_point_count(real, L(";5")).count == 0

    def test_mismatched_levi_rejected(self):
        real = realize(P("2,2,1"), Family.B, 3)
        with pytest.raises(ValueError):
            fiber_point_count(real, L("1;2", Family.C))
        with pytest.raises(ValueError):
            fiber_point_count(real, L("1;1"))


class TestBudget:
    def test_resolve_precedence(self, monkeypatch):
        monkeypatch.delenv("NILORBIT_ORACLE_BUDGET", raising=False)
        assert resolve_budget() == DEFAULT_BUDGET
        monkeypatch.setenv("NILORBIT_ORACLE_BUDGET", "123")
        assert resolve_budget() == 123
        assert resolve_budget(77) == 77

    def test_exhaustion_is_an_explicit_skip(self):
        real = realize(P("2,2,1"), Family.B, 3)
        res = fiber_point_count(real, L("1;3"), budget=1)
        assert res == FlagCount(None, 3, L("1;3"), res.nodes, skipped="budget")
        assert res.count is None
        assert res.nodes >= 1

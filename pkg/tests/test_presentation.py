import random
from fractions import Fraction
from math import gcd

import pytest

from semialg.errors import (
    NotCohenMacaulay,
    NotSimplicial,
    NotStandardGraded,
    VerificationFailed,
)
from semialg.presentation import (
    ModulePresentation,
    SparseColumn,
    build_presentation,
    cm_check,
    cm_oracle,
    column_degree,
    default_verification_bound,
    is_block_resolution,
    regularity,
    verify_presentation,
)
from semialg.semigroup import AffineSemigroup


class TestBuild:
    def test_4x7_block_pattern(self, m4x7):
        P = build_presentation(m4x7)
        assert P.beta0 == 2
        assert P.m_prime == ()
        assert len(P.i_se_gens) == 4
        assert P.beta1 == 8 == len(P.n_block)
        # Kronecker layout: row-major copies of (g1 .. g4)
        assert [c.entries[0][0] for c in P.n_block] == [0, 0, 0, 0, 1, 1, 1, 1]
        per_row = {0: [], 1: []}
        for c in P.n_block:
            (r1, s1, m1), (r2, s2, m2) = c.entries
            assert r1 == r2 and {s1, s2} == {1, -1}
            per_row[r1].append(frozenset((m1, m2)))
        expected = {
            frozenset(((1, 0, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1))),
            frozenset(((1, 0, 3, 0, 0, 0), (0, 1, 0, 1, 2, 0))),
            frozenset(((2, 0, 2, 0, 0, 0), (0, 1, 0, 1, 1, 1))),
            frozenset(((3, 0, 1, 0, 0, 0), (0, 1, 0, 1, 0, 2))),
        }
        assert set(per_row[0]) == expected
        assert per_row[0] == per_row[1]

    def test_numerical_free(self, s8):
        P = build_presentation(s8)
        assert P.beta0 == 8
        assert P.beta1 == 0
        assert P.m_prime == () and P.n_block == ()

    def test_curve_single_mixed_column(self, curve):
        P = build_presentation(curve)
        assert P.beta0 == 5
        assert len(P.m_prime) == 1 and P.n_block == ()
        col = P.m_prime[0]
        assert column_degree(curve, P.sigma, col) == (6, 6)
        rows = {P.sigma[r] for r, _, _ in col.entries}
        assert rows == {(0, 2), (2, 0)}
        monos = {m for _, _, m in col.entries}
        assert monos == {(1, 0), (0, 1)}
        signs = sorted(s for _, s, _ in col.entries)
        assert signs == [-1, 1]

    def test_big15_free(self, big15):
        P = build_presentation(big15)
        assert P.beta0 == 1051 and P.beta1 == 0

    def test_columns_homogeneous(self, curve, m4x7):
        for S in (curve, m4x7):
            P = build_presentation(S)
            for col in list(P.m_prime) + list(P.n_block):
                degs = {
                    S.order.deg(P.sigma[row] + mono)
                    for row, _, mono in col.entries
                }
                assert len(degs) == 1


class TestVerify:
    def test_fixtures_pass_default_bound(self, s8, curve, m4x7, m2x9, conic):
        for S in (s8, curve, m4x7, m2x9, conic):
            rep = verify_presentation(S)
            assert rep.ok

    def test_numerical_large_bound(self, s8):
        rep = verify_presentation(s8, None, 200)
        assert rep.ok and rep.degrees_checked > 1000

    def test_corrupted_column_detected(self, curve):
        P = build_presentation(curve)
        (r1, s1, m1), (r2, s2, m2) = P.m_prime[0].entries
        bad_col = SparseColumn(((r1, s1, m1), (r2, -s2, m2)))  # sign flip
        bad = ModulePresentation(P.sigma, (bad_col,), P.n_block, P.i_se_gens)
        with pytest.raises(VerificationFailed) as err:
            verify_presentation(curve, bad)
        assert err.value.degree == (6, 6)

    def test_missing_column_detected(self, curve):
        P = build_presentation(curve)
        bad = ModulePresentation(P.sigma, (), P.n_block, P.i_se_gens)
        with pytest.raises(VerificationFailed) as err:
            verify_presentation(curve, bad)
        assert err.value.degree == (6, 6)

    def test_bound_is_fraction_friendly(self, s8):
        rep = verify_presentation(s8, None, Fraction(27, 4))
        assert rep.ok


class TestCohenMacaulay:
    def test_2x9_paper(self, m2x9):
        assert cm_check(m2x9) is True
        assert cm_oracle(m2x9) is True

    def test_numerical(self, s8):
        assert cm_check(s8) is True and cm_oracle(s8) is True

    def test_curve_not_cm(self, curve):
        assert cm_check(curve) is False
        assert cm_oracle(curve) is False

    def test_oracle_counts(self, curve):
        from semialg.exact_linalg import lattice_index

        idx = lattice_index(
            [list(g) for g in curve.generators],
            [list(curve.generators[i]) for i in curve.E_indices],
        )
        assert idx == 4 and len(curve.standard_Q()) == 5

    def test_not_simplicial(self, m4x7):
        with pytest.raises(NotSimplicial):
            cm_check(m4x7)
        with pytest.raises(NotSimplicial):
            cm_oracle(m4x7)

    def test_random_simplicial_agreement(self):
        rng = random.Random(777)
        done = 0
        while done < 20:
            if rng.random() < 0.5:
                n = rng.randint(3, 5)
                gens = sorted(rng.sample(range(2, 16), n))
                g = 0
                for v in gens:
                    g = gcd(g, v)
                if g != 1:
                    continue
                S = AffineSemigroup([[v] for v in gens])
            else:
                n = rng.randint(3, 5)
                cols = [
                    (rng.randint(1, 15), rng.randint(0, 15)) for _ in range(n)
                ]
                try:
                    S = AffineSemigroup(cols)
                except Exception:
                    continue
                from semialg.exact_linalg import rank_over_field

                rows = [[c[t] for c in cols] for t in range(2)]
                if len(S.E_indices) != rank_over_field(rows):
                    continue
            done += 1
            assert cm_check(S) == cm_oracle(S)


class TestRegularity:
    def test_conic(self, conic):
        assert regularity(conic) == 1

    def test_free(self):
        S = AffineSemigroup([[1, 0], [0, 1]])
        assert regularity(S) == 0

    def test_not_cm(self, curve):
        with pytest.raises(NotCohenMacaulay):
            regularity(curve)

    def test_not_standard_graded(self, s8):
        with pytest.raises(NotStandardGraded):
            regularity(s8)

    def test_not_simplicial(self, m4x7):
        with pytest.raises(NotSimplicial):
            regularity(m4x7)


class TestBlockResolution:
    def test_4x7(self, m4x7):
        assert is_block_resolution(m4x7) is True

    def test_curve(self, curve):
        assert is_block_resolution(curve) is False

    def test_numerical_vacuous(self, s8):
        assert is_block_resolution(s8) is True


class TestRandomPresentations:
    def test_verify_random_pointed(self):
        rng = random.Random(4242)
        done = 0
        while done < 8:
            d = rng.choice([1, 2])
            n = rng.randint(2, 5)
            if d == 1:
                cols = [(rng.randint(1, 12),) for _ in range(n)]
            else:
                cols = [
                    (rng.randint(0, 12), rng.randint(0, 12)) for _ in range(n)
                ]
            if any(not any(c) for c in cols):
                continue
            try:
                S = AffineSemigroup(cols)
            except Exception:
                continue
            done += 1
            assert verify_presentation(S).ok

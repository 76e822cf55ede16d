import random
from math import gcd
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semialg.binomials import (
    Binomial,
    Reducer,
    TermOrder,
    buchberger,
    eliminate,
    initial_ideal,
    lattice_ideal,
    make_binomial,
    minimalize,
    normal_form,
    saturate_toric,
)
from semialg.exact_linalg import integer_kernel_basis, positive_functional
from semialg.semigroup import AffineSemigroup

# ring of <8,11,18>: Z1 = 11, Z2 = 18, Y = 8
GB_8_11_18 = [
    Binomial((2, 1, 0), (0, 0, 5)),   # Z1^2 Z2 - Y^5
    Binomial((4, 0, 0), (0, 2, 1)),   # Z1^4 - Z2^2 Y
    Binomial((0, 3, 0), (2, 0, 4)),   # Z2^3 - Z1^2 Y^4
]


def toric_order(cols, s, tie="block"):
    lam = positive_functional(cols)
    den = 1
    for f in lam:
        den = den * f.denominator // gcd(den, f.denominator)
    weights = [
        sum(int(f * den) * c for f, c in zip(lam, col)) for col in cols
    ]
    return TermOrder(cols, weights, s, tie=tie)


def enumerate_relations(order, wmax):
    """Every A-homogeneous binomial with lead weight <= wmax, by brute force."""
    n = order.nvars
    vectors = []

    def rec(k, left, cur):
        if k == n:
            vectors.append(tuple(cur))
            return
        w = order.weights[k]
        for e in range(left // w + 1):
            cur.append(e)
            rec(k + 1, left - e * w, cur)
            cur.pop()

    rec(0, wmax, [])
    by_deg = {}
    for u in vectors:
        by_deg.setdefault(order.deg(u), []).append(u)
    rels = []
    for monos in by_deg.values():
        for a, b in combinations(monos, 2):
            rels.append(make_binomial(order, a, b))
    return rels


def toric_gb(cols, s, tie="block"):
    order = toric_order(cols, s, tie)
    kernel = integer_kernel_basis(
        [[col[t] for col in cols] for t in range(len(cols[0]))]
    )
    return buchberger(saturate_toric(lattice_ideal(kernel, order), order), order)


class TestNormalForm:
    def test_z2_cubed(self, s8):
        gb = s8.groebner_basis
        assert normal_form((0, 3, 0), gb) == (2, 0, 4)  # Z2^3 -> Z1^2 Y^4

    def test_one(self, s8):
        assert normal_form((0, 0, 0), s8.groebner_basis) == (0, 0, 0)

    def test_standard_fixed(self, s8):
        assert normal_form((1, 1, 0), s8.groebner_basis) == (1, 1, 0)

    def test_binomial_reduces_to_zero(self, s8):
        gb = s8.groebner_basis
        b = Binomial((2, 1, 0), (0, 0, 5))
        assert normal_form(b, gb) is None

    def test_binomial_nonzero(self, s8):
        gb = s8.groebner_basis
        b = make_binomial(gb.order, (1, 0, 0), (0, 1, 0))  # Z1 vs Z2: different degree
        nf = normal_form(b, gb)
        assert nf == b

    @settings(max_examples=150, deadline=None)
    @given(st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8)))
    def test_idempotent_and_degree_preserving(self, s8, m):
        gb = s8.groebner_basis
        nf = normal_form(m, gb)
        assert normal_form(nf, gb) == nf
        assert gb.order.deg(nf) == gb.order.deg(m)
        # normal forms avoid the initial ideal
        from semialg.binomials import mono_divides

        assert not any(mono_divides(g.lead, nf) for g in gb)


class TestBuchberger:
    def test_example_numerical(self, s8):
        assert sorted(s8.groebner_basis.elements) == sorted(GB_8_11_18)

    def test_empty(self):
        order = toric_order([(11,), (18,), (8,)], 2)
        assert buchberger([], order).elements == ()

    def test_curve_against_enumeration_oracle(self, curve):
        gb = curve.groebner_basis
        order = gb.order
        # unordered monomial pairs frozen from the independent hand run
        expected = {
            frozenset(((1, 1, 0, 0), (0, 0, 1, 1))),
            frozenset(((3, 0, 0, 0), (0, 1, 2, 0))),
            frozenset(((0, 3, 0, 0), (1, 0, 0, 2))),
            frozenset(((0, 2, 1, 0), (2, 0, 0, 1))),  # the mixed-lead element
        }
        assert {frozenset((g.lead, g.trail)) for g in gb} == expected
        # completeness: every enumerated relation reduces to zero
        red = Reducer(gb)
        for rel in enumerate_relations(order, 6 * 4):
            assert red.normal_form_monomial(rel.lead) == red.normal_form_monomial(rel.trail)
        # reducedness: leads pairwise non-dividing, trails in normal form
        from semialg.binomials import mono_divides

        for g1, g2 in combinations(gb, 2):
            assert not mono_divides(g1.lead, g2.lead)
            assert not mono_divides(g2.lead, g1.lead)
        for g in gb:
            others = [h for h in gb if h != g]
            assert not any(mono_divides(h.lead, g.trail) for h in others)

    def test_unique_under_permutation(self, s8):
        order = s8.order
        kernel = integer_kernel_basis([[11, 18, 8]])
        gens = lattice_ideal(kernel, order)
        sat = saturate_toric(gens, order)
        base = buchberger(sat, order).elements
        rng = random.Random(7)
        for _ in range(5):
            shuffled = sat[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled, order).elements == base

    def test_correctness_oracle_random(self):
        """Random pointed matrices: the basis rewrites every low-degree
        relation to zero and its elements are A-homogeneous."""
        rng = random.Random(20240)
        trials = 0
        while trials < 8:
            d = rng.choice([1, 2])
            n = rng.randint(2, 4)
            cols = [
                tuple(rng.randint(0 if d > 1 else 1, 12) for _ in range(d))
                for _ in range(n)
            ]
            if any(not any(c) for c in cols):
                continue
            try:
                order = toric_order(cols, s=n - 1 if d == 1 else n - 2)
            except Exception:
                continue
            trials += 1
            gb = toric_gb(cols, order.s)
            red = Reducer(gb)
            for g in gb:
                assert order.deg(g.lead) == order.deg(g.trail)
                assert order.compare(g.lead, g.trail) > 0
            wmax = min(60 * min(order.weights), 3 * max(order.weights) + 2 * min(order.weights))
            for rel in enumerate_relations(order, wmax):
                assert red.normal_form_monomial(rel.lead) == red.normal_form_monomial(
                    rel.trail
                )


class TestLatticeIdeal:
    def test_simple_difference(self):
        order = TermOrder([(1,), (1,)], [1, 1], s=0)
        out = lattice_ideal([[1, -1]], order)
        assert len(out) == 1
        assert frozenset((out[0].lead, out[0].trail)) == frozenset(((1, 0), (0, 1)))
        assert order.compare(out[0].lead, out[0].trail) > 0

    def test_zero_vector_excluded(self):
        order = TermOrder([(1,), (1,)], [1, 1], s=0)
        assert lattice_ideal([[0, 0]], order) == []

    def test_kernel_of_8_11_18(self, s8):
        kernel = integer_kernel_basis([[11, 18, 8]])
        out = lattice_ideal(kernel, s8.order)
        assert len(out) == 2
        for b in out:
            assert s8.order.deg(b.lead) == s8.order.deg(b.trail)


class TestSaturation:
    def test_recovers_paper_basis(self, s8):
        order = s8.order
        kernel = integer_kernel_basis([[11, 18, 8]])
        sat = saturate_toric(lattice_ideal(kernel, order), order)
        assert sorted(buchberger(sat, order).elements) == sorted(GB_8_11_18)

    def test_idempotent_on_saturated_input(self, s8):
        order = s8.order
        sat = list(s8.groebner_basis)
        again = saturate_toric(sat, order)
        assert buchberger(again, order).elements == s8.groebner_basis.elements

    def test_4x7_ideal_equality(self, m4x7):
        # I_A = <Z^2 - Y3 Y4> + <g1, g2, g3, g4> as ideals
        order = m4x7.order
        z2 = Binomial((2, 0, 0, 0, 0, 0, 0), (0, 0, 0, 1, 1, 0, 0))
        g1 = Binomial((0, 1, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0, 1))
        g2 = Binomial((0, 1, 0, 3, 0, 0, 0), (0, 0, 1, 0, 1, 2, 0))
        g3 = Binomial((0, 2, 0, 2, 0, 0, 0), (0, 0, 1, 0, 1, 1, 1))
        g4 = Binomial((0, 3, 0, 1, 0, 0, 0), (0, 0, 1, 0, 1, 0, 2))
        for b in (z2, g1, g2, g3, g4):
            assert order.deg(b.lead) == order.deg(b.trail)
        other = buchberger([z2, g1, g2, g3, g4], order)
        assert other.elements == m4x7.groebner_basis.elements


class TestEliminate:
    def test_numerical_is_simplicial(self, s8):
        assert eliminate(list(s8.groebner_basis), s8.order) == []

    def test_curve_trivial_y_ideal(self, curve):
        assert eliminate(list(curve.groebner_basis), curve.order) == []

    def test_4x7_recovers_pure_y_ideal(self, m4x7):
        order = m4x7.order
        out = eliminate(list(m4x7.groebner_basis), order)
        assert out and all(
            g.lead[0] == 0 and g.trail[0] == 0 for g in out
        )
        mins = minimalize(out, order)
        expected = {
            frozenset(((0, 1, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0, 1))),
            frozenset(((0, 1, 0, 3, 0, 0, 0), (0, 0, 1, 0, 1, 2, 0))),
            frozenset(((0, 2, 0, 2, 0, 0, 0), (0, 0, 1, 0, 1, 1, 1))),
            frozenset(((0, 3, 0, 1, 0, 0, 0), (0, 0, 1, 0, 1, 0, 2))),
        }
        assert {frozenset((g.lead, g.trail)) for g in mins} == expected


class TestMinimalize:
    def test_duplicates_collapse(self):
        order = TermOrder([(1,), (1,)], [1, 1], s=0)
        b = Binomial((1, 0), (0, 1))
        assert minimalize([b, b], order) == [b]

    def test_empty(self, s8):
        assert minimalize([], s8.order) == []

    def test_redundant_multiple_dropped(self, s8):
        order = s8.order
        g = GB_8_11_18[0]
        from semialg.binomials import mono_mul

        mult = Binomial(mono_mul(g.lead, (1, 0, 0)), mono_mul(g.trail, (1, 0, 0)))
        out = minimalize([g, mult], order)
        assert out == [g]


class TestInitialIdeal:
    def test_paper_leads(self, s8):
        assert initial_ideal(s8.groebner_basis) == [
            (2, 1, 0),
            (4, 0, 0),
            (0, 3, 0),
        ]

    def test_empty(self, s8):
        from semialg.binomials import GroebnerBasis

        assert initial_ideal(GroebnerBasis((), s8.order)) == []

    def test_2x9_paper_set(self, m2x9):
        init = initial_ideal(m2x9.groebner_basis)
        assert len(init) == 25
        s = m2x9.order.s

        def z(expos):
            out = [0] * 9
            for j, e in expos:
                out[j - 1] = e
            return tuple(out)

        paper = {
            z([(1, 2)]), z([(1, 1), (2, 1)]), z([(1, 1), (3, 1)]), z([(2, 2)]),
            z([(1, 1), (4, 1)]), z([(2, 1), (3, 1)]), z([(1, 1), (5, 1)]),
            z([(3, 2)]), z([(2, 1), (4, 1)]), z([(2, 1), (5, 1)]),
            z([(1, 1), (6, 1)]), z([(3, 1), (5, 1)]), z([(4, 2)]),
            z([(2, 1), (6, 1)]), z([(1, 1), (7, 1)]), z([(5, 2)]),
            z([(3, 1), (6, 1)]), z([(2, 1), (7, 1)]), z([(3, 1), (7, 1)]),
            z([(4, 1), (7, 1)]), z([(6, 2)]), z([(5, 1), (7, 1)]),
            z([(6, 1), (7, 1)]), z([(7, 2)]), z([(4, 1), (5, 1), (6, 1)]),
        }
        assert set(init) == paper
        # all pure-Z (the Cohen-Macaulay witness)
        assert all(not any(m[s:]) for m in init)

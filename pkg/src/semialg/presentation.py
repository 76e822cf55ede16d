"""The short presentation of k[S] as a module over the cone subring k[Y].

Generators are the standard Z-monomials (indexed lexicographically); the
relation matrix has a mixed block built from basis elements with Y-divisible
leads and a Kronecker block carrying the generators of the pure-Y ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binomials import eliminate, minimalize
from .errors import (
    NotCohenMacaulay,
    NotSimplicial,
    NotStandardGraded,
    VerificationFailed,
)
from .exact_linalg import lattice_index, rank_over_field, solve_rational


@dataclass(frozen=True)
class SparseColumn:
    """Column of the relation matrix: (row, sign, Y-exponent) entries.

    Mixed-block columns carry two entries of opposite sign (possibly on the
    same row); Kronecker-block columns carry one binomial on a single row,
    stored as two same-row entries.
    """

    entries: tuple

    def rows(self):
        return tuple(e[0] for e in self.entries)


@dataclass(frozen=True)
class ModulePresentation:
    sigma: tuple        # row i of the free module corresponds to sigma[i]
    m_prime: tuple      # mixed-block columns
    n_block: tuple      # Kronecker-block columns, row-major
    i_se_gens: tuple    # minimal pure-Y ideal generators (Y-exponent pairs)

    @property
    def beta0(self):
        return len(self.sigma)

    @property
    def beta1(self):
        return len(self.m_prime) + len(self.n_block)


def build_presentation(S) -> ModulePresentation:
    """Construct the relation columns for k[S] over k[Y]."""
    order = S.order
    s = order.s
    sigma = tuple(S.standard_Q())
    row_of = {u: i for i, u in enumerate(sigma)}
    red = S.reducer

    m_cols = []
    for g in S.groebner_basis:
        v = g.lead[s:]
        if not any(v):
            continue
        u = g.lead[:s]
        u2 = g.trail[:s]
        v2 = g.trail[s:]
        if not any(u) and not any(u2):
            continue  # pure-Y relation: belongs to the Kronecker block
        for q in sigma:
            if any(a > b for a, b in zip(u, q)):
                continue
            w = tuple(b - a for a, b in zip(u, q))
            shifted = tuple(a + b for a, b in zip(u2, w)) + (0,) * order.r
            rem = red.normal_form_monomial(shifted)
            u3 = rem[:s]
            mono_b = tuple(a + b for a, b in zip(v2, rem[s:]))
            row_a = row_of[q]
            row_b = row_of[u3]
            if row_a == row_b and v == mono_b:
                continue
            m_cols.append(
                SparseColumn(((row_a, 1, v), (row_b, -1, mono_b)))
            )
    m_cols = sorted(set(m_cols), key=lambda c: (_column_weight(S, sigma, c), c.entries))

    # a nonzero pure-Y ideal forces a pure-Y monomial into the initial
    # ideal, hence a pure-Y lead in the reduced basis; otherwise skip the
    # elimination pass entirely
    if any(not any(g.lead[:s]) for g in S.groebner_basis):
        gens = minimalize(eliminate(list(S.groebner_basis), order), order)
    else:
        gens = []
    i_se = tuple((g.lead[s:], g.trail[s:]) for g in gens)
    n_cols = []
    for i in range(len(sigma)):
        for lead_y, trail_y in i_se:
            n_cols.append(SparseColumn(((i, 1, lead_y), (i, -1, trail_y))))
    return ModulePresentation(sigma, tuple(m_cols), tuple(n_cols), i_se)


def column_degree(S, sigma, col: SparseColumn):
    """A-degree shared by every entry of a homogeneous column."""
    row, _, mono = col.entries[0]
    return S.order.deg(sigma[row] + mono)


def _column_weight(S, sigma, col):
    return S.weight(column_degree(S, sigma, col))


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    bound: Fraction
    degrees_checked: int
    mismatches: tuple


def default_verification_bound(S) -> Fraction:
    """3x the largest functional value among basis and standard degrees."""
    order = S.order
    w = 0
    for g in S.groebner_basis:
        w = max(w, S.weight(order.deg(g.lead)))
    for u in S.standard_Q():
        w = max(w, S.weight(order.deg(u + (0,) * order.r)))
    return 3 * Fraction(w, S.scale)


def verify_presentation(S, pres: ModulePresentation | None = None, degree_bound=None):
    """Certify the presentation up to a functional-value bound.

    Checks, exactly: (a) every column is A-homogeneous and maps to zero
    under the generator map; (b) for every reachable degree within the
    bound, the kernel dimension of the generator map equals the dimension
    of the column span. Raises VerificationFailed on the first offending
    degree; returns a report otherwise.
    """
    if pres is None:
        pres = build_presentation(S)
    order = S.order
    s, r = order.s, order.r
    red = S.reducer
    sigma = pres.sigma
    columns = list(pres.m_prime) + list(pres.n_block)

    for col in columns:
        degs = {order.deg(sigma[row] + mono) for row, _, mono in col.entries}
        if len(degs) != 1:
            raise VerificationFailed(
                f"inhomogeneous column {col.entries}", degree=min(degs)
            )
        signed = {}
        for row, sign, mono in col.entries:
            m = sigma[row] + mono
            signed[m] = signed.get(m, 0) + sign
        live = [(m, c) for m, c in signed.items() if c]
        if not live:
            continue
        reduced = {}
        for m, c in live:
            nf = red.normal_form_monomial(m)
            reduced[nf] = reduced.get(nf, 0) + c
        if any(c for c in reduced.values()):
            raise VerificationFailed(
                f"column {col.entries} does not map to zero",
                degree=degs.pop(),
            )

    if degree_bound is None:
        degree_bound = default_verification_bound(S)
    bound = Fraction(degree_bound)
    wbound = int(bound * S.scale)

    # one global enumeration of Y-monomials per row / per column, bucketed
    # by A-degree, instead of a factorization search per degree
    sigma_deg = [order.deg(u + (0,) * r) for u in sigma]
    basis_by_deg = {}
    for i, du in enumerate(sigma_deg):
        room = wbound - S.weight(du)
        if room < 0:
            continue
        for v, dv in _y_monomials(S, room):
            a = tuple(p + q for p, q in zip(du, dv))
            basis_by_deg.setdefault(a, []).append((i, v))

    col_deg = [column_degree(S, sigma, c) for c in columns]
    img_by_deg = {}
    for ci, cd in enumerate(col_deg):
        room = wbound - S.weight(cd)
        if room < 0:
            continue
        for v0, dv in _y_monomials(S, room):
            a = tuple(p + q for p, q in zip(cd, dv))
            img_by_deg.setdefault(a, []).append((ci, v0))

    mismatches = []
    for a in sorted(basis_by_deg, key=lambda x: (S.weight(x), x)):
        basis = basis_by_deg[a]
        index = {pair: pos for pos, pair in enumerate(basis)}
        dim_ker = len(basis) - 1 if basis else 0
        vectors = []
        for ci, v0 in img_by_deg.get(a, ()):
            vec = [0] * len(basis)
            for row, sign, mono in columns[ci].entries:
                shifted = tuple(x + y for x, y in zip(mono, v0))
                vec[index[(row, shifted)]] += sign
            if any(vec):
                vectors.append(vec)
        dim_im = rank_over_field(vectors, 0) if vectors else 0
        if dim_im != dim_ker:
            mismatches.append((a, dim_ker, dim_im))
    if mismatches:
        a, dk, di = mismatches[0]
        raise VerificationFailed(
            f"kernel dimension {dk} != image dimension {di} at degree {a}",
            degree=a,
        )
    return VerificationReport(True, bound, len(basis_by_deg), ())


def _y_monomials(S, wmax):
    """All Y-exponent vectors of functional value <= wmax, with degrees."""
    order = S.order
    s, r = order.s, order.r
    out = []
    zero = (0,) * S.dim
    expo = [0] * r

    def rec(k, w, dcur):
        if k == r:
            out.append((tuple(expo), dcur))
            return
        col = order.cols[s + k]
        wk = order.weights[s + k]
        e = 0
        while e * wk <= w:
            expo[k] = e
            rec(
                k + 1,
                w - e * wk,
                tuple(a + e * b for a, b in zip(dcur, col)),
            )
            e += 1
        expo[k] = 0

    rec(0, wmax, zero)
    return out


def require_simplicial(S):
    rows = [[g[t] for g in S.generators] for t in range(S.dim)]
    rk = rank_over_field(rows, 0)
    if len(S.E_indices) != rk:
        raise NotSimplicial(
            f"|E| = {len(S.E_indices)} but the generator matrix has rank {rk}"
        )


def cm_check(S) -> bool:
    """Cohen-Macaulay iff no initial-ideal generator involves a Y-variable."""
    require_simplicial(S)
    s = S.order.s
    return all(not any(g.lead[s:]) for g in S.groebner_basis)


def cm_oracle(S) -> bool:
    """Independent check: free over k[Y] iff #Q equals the lattice index."""
    require_simplicial(S)
    idx = lattice_index(
        [list(g) for g in S.generators],
        [list(S.generators[i]) for i in S.E_indices],
    )
    return len(S.standard_Q()) == idx


def regularity(S) -> int:
    """Largest total degree over the standard monomials.

    This is the regularity of k[S] as a free k[Y]-module; the toric-ideal
    variant is this value plus one (callers report both). Requires a
    simplicial, Cohen-Macaulay, standard-graded context.
    """
    require_simplicial(S)
    if not cm_check(S):
        raise NotCohenMacaulay("initial ideal depends on Y-variables")
    rows = [list(g) for g in S.generators]
    mu = solve_rational(rows, [1] * len(S.generators))
    if mu is None:
        raise NotStandardGraded(
            "no functional takes value 1 on every generator"
        )
    return max((sum(u) for u in S.standard_Q()), default=0)


def is_block_resolution(S) -> bool:
    """True when the mixed block is empty, so the resolution splits into
    #Q copies of a minimal resolution of the cone subalgebra."""
    return not build_presentation(S).m_prime

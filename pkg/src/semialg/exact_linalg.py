"""Exact integer and rational linear algebra on plain nested lists.

Matrices are lists of rows; all arithmetic is arbitrary-precision int or
fractions.Fraction. Nothing here ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotPointed, NotSublattice


def hermite_normal_form(M):
    """Row-style Hermite normal form with transform accumulation.

    Returns (H, U) with U unimodular and U*M == H. Pivots are positive,
    entries above each pivot are reduced into [0, pivot); zero rows sink
    to the bottom.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    H = [[int(x) for x in row] for row in M]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        # Euclid among rows r.. on column c until a single nonzero survives.
        while True:
            live = [i for i in range(r, m) if H[i][c] != 0]
            if len(live) <= 1:
                break
            piv = min(live, key=lambda i: (abs(H[i][c]), i))
            for i in live:
                if i == piv:
                    continue
                q = H[i][c] // H[piv][c]
                if q:
                    _row_sub(H[i], H[piv], q)
                    _row_sub(U[i], U[piv], q)
        live = [i for i in range(r, m) if H[i][c] != 0]
        if not live:
            continue
        i = live[0]
        if i != r:
            H[i], H[r] = H[r], H[i]
            U[i], U[r] = U[r], U[i]
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                _row_sub(H[i], H[r], q)
                _row_sub(U[i], U[r], q)
        r += 1
    return H, U


def _row_sub(row, other, q):
    for k in range(len(row)):
        row[k] -= q * other[k]


def integer_kernel_basis(A):
    """Basis of the integer kernel {u : A u = 0}.

    Computed from the HNF of the transpose; the rows of the transform
    matching zero rows of H form a basis, which is then norm-reduced so
    downstream binomials stay small. Any basis of the same lattice is
    equivalent for callers (compare via HNF).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    At = [[A[i][j] for i in range(m)] for j in range(n)]
    H, U = hermite_normal_form(At)
    basis = [U[i] for i in range(n) if all(x == 0 for x in H[i])]
    return _norm_reduce([row[:] for row in basis])


def _norm_reduce(basis):
    """Pairwise integer norm-descent sweeps (deterministic, not LLL)."""
    if not basis:
        return basis
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda v: (sum(x * x for x in v), v))
        for j in range(len(basis)):
            nj = sum(x * x for x in basis[j])
            if nj == 0:
                continue
            for i in range(len(basis)):
                if i == j:
                    continue
                d = sum(a * b for a, b in zip(basis[i], basis[j]))
                q = (2 * d + nj) // (2 * nj)
                if q == 0:
                    continue
                cand = [a - q * b for a, b in zip(basis[i], basis[j])]
                if sum(x * x for x in cand) < sum(x * x for x in basis[i]):
                    basis[i] = cand
                    changed = True
    basis = [v for v in basis if any(v)]
    # sign-normalize: first nonzero entry positive
    for i, v in enumerate(basis):
        lead = next(x for x in v if x)
        if lead < 0:
            basis[i] = [-x for x in v]
    basis.sort()
    return basis


def rank_over_field(M, char=0):
    """Exact matrix rank over Q (char 0) or GF(char) for prime char."""
    if not M or not M[0]:
        return 0
    if char:
        rows = [[int(x) % char for x in row] for row in M]
        return _rank_mod_p(rows, char)
    rows = [[Fraction(x) for x in row] for row in M]
    return _rank_rational(rows)


def _rank_rational(rows):
    m, n = len(rows), len(rows[0])
    rank = 0
    col = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _rank_mod_p(rows, p):
    m, n = len(rows), len(rows[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _hnf_pivots(vectors):
    """Nonzero HNF rows and their pivot values."""
    H, _ = hermite_normal_form(vectors)
    rows = [row for row in H if any(row)]
    pivots = [next(x for x in row if x) for row in rows]
    return rows, pivots


def _in_row_lattice(v, hnf_rows):
    """Is v an integer combination of the (HNF) rows?"""
    v = list(v)
    for row in hnf_rows:
        c = next(j for j, x in enumerate(row) if x)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            _row_sub(v, row, q)
    return not any(v)


def lattice_index(L1, L2):
    """Index [ZL1 : ZL2] of the lattice spanned by L2 inside that of L1.

    Returns a positive int, or None when the index is infinite (rank of L2
    is smaller). Raises NotSublattice when ZL2 is not contained in ZL1.
    """
    H1, piv1 = _hnf_pivots(L1)
    for v in L2:
        if not _in_row_lattice(v, H1):
            raise NotSublattice(f"{tuple(v)} is not in the first lattice")
    H2, piv2 = _hnf_pivots(L2)
    if len(H2) < len(H1):
        return None
    d1 = 1
    for p in piv1:
        d1 *= p
    d2 = 1
    for p in piv2:
        d2 *= p
    return d2 // d1


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    witness: tuple | None

    def __bool__(self):
        return self.feasible


def _phase1(A, b):
    """Exact phase-1 simplex with Bland's rule.

    Finds x >= 0 with A x = b or reports infeasibility. A is a list of
    rows over Fraction/int; returns the x vector (Fractions) or None.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    T = []
    rhs = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        T.append(row)
        rhs.append(bi)
    basis = list(range(n, n + m))  # artificial variables
    while True:
        # reduced costs of the artificial objective: w_j = sum of rows with
        # artificial basic variables
        w = [Fraction(0)] * n
        wv = Fraction(0)
        for i in range(m):
            if basis[i] >= n:
                for j in range(n):
                    w[j] += T[i][j]
                wv += rhs[i]
        enter = next((j for j in range(n) if w[j] > 0), None)
        if enter is None:
            if wv != 0:
                return None
            # kick zero-level artificials out where possible; harmless if not
            x = [Fraction(0)] * n
            for i in range(m):
                if basis[i] < n:
                    x[basis[i]] = rhs[i]
            return x
        # Bland leaving rule: min ratio, ties by smallest basic variable
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = rhs[i] / T[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return None  # unbounded cannot happen for phase 1, defensive
        _, piv = best
        pv = T[piv][enter]
        T[piv] = [x / pv for x in T[piv]]
        rhs[piv] /= pv
        for i in range(m):
            if i != piv and T[i][enter]:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[piv])]
                rhs[i] -= f * rhs[piv]
        basis[piv] = enter


def lp_feasible(constraints, num_vars):
    """Exact feasibility of linear constraints over free rational variables.

    Each constraint is (coeffs, rel, rhs) with rel one of '<=', '>=', '=='.
    Free variables are split into positive parts; one slack per inequality.
    """
    cons = list(constraints)
    n = num_vars
    nslack = sum(1 for _, rel, _ in cons if rel != "==")
    A = []
    b = []
    si = 0
    for coeffs, rel, rhs in cons:
        if len(coeffs) != n:
            raise ValueError("constraint arity mismatch")
        row = [Fraction(c) for c in coeffs] + [-Fraction(c) for c in coeffs]
        slack = [Fraction(0)] * nslack
        if rel == "<=":
            slack[si] = Fraction(1)
            si += 1
        elif rel == ">=":
            slack[si] = Fraction(-1)
            si += 1
        elif rel != "==":
            raise ValueError(f"unknown relation {rel!r}")
        A.append(row + slack)
        b.append(Fraction(rhs))
    x = _phase1(A, b)
    if x is None:
        return LPResult(False, None)
    witness = tuple(x[j] - x[n + j] for j in range(n))
    return LPResult(True, witness)


def in_cone(a, gens):
    """Is a a nonnegative rational combination of gens (exact)?"""
    gens = [tuple(g) for g in gens]
    d = len(a)
    if not gens:
        ok = all(x == 0 for x in a)
        return LPResult(ok, () if ok else None)
    A = [[Fraction(g[t]) for g in gens] for t in range(d)]
    x = _phase1(A, [Fraction(x) for x in a])
    if x is None:
        return LPResult(False, None)
    return LPResult(True, tuple(x))


def positive_functional(columns):
    """A rational functional lam with lam . a >= 1 for every column.

    Existence is equivalent to pointedness of the semigroup the columns
    generate; raises NotPointed otherwise.
    """
    columns = [tuple(c) for c in columns]
    d = len(columns[0])
    res = lp_feasible([(col, ">=", 1) for col in columns], d)
    if not res.feasible:
        raise NotPointed(
            "no functional with lam . a_i >= 1 exists; a nonzero nonnegative "
            "combination of the generators vanishes"
        )
    return res.witness


def solve_rational(M, rhs):
    """One exact solution x of M x = rhs over Q, or None if inconsistent."""
    m = len(M)
    n = len(M[0]) if m else 0
    rows = [[Fraction(x) for x in M[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, m):
        if rows[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][n]
    return x

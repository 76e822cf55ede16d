"""Pointed affine semigroup contexts.

An AffineSemigroup validates pointedness, fixes a convex partition E | B,
builds the graded term order, and caches the reduced toric basis. All
queries are pure; construction is the only expensive step.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import gcd, lcm

from .binomials import (
    Binomial,
    Reducer,
    TermOrder,
    buchberger,
    lattice_ideal,
    make_binomial,
    mono_divides,
    saturate_toric,
)
from .errors import InvalidPartition, NotNumerical, PartitionNotConic
from .exact_linalg import in_cone, integer_kernel_basis, positive_functional


def convex_partition(generators):
    """Split generators into cone spanners E and the rest B.

    Scans in decreasing index order and drops a generator whenever it lies
    in the cone of the remaining plus kept ones, so E is inclusion-minimal
    with pos(E) = pos(all). One-dimensional input keeps the generator of
    least absolute value (the cheapest Apery modulus).
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    positive_functional(gens)
    n = len(gens)
    if len(gens[0]) == 1:
        e = min(range(n), key=lambda i: (abs(gens[i][0]), i))
        return [e], [i for i in range(n) if i != e]
    dropped = set()
    kept = []
    for i in reversed(range(n)):
        others = [gens[j] for j in range(n) if j != i and j not in dropped]
        if others and in_cone(gens[i], others).feasible:
            dropped.add(i)
        else:
            kept.append(i)
    return sorted(kept), sorted(dropped)


def _member_bitset(vals, limit):
    """Bitmask of subsemigroup members of [0, limit] (bit v = membership)."""
    mem = 1
    mask = (1 << (limit + 1)) - 1
    for v in sorted(set(vals)):
        shift = v
        while shift <= limit:
            mem |= (mem << shift) & mask
            shift <<= 1
    return mem


def apery_oracle_numerical(gens, m):
    """Brute-force Apery set of a numerical semigroup relative to m.

    Dynamic-programming membership sieve up to m*max(gens) + m, then the
    least member of each residue class mod m. No Groebner machinery.
    """
    vals = [int(g[0]) if isinstance(g, (tuple, list)) else int(g) for g in gens]
    if not vals or any(v <= 0 for v in vals):
        raise NotNumerical("generators must be positive integers")
    g = 0
    for v in vals:
        g = gcd(g, v)
    if g != 1:
        raise NotNumerical("gcd of generators must be 1")
    m = int(m)
    if m <= 0:
        raise NotNumerical("modulus must be a positive element")
    limit = m * max(vals) + m
    bits = _member_bitset(vals, limit)
    by = bits.to_bytes(limit // 8 + 2, "little")
    if not (by[m >> 3] >> (m & 7)) & 1:
        raise NotNumerical(f"{m} is not an element of the semigroup")
    out = []
    for r in range(m):
        v = r
        while not (by[v >> 3] >> (v & 7)) & 1:
            v += m
        out.append(v)
    return sorted(out)


class AffineSemigroup:
    """Context object for a pointed affine semigroup given by generators.

    generators: sequence of integer d-vectors (the columns of the matrix).
    E: optional 0-based indices of the cone-spanning block; derived by
    convex_partition when absent. q_cap bounds standard-monomial
    enumeration (PartitionNotConic beyond it).
    """

    def __init__(self, generators, E=None, q_cap=10**6):
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if not gens:
            raise ValueError("at least one generator required")
        d = len(gens[0])
        if d < 1 or any(len(g) != d for g in gens):
            raise ValueError("generators must share one dimension >= 1")
        self.generators = gens
        self.dim = d
        self.q_cap = int(q_cap)
        lam = positive_functional(gens)
        self.functional = lam
        if E is None:
            E_idx, B_idx = convex_partition(gens)
        else:
            E_idx = sorted({int(i) for i in E})
            if not E_idx or E_idx[0] < 0 or E_idx[-1] >= len(gens):
                raise InvalidPartition("E indices out of range")
            eset = set(E_idx)
            B_idx = [i for i in range(len(gens)) if i not in eset]
            ecols = [gens[i] for i in E_idx]
            for i in B_idx:
                if not in_cone(gens[i], ecols).feasible:
                    raise InvalidPartition(
                        f"generator {gens[i]} is outside the cone of E"
                    )
        self.E_indices = tuple(E_idx)
        self.B_indices = tuple(B_idx)
        den = 1
        for f in lam:
            den = lcm(den, f.denominator)
        self.scale = den
        self.scaled_functional = tuple(int(f * den) for f in lam)
        # ring layout: Z-block (B in input order) then Y-block (E in input order)
        perm = self.B_indices + self.E_indices
        self._perm = perm
        ring_cols = [gens[i] for i in perm]
        weights = [self.weight(col) for col in ring_cols]
        self.order = TermOrder(ring_cols, weights, s=len(B_idx))
        self._gb = self._compute_groebner()
        self.reducer = Reducer(self._gb)
        self._member_cache = {}
        self._Q = None
        # membership search visits heavy generators first
        self._search_order = sorted(
            range(len(gens)), key=lambda k: (-weights[k], k)
        )

    # ----- basic maps -----

    @property
    def groebner_basis(self):
        return self._gb

    def weight(self, a):
        """Integer-scaled value of the positive functional at a."""
        return sum(w * x for w, x in zip(self.scaled_functional, a))

    def lambda_value(self, a):
        return Fraction(self.weight(a), self.scale)

    def deg(self, exponents):
        """Image of an input-order exponent vector: sum u_i a_i."""
        if len(exponents) != len(self.generators):
            raise ValueError("exponent arity mismatch")
        return tuple(
            sum(u * g[t] for u, g in zip(exponents, self.generators))
            for t in range(self.dim)
        )

    def ring_deg(self, exponents):
        return self.order.deg(exponents)

    def ring_to_input(self, exponents):
        out = [0] * len(self.generators)
        for k, e in enumerate(exponents):
            out[self._perm[k]] = e
        return tuple(out)

    # ----- Groebner construction -----

    def _compute_groebner(self):
        n = len(self.generators)
        cols = self.order.cols
        mat = [[cols[k][t] for k in range(n)] for t in range(self.dim)]
        kernel = integer_kernel_basis(mat)
        gens0 = lattice_ideal(kernel, self.order)
        if self.dim == 1 and n > 1:
            gens0 = gens0 + self._small_relations()
        sat = saturate_toric(gens0, self.order)
        return buchberger(sat, self.order)

    def _small_relations(self, cap=64):
        """Extra low-exponent kernel binomials for one-dimensional input.

        For each variable, the least multiple (up to cap) of its value that
        the other generators reach gives a relation with small exponents;
        these only augment the lattice ideal, so saturation is unaffected.
        """
        vals = [abs(c[0]) for c in self.order.cols]
        n = len(vals)
        out = []
        for j in range(n):
            others = [(k, vals[k]) for k in range(n) if k != j]
            limit = min(cap * vals[j], max(v for _, v in others) * vals[j])
            bits = _member_bitset([v for _, v in others], limit)
            by = bits.to_bytes(limit // 8 + 2, "little")
            c = next(
                (
                    c
                    for c in range(1, limit // vals[j] + 1)
                    if (by[(c * vals[j]) >> 3] >> ((c * vals[j]) & 7)) & 1
                ),
                None,
            )
            if c is None:
                continue
            t = c * vals[j]
            expo = [0] * n
            while t:
                for k, v in others:
                    if t >= v and (by[(t - v) >> 3] >> ((t - v) & 7)) & 1:
                        expo[k] += 1
                        t -= v
                        break
            lead = [0] * n
            lead[j] = c
            b = make_binomial(self.order, tuple(lead), tuple(expo))
            if b is not None:
                out.append(b)
        return out

    # ----- membership and factorizations -----

    def is_member(self, a):
        """Is a in the semigroup? Complete DFS with functional pruning."""
        a = tuple(int(x) for x in a)
        if len(a) != self.dim:
            raise ValueError("element dimension mismatch")
        hit = self._member_cache.get(a)
        if hit is None:
            hit = self._member_search(0, a)
            self._member_cache[a] = hit
        return hit

    def _member_search(self, k, rem):
        w = self.weight(rem)
        if w < 0:
            return False
        if w == 0:
            return not any(rem)
        if k == len(self.generators):
            return False
        key = (k, rem)
        hit = self._member_cache.get(key)
        if hit is not None:
            return hit
        idx = self._search_order[k]
        col = self.order.cols[idx]
        wk = self.order.weights[idx]
        found = False
        for e in range(w // wk + 1):
            nxt = tuple(x - e * c for x, c in zip(rem, col))
            if self._member_search(k + 1, nxt):
                found = True
                break
        self._member_cache[key] = found
        return found

    def factorizations(self, a):
        """All exponent vectors mapping to a, lexicographic input order."""
        a = tuple(int(x) for x in a)
        if len(a) != self.dim:
            raise ValueError("element dimension mismatch")
        out = []
        n = len(self.generators)
        expo = [0] * n

        def rec(k, rem, w):
            if w < 0:
                return
            if k == n:
                if not any(rem):
                    out.append(self.ring_to_input(expo))
                return
            idx = self._search_order[k]
            col = self.order.cols[idx]
            wk = self.order.weights[idx]
            for e in range(w // wk + 1):
                expo[idx] = e
                rec(
                    k + 1,
                    tuple(x - e * c for x, c in zip(rem, col)),
                    w - e * wk,
                )
            expo[idx] = 0

        rec(0, a, self.weight(a))
        return sorted(out)

    def e_factorizations(self, a):
        """Factorizations of a over the E-generators only (Y-exponents)."""
        a = tuple(int(x) for x in a)
        s = self.order.s
        r = self.order.r
        out = []
        expo = [0] * r

        def rec(k, rem, w):
            if w < 0:
                return
            if k == r:
                if not any(rem):
                    out.append(tuple(expo))
                return
            col = self.order.cols[s + k]
            wk = self.order.weights[s + k]
            for e in range(w // wk + 1):
                expo[k] = e
                rec(
                    k + 1,
                    tuple(x - e * c for x, c in zip(rem, col)),
                    w - e * wk,
                )
            expo[k] = 0

        rec(0, a, self.weight(a))
        return sorted(out)

    # ----- standard monomials, Apery, Frobenius -----

    def standard_Q(self):
        """Exponents u with Z^u outside the initial ideal, lex sorted."""
        if self._Q is not None:
            return list(self._Q)
        s = self.order.s
        if s == 0:
            self._Q = ((),)
            return [()]
        purez = [
            g.lead[:s]
            for g in self._gb
            if all(e == 0 for e in g.lead[s:])
        ]
        for j in range(s):
            if not any(
                l[j] and all(e == 0 for k, e in enumerate(l) if k != j)
                for l in purez
            ):
                raise PartitionNotConic(
                    f"no pure power of Z{j + 1} in the initial ideal; the "
                    "staircase complement is infinite (is pos(E) = pos(A)?)"
                )
        found = {(0,) * s}
        queue = deque(found)
        q = []
        while queue:
            u = queue.popleft()
            if any(mono_divides(l, u) for l in purez):
                continue
            q.append(u)
            if len(q) > self.q_cap:
                raise PartitionNotConic(
                    f"standard-monomial enumeration exceeded cap {self.q_cap}"
                )
            for j in range(s):
                v = u[:j] + (u[j] + 1,) + u[j + 1:]
                if v not in found:
                    found.add(v)
                    queue.append(v)
        q.sort()
        self._Q = tuple(q)
        return q

    def apery(self):
        """Degrees of the standard monomials: Ap(S, E), sorted."""
        q = self.standard_Q()
        r = self.order.r
        els = [self.order.deg(u + (0,) * r) for u in q]
        if len(set(els)) != len(els):
            raise AssertionError("standard monomials not in bijection with Apery set")
        els.sort(key=lambda a: (self.weight(a), a))
        return els

    def frobenius(self):
        """Largest integer outside a numerical semigroup."""
        if self.dim != 1:
            raise NotNumerical("Frobenius numbers need one-dimensional input")
        vals = [g[0] for g in self.generators]
        if any(v <= 0 for v in vals):
            raise NotNumerical("generators must be positive")
        g = 0
        for v in vals:
            g = gcd(g, v)
        if g != 1:
            raise NotNumerical("gcd of the generators must be 1")
        if len(self.E_indices) == 1:
            ctx = self
        else:
            m_idx = min(range(len(vals)), key=lambda i: (vals[i], i))
            ctx = AffineSemigroup(self.generators, E=[m_idx], q_cap=self.q_cap)
        m = ctx.generators[ctx.E_indices[0]][0]
        return max(a[0] for a in ctx.apery()) - m

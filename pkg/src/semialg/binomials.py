"""Monomials, pure-difference binomials, and a binomial Buchberger engine.

Monomials are flat exponent tuples over a fixed ring layout: positions
0..s-1 are the Z-block (non-extreme generators), positions s..s+r-1 the
Y-block (cone generators). Binomials are A-homogeneous pure differences,
so coefficient arithmetic is sign-only and S-pairs stay binomial.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cmp_to_key
from typing import NamedTuple


class Binomial(NamedTuple):
    lead: tuple
    trail: tuple


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def support_mask(m):
    mask = 0
    for k, e in enumerate(m):
        if e:
            mask |= 1 << k
    return mask


class TermOrder:
    """A-graded monomial order with Y-variables cheapest.

    Comparison stages: (0) in eliminate mode, total exponent over the
    eliminated block; (1) the positive functional applied to the A-degree;
    (2) if that ties but A-degrees differ, the sign of the leftmost nonzero
    entry of the degree difference; (3) the tie-break.

    Two tie-break styles exist. The default, tie="block", is the one the
    reference computer sessions realize: compare -y_1, ..., -y_r, then
    +z_s, ..., +z_1 lexicographically (fewer Y_1 wins first, then more Z_s
    wins). tie="revlex" is plain reverse lex on a variable sequence
    (default Z1 > ... > Zs > Y1 > ... > Yr): the monomial with the smaller
    exponent at the last differing sequence position is the greater one.
    Saturation passes use revlex variants with one variable cheapest; both
    styles put every monomial with a Y-variable below every pure-Z
    monomial of the same A-degree.
    """

    __slots__ = ("cols", "weights", "s", "r", "sequence", "eliminate", "tie", "_scan")

    def __init__(self, cols, weights, s, sequence=None, eliminate=None, tie="block"):
        self.cols = tuple(tuple(int(x) for x in c) for c in cols)
        self.weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise ValueError("order weights must be positive")
        self.s = s
        self.r = len(self.cols) - s
        n = len(self.cols)
        self.sequence = tuple(sequence) if sequence is not None else tuple(range(n))
        if sorted(self.sequence) != list(range(n)):
            raise ValueError("sequence must be a permutation of the positions")
        if tie not in ("block", "revlex"):
            raise ValueError("tie must be 'block' or 'revlex'")
        self.eliminate = frozenset(eliminate) if eliminate else None
        self.tie = tie
        self._scan = tuple(reversed(self.sequence))

    @property
    def nvars(self):
        return len(self.cols)

    def deg(self, m):
        """A-degree of a monomial (image under the generator matrix)."""
        cols = self.cols
        d = len(cols[0]) if cols else 0
        return tuple(
            sum(m[k] * cols[k][t] for k in range(len(cols))) for t in range(d)
        )

    def weight(self, m):
        return sum(e * w for e, w in zip(m, self.weights))

    def compare(self, m1, m2):
        """Total comparison; returns -1, 0 or 1."""
        if m1 == m2:
            return 0
        if self.eliminate is not None:
            e1 = sum(m1[k] for k in self.eliminate)
            e2 = sum(m2[k] for k in self.eliminate)
            if e1 != e2:
                return 1 if e1 > e2 else -1
        w1 = self.weight(m1)
        w2 = self.weight(m2)
        if w1 != w2:
            return 1 if w1 > w2 else -1
        d1 = self.deg(m1)
        d2 = self.deg(m2)
        if d1 != d2:
            for a, b in zip(d1, d2):
                if a != b:
                    return 1 if a > b else -1
        return self._tie(m1, m2)

    def compare_graded(self, m1, m2):
        """Comparison for monomials known to share their A-degree."""
        if m1 == m2:
            return 0
        if self.eliminate is not None:
            e1 = sum(m1[k] for k in self.eliminate)
            e2 = sum(m2[k] for k in self.eliminate)
            if e1 != e2:
                return 1 if e1 > e2 else -1
        return self._tie(m1, m2)

    def _tie(self, m1, m2):
        if self.tie == "block":
            for p in range(self.s, len(m1)):
                a = m1[p]
                b = m2[p]
                if a != b:
                    return 1 if a < b else -1
            for p in range(self.s - 1, -1, -1):
                a = m1[p]
                b = m2[p]
                if a != b:
                    return 1 if a > b else -1
            return 0
        for p in self._scan:
            a = m1[p]
            b = m2[p]
            if a != b:
                return 1 if a < b else -1
        return 0

    def sort_key(self):
        return cmp_to_key(self.compare)

    def cheapest_last(self, i):
        """Reverse-lex variant with variable i in the cheapest slot."""
        seq = tuple(p for p in self.sequence if p != i) + (i,)
        return TermOrder(self.cols, self.weights, self.s, seq, self.eliminate, tie="revlex")

    def with_eliminate(self, block):
        return TermOrder(self.cols, self.weights, self.s, self.sequence, block, tie=self.tie)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: TermOrder
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def make_binomial(order, m1, m2):
    """Orient a monomial pair into a Binomial, or None when equal."""
    c = order.compare(m1, m2)
    if c == 0:
        return None
    return Binomial(m1, m2) if c > 0 else Binomial(m2, m1)


def _canonical_sort(order, elements):
    w = order.weight
    return sorted(elements, key=lambda g: (w(g.lead), g.lead, g.trail))


def buchberger(gens, order):
    """The reduced Groebner basis of an ideal of A-homogeneous binomials.

    Normal pair selection (least weight of the lcm first), the coprime
    criterion at pair creation, and the chain criterion at pop time keep
    the run deterministic and the pair queue small.
    """
    cmpg = order.compare_graded
    weight = order.weight
    leads = []
    trails = []
    masks = []
    seen = set()

    def nf(m):
        mm = support_mask(m)
        k = 0
        nbasis = len(leads)
        while k < nbasis:
            if masks[k] & ~mm:
                k += 1
                continue
            l = leads[k]
            if all(e <= f for e, f in zip(l, m)):
                t = trails[k]
                m = tuple(f - e + g for e, f, g in zip(l, m, t))
                mm = support_mask(m)
                k = 0
            else:
                k += 1
        return m

    pairs = []  # heap of (weight(lcm), lcm, i, j)
    done = set()
    wvec = order.weights

    def push_pairs(t):
        lt = leads[t]
        mt = masks[t]
        cand = []
        for i in range(t):
            if masks[i] & mt == 0:
                done.add((i, t))  # coprime leads
                continue
            l = tuple(a if a > b else b for a, b in zip(leads[i], lt))
            w = 0
            for e, ew in zip(l, wvec):
                w += e * ew
            cand.append((w, l, i))
        cand.sort()
        # Gebauer-Moller style pruning: drop pairs whose lcm is strictly
        # divided by an earlier kept lcm (M), keep one pair per lcm (F).
        # Dropped pairs are NOT marked done: the chain criterion below may
        # only cite pairs that stay scheduled or had coprime leads.
        kept = []
        seen_lcm = set()
        for w, l, i in cand:
            if l in seen_lcm:
                continue
            dominated = False
            for w2, l2 in kept:
                if w2 < w and all(a <= b for a, b in zip(l2, l)):
                    dominated = True
                    break
            if dominated:
                continue
            seen_lcm.add(l)
            kept.append((w, l))
            heapq.heappush(pairs, (w, l, i, t))

    def add(lead, trail):
        key = (lead, trail)
        if key in seen:
            return
        seen.add(key)
        leads.append(lead)
        trails.append(trail)
        masks.append(support_mask(lead))
        push_pairs(len(leads) - 1)

    for g in sorted(set(gens), key=lambda g: (weight(g.lead), g.lead, g.trail)):
        a = nf(g.lead)
        b = nf(g.trail)
        if a == b:
            continue
        c = cmpg(a, b)
        add(a, b) if c > 0 else add(b, a)

    while pairs:
        _, l, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        ml = support_mask(l)
        chained = False
        for k in range(len(leads)):
            if k == i or k == j:
                continue
            if masks[k] & ~ml:
                continue
            lk = leads[k]
            if all(e <= f for e, f in zip(lk, l)):
                p1 = (i, k) if i < k else (k, i)
                p2 = (j, k) if j < k else (k, j)
                if p1 in done and p2 in done:
                    chained = True
                    break
        if chained:
            continue
        m1 = nf(mono_mul(mono_div(l, leads[i]), trails[i]))
        m2 = nf(mono_mul(mono_div(l, leads[j]), trails[j]))
        if m1 == m2:
            continue
        c = cmpg(m1, m2)
        add(m1, m2) if c > 0 else add(m2, m1)

    # minimal leads, then tail reduction: the unique reduced basis
    idxs = sorted(range(len(leads)), key=lambda k: (weight(leads[k]), leads[k], trails[k]))
    kept = []
    for k in idxs:
        if not any(mono_divides(leads[j], leads[k]) for j in kept):
            kept.append(k)
    kleads = [leads[k] for k in kept]
    ktrails = [trails[k] for k in kept]
    kmasks = [support_mask(l) for l in kleads]

    def nf_final(m):
        mm = support_mask(m)
        k = 0
        while k < len(kleads):
            if kmasks[k] & ~mm:
                k += 1
                continue
            l = kleads[k]
            if all(e <= f for e, f in zip(l, m)):
                m = tuple(f - e + g for e, f, g in zip(l, m, ktrails[k]))
                mm = support_mask(m)
                k = 0
            else:
                k += 1
        return m

    out = [Binomial(l, nf_final(t)) for l, t in zip(kleads, ktrails)]
    return GroebnerBasis(tuple(_canonical_sort(order, out)), order, True)


class Reducer:
    """Normal-form oracle over a frozen Groebner basis, with memoization."""

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self._leads = [g.lead for g in gb.elements]
        self._trails = [g.trail for g in gb.elements]
        self._masks = [support_mask(l) for l in self._leads]
        self._cache = {}

    def normal_form_monomial(self, m):
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        orig = m
        leads = self._leads
        trails = self._trails
        masks = self._masks
        mm = support_mask(m)
        k = 0
        while k < len(leads):
            if masks[k] & ~mm:
                k += 1
                continue
            l = leads[k]
            if all(e <= f for e, f in zip(l, m)):
                m = tuple(f - e + g for e, f, g in zip(l, m, trails[k]))
                mm = support_mask(m)
                k = 0
            else:
                k += 1
        self._cache[orig] = m
        return m


def normal_form(x, gb: GroebnerBasis):
    """Normal form of a monomial or Binomial modulo a reduced basis.

    Monomials map to the unique standard monomial of their A-degree;
    binomials reduce both sides and return None when they cancel.
    """
    red = Reducer(gb)
    if isinstance(x, Binomial):
        a = red.normal_form_monomial(x.lead)
        b = red.normal_form_monomial(x.trail)
        if a == b:
            return None
        return make_binomial(gb.order, a, b)
    return red.normal_form_monomial(tuple(x))


def lattice_ideal(kernel_basis, order):
    """Binomials x^{v+} - x^{v-} for the given kernel vectors."""
    out = []
    for v in kernel_basis:
        if not any(v):
            continue
        plus = tuple(x if x > 0 else 0 for x in v)
        minus = tuple(-x if x < 0 else 0 for x in v)
        b = make_binomial(order, plus, minus)
        if b is not None:
            out.append(b)
    return _canonical_sort(order, set(out))


def saturate_toric(gens, order):
    """Saturate a lattice ideal by all variables (Hosten-Sturmfels).

    One reduced-basis pass per variable with that variable cheapest, then
    the variable is divided out of every element. The result generates the
    toric ideal of the kernel lattice the input spans.
    """
    cur = list(gens)
    for i in range(order.nvars):
        if not cur:
            break
        gb = buchberger(cur, order.cheapest_last(i))
        nxt = set()
        for l, t in gb:
            m = min(l[i], t[i])
            if m:
                l = l[:i] + (l[i] - m,) + l[i + 1:]
                t = t[:i] + (t[i] - m,) + t[i + 1:]
            nxt.add(Binomial(l, t))
        cur = _canonical_sort(order, nxt)
    return cur


def eliminate(gens, order, block=None):
    """Generators of the ideal's intersection with the Y-subring.

    Computes a reduced basis under an order making the block variables
    heaviest and keeps the elements free of them. Default block: Z-block.
    """
    if block is None:
        block = frozenset(range(order.s))
    else:
        block = frozenset(block)
    if not block:
        return list(buchberger(gens, order).elements)
    gb = buchberger(gens, order.with_eliminate(block))
    out = []
    for g in gb:
        if all(g.lead[k] == 0 for k in block):
            assert all(g.trail[k] == 0 for k in block)
            out.append(g)
    return out


def minimalize(gens, order):
    """Greedy A-graded minimalization in increasing weight order."""
    gens = _canonical_sort(order, set(gens))
    kept = []
    kept_gb = None
    for g in gens:
        if kept_gb is not None:
            red = Reducer(kept_gb)
            if red.normal_form_monomial(g.lead) == red.normal_form_monomial(g.trail):
                continue
        kept.append(g)
        kept_gb = buchberger(kept, order)
    return kept


def initial_ideal(gb: GroebnerBasis):
    """Leads of a reduced basis: the minimal initial-ideal generators."""
    w = gb.order.weight
    return sorted((g.lead for g in gb.elements), key=lambda m: (w(m), m))

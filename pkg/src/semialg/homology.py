"""Squarefree divisor complexes and reduced simplicial homology.

Three complexes per degree: T over the cone generators, the analogue over
the full generator set, and the monomial-gcd nerve complex whose reduced
homology gives the degreewise multiplicities of the short resolution.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TooManyVertices
from .exact_linalg import rank_over_field

VERTEX_CAP = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Explicit face list; the empty face belongs iff the complex is nonempty."""

    vertices: tuple   # hashable labels
    faces: frozenset  # sorted tuples of vertex positions, () included

    def dim(self):
        return max((len(f) for f in self.faces), default=0) - 1

    def faces_of_dim(self, k):
        return sorted(f for f in self.faces if len(f) == k + 1)


def _closed_faces(nvertices, has_face):
    """Grow a subset-closed complex level by level."""
    if not has_face(()):
        return frozenset()
    faces = {()}
    level = [()]
    while level:
        nxt = []
        for f in level:
            start = f[-1] + 1 if f else 0
            for v in range(start, nvertices):
                g = f + (v,)
                if all(
                    tuple(x for x in g if x != w) in faces for w in g
                ) and has_face(g):
                    faces.add(g)
                    nxt.append(g)
        level = nxt
    return frozenset(faces)


def build_T(S, a) -> SimplicialComplex:
    """Faces F of the E-generators with a - sum(F) in S."""
    labels = tuple(S.generators[i] for i in S.E_indices)
    if len(labels) > VERTEX_CAP:
        raise TooManyVertices(f"{len(labels)} cone generators (cap {VERTEX_CAP})")
    a = tuple(int(x) for x in a)

    def has_face(f):
        rem = a
        for v in f:
            rem = tuple(p - q for p, q in zip(rem, labels[v]))
        return S.is_member(rem)

    return SimplicialComplex(labels, _closed_faces(len(labels), has_face))


def build_Delta(S, a) -> SimplicialComplex:
    """Same face rule over the full generator set."""
    labels = S.generators
    if len(labels) > VERTEX_CAP:
        raise TooManyVertices(f"{len(labels)} generators (cap {VERTEX_CAP})")
    a = tuple(int(x) for x in a)

    def has_face(f):
        rem = a
        for v in f:
            rem = tuple(p - q for p, q in zip(rem, labels[v]))
        return S.is_member(rem)

    return SimplicialComplex(labels, _closed_faces(len(labels), has_face))


def vertex_set_C(S, a):
    """Y-monomials v with deg(v) + deg(u) = a for some standard u."""
    a = tuple(int(x) for x in a)
    order = S.order
    r = order.r
    out = set()
    for u in S.standard_Q():
        du = order.deg(u + (0,) * r)
        rem = tuple(p - q for p, q in zip(a, du))
        for v in S.e_factorizations(rem):
            out.add(v)
    return sorted(out)


def build_Gamma(S, a) -> SimplicialComplex:
    """Nerve-style complex: faces are monomial sets with nontrivial gcd.

    The gcd of Y-monomials is the componentwise minimum; single vertices
    with zero exponent vector (the monomial 1) span no face.
    """
    C = vertex_set_C(S, a)
    if len(C) > VERTEX_CAP:
        raise TooManyVertices(f"|C| = {len(C)} (cap {VERTEX_CAP})")
    if not C:
        return SimplicialComplex((), frozenset())

    def has_face(f):
        if not f:
            return True
        g = C[f[0]]
        for v in f[1:]:
            g = tuple(min(p, q) for p, q in zip(g, C[v]))
        return any(g)

    return SimplicialComplex(tuple(C), _closed_faces(len(C), has_face))


@dataclass(frozen=True)
class ChainComplex:
    """Boundary matrices of the augmented chain complex, dims -1..top."""

    faces: tuple       # faces[k] lists the faces of dimension k-1
    boundaries: tuple  # boundaries[k]: matrix from dim k-1 faces to dim k-2

    def top_dim(self):
        return len(self.faces) - 2


def chain_complex(K: SimplicialComplex) -> ChainComplex:
    if not K.faces:
        return ChainComplex((), ())
    top = K.dim()
    faces = [K.faces_of_dim(k) for k in range(-1, top + 1)]
    index = [{f: i for i, f in enumerate(layer)} for layer in faces]
    boundaries = []
    for k in range(len(faces)):
        if k == 0:
            boundaries.append([])  # nothing below the empty face
            continue
        rows = len(faces[k - 1])
        mat = [[0] * len(faces[k]) for _ in range(rows)]
        for j, f in enumerate(faces[k]):
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                mat[index[k - 1][sub]][j] += (-1) ** pos
        boundaries.append(mat)
    return ChainComplex(tuple(tuple(map(tuple, layer)) for layer in faces),
                        tuple(tuple(map(tuple, m)) for m in boundaries))


def reduced_homology(K: SimplicialComplex, i, char=0):
    """Dimension of the i-th reduced homology over Q or GF(char).

    Conventions: the empty complex has zero homology everywhere; the
    complex containing only the empty face has one dimension in index -1.
    """
    if i < -1 or not K.faces:
        return 0
    cc = chain_complex(K)
    k = i + 1  # layer index within the chain complex
    if k >= len(cc.faces):
        return 0
    nfaces = len(cc.faces[k])
    rank_in = rank_over_field([list(r) for r in cc.boundaries[k]], char) if cc.boundaries[k] else 0
    if k + 1 < len(cc.boundaries) and cc.boundaries[k + 1]:
        rank_out = rank_over_field([list(r) for r in cc.boundaries[k + 1]], char)
    else:
        rank_out = 0
    return nfaces - rank_in - rank_out


def betti_at_degree(S, a, i, char=0):
    """Multiplicity of the layer-i syzygies of the short resolution at a.

    Index convention: i = -1 is the generator layer (standard monomials),
    i = 0 the first relations. Computed as reduced homology of the nerve
    complex at a.
    """
    if i < -1:
        return 0
    return reduced_homology(build_Gamma(S, a), i, char)


@dataclass(frozen=True)
class NerveReport:
    degree: tuple
    rows: tuple  # (i, dim_nerve, dim_T, equal)

    @property
    def ok(self):
        return all(r[3] for r in self.rows)


def nerve_check(S, a, i_max=2, char=0) -> NerveReport:
    """Compare nerve and divisor-complex homology in each index."""
    gamma = build_Gamma(S, a)
    t = build_T(S, a)
    rows = []
    for i in range(-1, i_max + 1):
        dg = reduced_homology(gamma, i, char)
        dt = reduced_homology(t, i, char)
        rows.append((i, dg, dt, dg == dt))
    return NerveReport(tuple(a), tuple(rows))


@dataclass(frozen=True)
class TransferReport:
    degree: tuple
    index: int
    hypothesis_holds: bool
    rows: tuple  # (F, shifted degree, layer, value, ok)

    @property
    def ok(self):
        return all(r[4] for r in self.rows)


def vanishing_transfer_check(S, a, i, char=0) -> TransferReport:
    """Betti vanishing transfer from the ambient ring to the short resolution.

    If the degree-a ambient Betti number (full divisor complex, index i)
    vanishes, every shift of a by a subset F of the non-cone generators
    with |F| <= i+1 must have vanishing layer i-|F| multiplicity; layers
    below zero are vacuous.
    """
    a = tuple(int(x) for x in a)
    h = reduced_homology(build_Delta(S, a), i, char)
    if h != 0:
        return TransferReport(a, i, False, ())
    b_cols = [S.generators[j] for j in S.B_indices]
    rows = []
    from itertools import combinations

    for size in range(0, min(i + 1, len(b_cols)) + 1):
        for F in combinations(range(len(b_cols)), size):
            a2 = a
            for j in F:
                a2 = tuple(p - q for p, q in zip(a2, b_cols[j]))
            layer = i - size
            if layer < 0:
                rows.append((F, a2, layer, 0, True))
                continue
            val = betti_at_degree(S, a2, layer, char)
            rows.append((F, a2, layer, val, val == 0))
    return TransferReport(a, i, True, tuple(rows))

"""Gröbner bases of submodules of free modules and the operations built on them.

Module elements are handled internally as dicts ``{(position, exponent): coef}``.
The Buchberger loop keeps, for every basis element, its expression in the
input generators, so lifts and syzygies come out of the same run.
"""

from __future__ import annotations

import heapq
import itertools
import operator
import threading
from typing import Sequence

from .ring import Matrix, MonomialOrder, Polynomial, Ring, ShapeError, _div

__all__ = [
    "Submodule", "GroebnerBasis", "NotInModule", "UnitIdealError",
    "ideal", "groebner_basis", "normal_form", "lift", "syzygies", "intersect",
    "quotient", "colon_functionals", "annihilator", "dimension", "codimension",
    "is_groebner", "module_quotient", "submodule_colon",
]

_add = operator.add
_sub = operator.sub


class NotInModule(ValueError):
    """Raised by :func:`lift`; ``witness`` is the nonzero normal form."""

    def __init__(self, witness):
        super().__init__("vector is not in the submodule")
        self.witness = witness


class UnitIdealError(ValueError):
    pass


# --------------------------------------------------------------------------
# sparse module vectors

def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _shift(vec, mono, coef, p):
    """coef * x^mono * vec."""
    if p:
        return {(q, tuple(map(_add, e, mono))): c * coef % p for (q, e), c in vec.items()}
    return {(q, tuple(map(_add, e, mono))): c * coef for (q, e), c in vec.items()}


def _axpy(target, vec, mono, coef, p):
    """target -= coef * x^mono * vec, in place."""
    for (q, e), c in vec.items():
        t = (q, tuple(map(_add, e, mono)))
        v = target.get(t, 0) - coef * c
        if p:
            v %= p
        if v:
            target[t] = v
        else:
            target.pop(t, None)


def _vadd(a, b, p, sign=1):
    out = dict(a)
    for t, c in b.items():
        v = out.get(t, 0) + sign * c
        if p:
            v %= p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _scale(vec, coef, p):
    if p:
        return {t: c * coef % p for t, c in vec.items()}
    return {t: c * coef for t, c in vec.items()}


def _poly_times_vec(poly, vec, p):
    out = {}
    for m, a in poly.items():
        for (q, e), c in vec.items():
            t = (q, tuple(map(_add, e, m)))
            v = out.get(t, 0) + a * c
            if p:
                v %= p
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def _columns_to_vecs(columns):
    vecs = []
    for col in columns:
        v = {}
        for i, f in enumerate(col):
            for e, c in f._terms.items():
                v[(i, e)] = c
        vecs.append(v)
    return vecs


def _vec_to_column(ring, vec, rank):
    parts = [dict() for _ in range(rank)]
    for (q, e), c in vec.items():
        parts[q][e] = c
    return tuple(Polynomial._make(ring, d) for d in parts)


def _unit(i, nvars):
    return {(i, (0,) * nvars): 1}


# --------------------------------------------------------------------------
# Buchberger engine

class _Engine:
    """Incremental Buchberger state.

    Pairs are taken by the normal strategy (smallest lcm degree, ties by
    index). The chain criterion is tested first; pairs of single-component
    vectors with coprime leads are settled by the product criterion and
    contribute their Koszul syzygy.
    """

    def __init__(self, key, degree, p, nvars, track=True):
        self.key = key
        self.degree = degree
        self.p = p
        self.nvars = nvars
        self.track = track
        self.vecs = []
        self.trans = []
        self.leads = []
        self.single = []
        self.by_pos = {}
        self.heap = []
        self.pending = set()
        self.syz = []

    # reduction ------------------------------------------------------------
    def reduce(self, vec, trans=None, skip=None):
        """Full reduction. Returns (remainder, trans - quotient combination)."""
        p = self.p
        key = self.key
        f = dict(vec)
        t_acc = dict(trans) if trans is not None else None
        rem = {}
        while f:
            t = max(f, key=key)
            c = f[t]
            pos, e = t
            hit = None
            for idx in self.by_pos.get(pos, ()):
                if idx != skip and _divides(self.leads[idx][1], e):
                    hit = idx
                    break
            if hit is None:
                rem[t] = c
                del f[t]
                continue
            m = tuple(map(_sub, e, self.leads[hit][1]))
            _axpy(f, self.vecs[hit], m, c, p)
            if t_acc is not None and self.trans[hit] is not None:
                _axpy(t_acc, self.trans[hit], m, c, p)
        return rem, t_acc

    # basis maintenance ----------------------------------------------------
    def _append(self, vec, trans):
        p = self.p
        lead = max(vec, key=self.key)
        lc = vec[lead]
        if lc != 1:
            inv = _div(1, lc, p)
            vec = _scale(vec, inv, p)
            if trans is not None:
                trans = _scale(trans, inv, p)
        idx = len(self.vecs)
        self.vecs.append(vec)
        self.trans.append(trans)
        self.leads.append(lead)
        self.single.append(len({q for q, _ in vec}) == 1)
        same = self.by_pos.setdefault(lead[0], [])
        for j in same:
            L = tuple(map(max, self.leads[j][1], lead[1]))
            item = (self.degree(lead[0], L), j, idx)
            heapq.heappush(self.heap, item)
            self.pending.add((j, idx))
        same.append(idx)
        return idx

    def add(self, vec, trans=None):
        """Add an input generator (zero vectors only record their syzygy)."""
        if not vec:
            if trans is not None:
                self.syz.append(trans)
            return None
        return self._append(vec, trans)

    def _chain(self, i, j, L):
        pos = self.leads[i][0]
        pend = self.pending
        for k in self.by_pos[pos]:
            if k == i or k == j:
                continue
            if not _divides(self.leads[k][1], L):
                continue
            if (min(i, k), max(i, k)) in pend or (min(j, k), max(j, k)) in pend:
                continue
            return True
        return False

    def run(self):
        p = self.p
        while self.heap:
            _, i, j = heapq.heappop(self.heap)
            self.pending.discard((i, j))
            (pos, a), (_, b) = self.leads[i], self.leads[j]
            L = tuple(map(max, a, b))
            if self._chain(i, j, L):
                continue
            if self.single[i] and self.single[j] and all(x == 0 or y == 0 for x, y in zip(a, b)):
                if self.trans[i] is not None:
                    fi = {e: c for (q, e), c in self.vecs[i].items()}
                    fj = {e: c for (q, e), c in self.vecs[j].items()}
                    s = _vadd(_poly_times_vec(fj, self.trans[i], p),
                              _poly_times_vec(fi, self.trans[j], p), p, sign=-1)
                    if s:
                        self.syz.append(s)
                continue
            ma = tuple(map(_sub, L, a))
            mb = tuple(map(_sub, L, b))
            s = _shift(self.vecs[i], ma, 1, p)
            _axpy(s, self.vecs[j], mb, 1, p)
            st = None
            if self.track:
                st = _shift(self.trans[i], ma, 1, p)
                _axpy(st, self.trans[j], mb, 1, p)
            rem, st = self.reduce(s, st)
            if rem:
                self._append(rem, st)
            elif st:
                self.syz.append(st)

    def reduced(self):
        """Indices and data of the reduced basis: (vec, trans) pairs, monic."""
        keep = []
        for i, (pos, e) in enumerate(self.leads):
            redundant = False
            for j in self.by_pos[pos]:
                if j == i:
                    continue
                le = self.leads[j][1]
                if _divides(le, e) and (le != e or j < i):
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
        sub = _Engine(self.key, self.degree, self.p, self.nvars, self.track)
        for i in keep:
            sub.vecs.append(self.vecs[i])
            sub.trans.append(self.trans[i])
            sub.leads.append(self.leads[i])
            sub.single.append(self.single[i])
            sub.by_pos.setdefault(self.leads[i][0], []).append(len(sub.vecs) - 1)
        out = []
        for k in range(len(keep)):
            rem, tr = sub.reduce(sub.vecs[k], sub.trans[k], skip=k)
            out.append((rem, tr))
        for k, (rem, tr) in enumerate(out):
            sub.vecs[k] = rem
            sub.trans[k] = tr
        return sub


def _make_engine(order: MonomialOrder, ring: Ring, track=True, nvars=None):
    return _Engine(order.key, order.term_degree, ring.field.characteristic,
                   ring.nvars if nvars is None else nvars, track)


# --------------------------------------------------------------------------
# public types

class GroebnerBasis:
    """Reduced Gröbner basis with the transition matrix to the input generators.

    ``elements`` are column tuples; ``transition`` is s x t with
    ``generators @ transition == basis matrix``.
    """

    def __init__(self, module: "Submodule", order: MonomialOrder, engine: _Engine):
        self.module = module
        self.ring = module.ring
        self.rank = module.rank
        self.order = order
        self._engine = engine
        ring = self.ring
        self.elements = [_vec_to_column(ring, v, self.rank) for v in engine.vecs]
        self.leading_terms = list(engine.leads)
        s = module.ngens
        cols = [_vec_to_column(ring, t, s) for t in engine.trans]
        self.transition = Matrix.from_columns(ring, cols, s) if cols else Matrix.zeros(ring, s, 0)

    def matrix(self) -> Matrix:
        if not self.elements:
            return Matrix.zeros(self.ring, self.rank, 0)
        return Matrix.from_columns(self.ring, self.elements, self.rank)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self) -> bool:
        """For ideals: the basis contains a nonzero constant."""
        z = (0,) * self.ring.nvars
        return any(e == z for _, e in self.leading_terms)

    def _reduce_vec(self, vec, with_quotient=False):
        trans = {} if with_quotient else None
        return self._engine.reduce(vec, trans)


class Submodule:
    """Submodule of O^rank generated by the columns of a matrix."""

    def __init__(self, ring: Ring, generators, rank: int | None = None,
                 order: MonomialOrder | None = None):
        if isinstance(generators, Matrix):
            gens = generators
        else:
            cols = [tuple(c) if isinstance(c, (list, tuple)) else (c,) for c in generators]
            if rank is None:
                if not cols:
                    raise ShapeError("rank needed for an empty generator list")
                rank = len(cols[0])
            gens = Matrix.from_columns(ring, cols, rank) if cols else Matrix.zeros(ring, rank, 0)
        if rank is not None and gens.nrows != rank:
            raise ShapeError("generators do not match the ambient rank")
        self.ring = ring
        self.rank = gens.nrows
        self.gens = gens
        self.ngens = gens.ncols
        if order is None:
            order = MonomialOrder(ring.order.tag, "top")
        self.order = order
        self._lock = threading.Lock()
        self._cache = {}

    def columns(self):
        return self.gens.columns()

    # cached computation ---------------------------------------------------
    def _compute(self, order=None):
        order = order or self.order
        with self._lock:
            hit = self._cache.get(order)
            if hit is not None:
                return hit
        eng = _make_engine(order, self.ring)
        for i, v in enumerate(_columns_to_vecs(self.columns())):
            eng.add(v, _unit(i, self.ring.nvars))
        eng.run()
        result = (GroebnerBasis(self, order, eng.reduced()), eng.syz)
        with self._lock:
            self._cache.setdefault(order, result)
            return self._cache[order]

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        return self._compute(order)[0]

    # membership -----------------------------------------------------------
    def _vec(self, v):
        if isinstance(v, Polynomial) and self.rank == 1:
            v = (v,)
        v = tuple(self.ring(x) for x in v)
        if len(v) != self.rank:
            raise ShapeError(f"vector of length {len(v)} in a module of rank {self.rank}")
        return v, _columns_to_vecs([v])[0]

    def reduce(self, v) -> tuple:
        _, vec = self._vec(v)
        rem, _ = self.groebner()._reduce_vec(vec)
        return _vec_to_column(self.ring, rem, self.rank)

    def contains(self, v) -> bool:
        _, vec = self._vec(v)
        rem, _ = self.groebner()._reduce_vec(vec)
        return not rem

    __contains__ = contains

    def lift(self, v) -> tuple:
        """Coefficients c with ``gens @ c == v``; raises :class:`NotInModule`."""
        _, vec = self._vec(v)
        gb = self.groebner()
        rem, tr = gb._reduce_vec(vec, with_quotient=True)
        if rem:
            raise NotInModule(_vec_to_column(self.ring, rem, self.rank))
        # the reduction subtracted the quotient combination from zero
        return _vec_to_column(self.ring, _scale(tr, -1, self.ring.field.characteristic), self.ngens)

    def issubset(self, other: "Submodule") -> bool:
        if self.rank != other.rank:
            raise ShapeError("rank mismatch")
        return all(other.contains(c) for c in self.columns())

    def equals(self, other: "Submodule") -> bool:
        return self.issubset(other) and other.issubset(self)

    def is_zero(self) -> bool:
        return all(not x for c in self.columns() for x in c)

    def is_whole(self) -> bool:
        """True iff the submodule is all of O^rank (the unit ideal when rank 1)."""
        z = self.ring.zero
        o = self.ring.one
        for i in range(self.rank):
            e = tuple(o if j == i else z for j in range(self.rank))
            if not self.contains(e):
                return False
        return True

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for c in self.columns() for f in c)

    def is_monomial(self) -> bool:
        return all(sum(1 for f in c if f) <= 1 and all(f.is_monomial() for f in c if f)
                   for c in self.columns())

    def prune(self) -> "Submodule":
        return Submodule(self.ring, _prune(self.ring, self.columns(), self.rank, self.order),
                         self.rank, self.order)

    def __repr__(self):
        cols = ", ".join("(" + ", ".join(str(f) for f in c) + ")" if self.rank > 1 else str(c[0])
                         for c in self.columns())
        return f"Submodule(rank={self.rank}, [{cols}])"


def ideal(ring: Ring, polys) -> Submodule:
    """The ideal generated by ``polys``, as a rank-1 submodule."""
    return Submodule(ring, [(ring(f),) for f in polys], 1)


# --------------------------------------------------------------------------
# module-level operations

def groebner_basis(M: Submodule, order: MonomialOrder | None = None) -> GroebnerBasis:
    return M.groebner(order)


def normal_form(v, G: GroebnerBasis) -> tuple:
    if isinstance(v, Polynomial):
        v = (v,)
    if len(v) != G.rank:
        raise ShapeError("rank mismatch")
    vec = _columns_to_vecs([tuple(G.ring(x) for x in v)])[0]
    rem, _ = G._reduce_vec(vec)
    return _vec_to_column(G.ring, rem, G.rank)


def lift(v, M: Submodule) -> tuple:
    return M.lift(v)


def is_groebner(G: GroebnerBasis) -> bool:
    """Independent Buchberger-criterion check: every S-vector reduces to zero."""
    eng = G._engine
    p = eng.p
    n = len(eng.vecs)
    for i in range(n):
        for j in range(i + 1, n):
            (pi, a), (pj, b) = eng.leads[i], eng.leads[j]
            if pi != pj:
                continue
            L = tuple(map(max, a, b))
            s = _shift(eng.vecs[i], tuple(map(_sub, L, a)), _div(1, eng.vecs[i][eng.leads[i]], p), p)
            _axpy(s, eng.vecs[j], tuple(map(_sub, L, b)), _div(1, eng.vecs[j][eng.leads[j]], p), p)
            rem, _ = eng.reduce(s)
            if rem:
                return False
    return True


def _prune(ring, columns, rank, order, normalize=False):
    """Drop generators lying in the span of the ones kept before them.

    Columns are visited by increasing degree of their lead term (shift-aware
    for Schreyer orders), which yields a minimal generating set for graded
    input.
    """
    vecs = [v for v in _columns_to_vecs(columns) if v]
    seen = set()
    uniq = []
    for v in vecs:
        k = frozenset(v.items())
        if k not in seen:
            seen.add(k)
            uniq.append(v)
    key = order.key

    def sort_key(v):
        lead = max(v, key=key)
        return (order.term_degree(*lead), len(v))

    uniq.sort(key=sort_key)
    eng = _make_engine(order, ring, track=False)
    kept = []
    for v in uniq:
        rem, _ = eng.reduce(v)
        if not rem:
            continue
        if normalize:
            lc, q = v[max(v, key=key)], ring.field.characteristic
            if q and lc != 1:
                v = _scale(v, _div(1, lc, q), q)
            elif not q and lc < 0:
                v = _scale(v, -1, 0)
        kept.append(v)
        eng.add(v)
        eng.run()
    return [_vec_to_column(ring, v, rank) for v in kept]


def syzygies(M: Submodule, prune: bool = True) -> Submodule:
    """Generators of ker(O^s -> O^r, e_i -> gen_i), in the induced Schreyer order."""
    gb, raw = M._compute()
    s = M.ngens
    leads = []
    key = M.order.key
    for v in _columns_to_vecs(M.columns()):
        leads.append(max(v, key=key) if v else None)
    sorder = MonomialOrder.schreyer(M.order, leads)
    cols = [_vec_to_column(M.ring, t, s) for t in raw]
    if prune:
        cols = _prune(M.ring, cols, s, sorder)
    return Submodule(M.ring, cols, s, sorder) if cols else Submodule(M.ring, Matrix.zeros(M.ring, s, 0), s, sorder)


def _check_rank(M, N):
    if M.ring != N.ring:
        from .ring import SessionMismatchError
        raise SessionMismatchError("submodules live in different rings")
    if M.rank != N.rank:
        raise ShapeError(f"ambient ranks differ: {M.rank} vs {N.rank}")


def intersect(M: Submodule, N: Submodule) -> Submodule:
    """M ∩ N by eliminating t from t*M + (1-t)*N."""
    _check_rank(M, N)
    ring = M.ring
    n = ring.nvars
    base = M.order

    def key(term):
        pos, e = term
        return (e[0], base.term_key(pos, e[1:]))

    def degree(pos, e):
        return sum(e)

    eng = _Engine(key, degree, ring.field.characteristic, n + 1, track=False)
    p = ring.field.characteristic
    for v in _columns_to_vecs(M.columns()):
        eng.add({(q, (1,) + e): c for (q, e), c in v.items()})
    for v in _columns_to_vecs(N.columns()):
        w = {(q, (0,) + e): c for (q, e), c in v.items()}
        for (q, e), c in v.items():
            w[(q, (1,) + e)] = (-c) % p if p else -c
        eng.add({t: c for t, c in w.items() if c})
    eng.run()
    red = eng.reduced()
    cols = []
    for vec, lead in zip(red.vecs, red.leads):
        if lead[1][0] == 0:
            cols.append({(q, e[1:]): c for (q, e), c in vec.items()})
    cols = [_vec_to_column(ring, v, M.rank) for v in cols]
    cols = _prune(ring, cols, M.rank, base, normalize=True)
    return Submodule(ring, cols, M.rank, base) if cols else Submodule(ring, Matrix.zeros(ring, M.rank, 0), M.rank, base)


def _first_rows(S: Submodule, k: int, ring, order=None):
    cols = [c[:k] for c in S.columns()]
    cols = [c for c in cols if any(c)]
    order = order or MonomialOrder(ring.order.tag, "top")
    cols = _prune(ring, cols, k, order, normalize=True)
    return Submodule(ring, cols, k, order) if cols else Submodule(ring, Matrix.zeros(ring, k, 0), k, order)


def submodule_colon(M: Submodule, v) -> Submodule:
    """The ideal {a : a*v in M} for a single vector v."""
    ring = M.ring
    v = tuple(ring(x) for x in v)
    if len(v) != M.rank:
        raise ShapeError("rank mismatch")
    A = Matrix.from_columns(ring, [v], M.rank).hstack(M.gens)
    S = syzygies(Submodule(ring, A))
    return _first_rows(S, 1, ring)


def quotient(M: Submodule, N: Submodule) -> Submodule:
    """The ideal M : N = {a in O : a*N ⊆ M}; the unit ideal when N ⊆ M."""
    _check_rank(M, N)
    ring = M.ring
    result = None
    for col in N.columns():
        if not any(col):
            continue
        part = submodule_colon(M, col)
        result = part if result is None else intersect(result, part)
    if result is None:
        return ideal(ring, [1])
    return result


def module_quotient(M: Submodule, N: Submodule) -> Submodule:
    """Syzygy route to M ∩ N, used as an independent cross-check of :func:`intersect`."""
    _check_rank(M, N)
    ring = M.ring
    A = M.gens.hstack(-N.gens) if N.ngens else M.gens
    S = syzygies(Submodule(ring, A))
    cols = [M.gens.apply(c[:M.ngens]) for c in S.columns()]
    cols = [c for c in cols if any(c)]
    cols = _prune(ring, cols, M.rank, M.order, normalize=True)
    return Submodule(ring, cols, M.rank) if cols else Submodule(ring, Matrix.zeros(ring, M.rank, 0), M.rank)


def colon_functionals(I: Submodule, J: Submodule) -> Submodule:
    """Functionals g on O^r with g(v) in I for every generator v of J.

    Functionals are returned as vectors of O^r (the rows of g).
    """
    if I.rank != 1:
        raise ShapeError("I must be an ideal")
    ring = I.ring
    r = J.rank
    f = [c[0] for c in I.columns() if c[0]]
    vs = J.columns()
    s = len(vs)
    if s == 0:
        eye = Matrix.identity(ring, r)
        return Submodule(ring, eye, r)
    z = ring.zero
    cols = []
    for i in range(r):
        cols.append(tuple(v[i] for v in vs))
    for j in range(s):
        for fk in f:
            cols.append(tuple(fk if jj == j else z for jj in range(s)))
    S = syzygies(Submodule(ring, cols, s))
    return _first_rows(S, r, ring)


def annihilator(P) -> Submodule:
    """Ann(O^r / im P), as the intersection of the column colons (J : e_i)."""
    if isinstance(P, Submodule):
        J = P
    else:
        J = Submodule(P.ring, P)
    ring = J.ring
    if J.rank == 0:
        return ideal(ring, [1])
    if J.rank == 1:
        return ideal(ring, [c[0] for c in J.columns() if c[0]] or [0])
    z, o = ring.zero, ring.one
    result = None
    for i in range(J.rank):
        e = tuple(o if k == i else z for k in range(J.rank))
        part = submodule_colon(J, e)
        result = part if result is None else intersect(result, part)
        if result.is_zero():
            break
    return result


def dimension(I: Submodule) -> int:
    """Krull dimension of O/I from the lead monomials; -1 for the unit ideal."""
    if I.rank != 1:
        raise ShapeError("dimension is defined here for ideals")
    gb = I.groebner()
    if gb.is_unit():
        return -1
    n = I.ring.nvars
    leads = [e for _, e in gb.leading_terms]
    supports = [frozenset(i for i, k in enumerate(e) if k) for e in leads]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0


def codimension(I: Submodule) -> int:
    d = dimension(I)
    if d < 0:
        raise UnitIdealError("codimension of the unit ideal is undefined")
    return I.ring.nvars - d

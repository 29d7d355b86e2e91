"""Finite free complexes, resolutions, dualization and comparison morphisms."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .groebner import NotInModule, Submodule, syzygies, _prune
from .ring import Matrix, MonomialOrder, Ring, ShapeError, det

__all__ = [
    "FreeComplex", "ChainMap", "SubquotientPresentation", "HomotopyFailure",
    "ChainMapError", "koszul", "schreyer_resolution", "minimize", "hom_dual",
    "homology_presentation", "lift_chain_map", "homotopy_between", "wedge_power",
    "direct_sum", "check_h0_equivalence",
]


class ChainMapError(ValueError):
    """A map does not descend; ``witness`` is the offending column."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class HomotopyFailure(ValueError):
    def __init__(self, message, degree=None, witness=None):
        super().__init__(message)
        self.degree = degree
        self.witness = witness


class FreeComplex:
    """Free modules O^{r_0}, ..., O^{r_N} with differentials.

    For a chain complex ``maps[k-1]`` is d_k : O^{r_k} -> O^{r_{k-1}}.
    For a cochain complex (``cochain=True``, as produced by :func:`hom_dual`)
    ``maps[k-1]`` is d^{k-1} : O^{r_{k-1}} -> O^{r_k}.
    """

    def __init__(self, ring: Ring, maps, ranks=None, tag: str = "manual",
                 cochain: bool = False, complete: bool = True, minimal: bool = False):
        maps = list(maps)
        if ranks is None:
            if not maps:
                raise ShapeError("ranks are required for a complex without maps")
            ranks = [maps[0].ncols if cochain else maps[0].nrows]
            for m in maps:
                ranks.append(m.nrows if cochain else m.ncols)
        ranks = list(ranks)
        if len(ranks) != len(maps) + 1:
            raise ShapeError("need exactly one more rank than maps")
        for k, m in enumerate(maps, start=1):
            want = (ranks[k], ranks[k - 1]) if cochain else (ranks[k - 1], ranks[k])
            if m.shape != want:
                raise ShapeError(f"map {k} has shape {m.shape}, expected {want}")
        for k in range(1, len(maps)):
            a, b = maps[k - 1], maps[k]
            comp = b @ a if cochain else a @ b
            if not comp.is_zero():
                raise ValueError(f"differentials {k} and {k + 1} do not compose to zero")
        self.ring = ring
        self.maps = maps
        self.ranks = ranks
        self.tag = tag
        self.cochain = cochain
        self.complete = complete
        self.minimal = minimal
        self.comparison = None
        self._images = {}

    @property
    def length(self) -> int:
        return len(self.maps)

    def rank(self, k: int) -> int:
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def d(self, k: int) -> Matrix:
        """The k-th differential (d_k for chains, d^k for cochains), zero outside range."""
        if self.cochain:
            if 0 <= k < len(self.maps):
                return self.maps[k]
            return Matrix.zeros(self.ring, self.rank(k + 1), self.rank(k))
        if 1 <= k <= len(self.maps):
            return self.maps[k - 1]
        return Matrix.zeros(self.ring, self.rank(k - 1), self.rank(k))

    def image(self, k: int) -> Submodule:
        """Image of d(k) as a submodule (cached)."""
        if k not in self._images:
            self._images[k] = Submodule(self.ring, self.d(k))
        return self._images[k]

    def is_homogeneous(self) -> bool:
        return all(x.is_homogeneous() for m in self.maps for r in m.rows for x in r)

    def __repr__(self):
        kind = "cochain" if self.cochain else "chain"
        return f"FreeComplex({self.tag}, {kind}, ranks={self.ranks})"


@dataclass
class ChainMap:
    source: FreeComplex
    target: FreeComplex
    maps: list

    def __getitem__(self, k):
        if 0 <= k < len(self.maps):
            return self.maps[k]
        return Matrix.zeros(self.source.ring, self.target.rank(k), self.source.rank(k))

    def verify(self) -> bool:
        """Exact check of d_k a_k = a_{k-1} d_k in every degree."""
        for k in range(1, len(self.maps)):
            if self.target.d(k) @ self.maps[k] != self.maps[k - 1] @ self.source.d(k):
                return False
        return True


@dataclass
class SubquotientPresentation:
    """H = ker(out) / im(in) at one spot of a complex.

    ``generators`` is ambient x m; its columns span the kernel. ``relations``
    is m x s and H is isomorphic to O^m / im(relations).
    """

    ring: Ring
    ambient_rank: int
    generators: Matrix
    relations: Matrix
    degree: int
    complex: FreeComplex | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def ngens(self) -> int:
        return self.generators.ncols

    def relation_module(self) -> Submodule:
        if "rel" not in self._cache:
            self._cache["rel"] = Submodule(self.ring, self.relations)
        return self._cache["rel"]

    def is_zero(self) -> bool:
        return self.ngens == 0 or self.relation_module().is_whole()

    def generator_columns(self):
        return self.generators.columns()

    def coordinates(self, v) -> tuple:
        """Coordinates of a kernel vector in terms of the generators."""
        if "gen" not in self._cache:
            self._cache["gen"] = Submodule(self.ring, self.generators)
        return self._cache["gen"].lift(v)

    def is_boundary(self, v) -> bool:
        """True when the kernel vector v lies in the image of the incoming map."""
        if self.ngens == 0:
            return True
        return self.relation_module().contains(self.coordinates(v))


def _basis(p, k):
    return list(itertools.combinations(range(p), k))


def koszul(f) -> FreeComplex:
    """Koszul complex of f_1..f_p, wedge basis in lexicographic order.

    d(e_S) = sum over positions j of (-1)^j f_{S[j]} e_{S minus S[j]}, j counted from 0.
    """
    f = list(f)
    if not f:
        raise ValueError("koszul needs at least one element")
    ring = f[0].ring
    f = [ring(x) for x in f]
    p = len(f)
    maps = []
    for k in range(1, p + 1):
        src = _basis(p, k)
        tgt = {S: i for i, S in enumerate(_basis(p, k - 1))}
        rows = [[ring.zero] * len(src) for _ in tgt]
        for c, S in enumerate(src):
            for j, i in enumerate(S):
                rest = S[:j] + S[j + 1:]
                rows[tgt[rest]][c] = f[i] if j % 2 == 0 else -f[i]
        maps.append(Matrix(ring, rows, len(tgt), len(src)))
    return FreeComplex(ring, maps, tag="koszul")


def wedge_power(A: Matrix, k: int) -> Matrix:
    """k-th exterior power: entry (T, S) is the minor det A[T, S]."""
    if k == 0:
        return Matrix.identity(A.ring, 1)
    rows = _basis(A.nrows, k)
    cols = _basis(A.ncols, k)
    return Matrix(A.ring, [[det(A.submatrix(T, S)) for S in cols] for T in rows],
                  len(rows), len(cols))


def schreyer_resolution(P: Matrix, min_length: int | None = None) -> FreeComplex:
    """Free resolution of coker P by iterated syzygies.

    d_1 is P itself; later differentials are pruned syzygy generators in the
    induced Schreyer orders. The loop stops at a zero kernel; ``complete`` is
    False only if the safety cap (n + 2 steps) is hit first.
    """
    ring = P.ring
    maps = []
    M = Submodule(ring, P)
    cap = ring.nvars + 2
    if min_length is not None:
        cap = max(cap, min_length)
    complete = False
    if P.ncols:
        maps.append(P)
        for _ in range(cap):
            S = syzygies(M)
            if S.ngens == 0:
                complete = True
                break
            maps.append(S.gens)
            M = S
    else:
        complete = True
    return FreeComplex(ring, maps, ranks=[P.nrows] + [m.ncols for m in maps],
                       tag="schreyer", complete=complete)


def hom_dual(C: FreeComplex) -> FreeComplex:
    """Hom(-, O): transpose every differential and flip the direction."""
    return FreeComplex(C.ring, [m.T for m in C.maps], ranks=C.ranks, tag=C.tag,
                       cochain=not C.cochain, complete=C.complete, minimal=C.minimal)


def direct_sum(*complexes: FreeComplex) -> FreeComplex:
    ring = complexes[0].ring
    N = max(c.length for c in complexes)
    maps = []
    for k in range(1, N + 1):
        m = None
        for c in complexes:
            block = c.d(k)
            m = block if m is None else m.block_diag(block)
        maps.append(m)
    ranks = [sum(c.rank(k) for c in complexes) for k in range(N + 1)]
    return FreeComplex(ring, maps, ranks=ranks, tag="sum",
                       cochain=complexes[0].cochain)


def _unit_entry(m: Matrix):
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            if x and x.is_constant():
                return i, j, x.constant_value()
    return None


def _drop(m: Matrix, row=None, col=None) -> Matrix:
    rows = [i for i in range(m.nrows) if i != row]
    cols = [j for j in range(m.ncols) if j != col]
    return m.submatrix(rows, cols)


def minimize(C: FreeComplex) -> FreeComplex:
    """Cancel unit entries of a chain complex with homogeneous differentials.

    Non-homogeneous input is returned unchanged with ``minimal=False``. The
    result carries ``comparison = (f, g)``: matrices O^{r_0} -> O^{r_0'} and
    back that induce inverse isomorphisms of the cokernels of d_1.
    """
    if C.cochain:
        raise ValueError("minimize expects a chain complex")
    ring = C.ring
    if not C.is_homogeneous():
        out = FreeComplex(ring, C.maps, ranks=C.ranks, tag=C.tag,
                          complete=C.complete, minimal=False)
        out.comparison = (Matrix.identity(ring, C.rank(0)), Matrix.identity(ring, C.rank(0)))
        return out
    maps = list(C.maps)
    ranks = list(C.ranks)
    f = Matrix.identity(ring, ranks[0])
    g = Matrix.identity(ring, ranks[0])
    changed = True
    while changed:
        changed = False
        for k in range(1, len(maps) + 1):
            hit = _unit_entry(maps[k - 1])
            if hit is None:
                continue
            i, j, u = hit
            d = maps[k - 1]
            inv = ring.field.div(1, u)
            colj = d.column(j)
            rowi = d.row(i)
            rows = []
            for a in range(d.nrows):
                if a == i:
                    continue
                rows.append([d[a, b] - colj[a] * rowi[b] * inv for b in range(d.ncols) if b != j])
            maps[k - 1] = Matrix(ring, rows, d.nrows - 1, d.ncols - 1)
            if k < len(maps):
                maps[k] = _drop(maps[k], row=j)
            if k >= 2:
                maps[k - 2] = _drop(maps[k - 2], col=i)
            else:
                # e_i = -u^{-1} sum_{a != i} d[a, j] e_a in the cokernel
                proj = []
                for a in range(d.nrows):
                    if a == i:
                        continue
                    proj.append([ring.one if b == a else (-colj[a] * inv if b == i else ring.zero)
                                 for b in range(d.nrows)])
                step = Matrix(ring, proj, d.nrows - 1, d.nrows)
                f = step @ f
                g = g @ _drop(Matrix.identity(ring, d.nrows), col=i)
            ranks[k] -= 1
            ranks[k - 1] -= 1
            changed = True
            break
    while len(maps) > 0 and ranks[-1] == 0:
        maps.pop()
        ranks.pop()
    out = FreeComplex(ring, maps, ranks=ranks, tag=C.tag, complete=C.complete, minimal=True)
    out.comparison = (f, g)
    return out


def check_h0_equivalence(C: FreeComplex, D: FreeComplex, f: Matrix, g: Matrix) -> bool:
    """f, g induce mutually inverse maps coker C.d(1) <-> coker D.d(1)."""
    ring = C.ring
    ImC, ImD = C.image(1), D.image(1)
    if not all(ImD.contains(c) for c in (f @ C.d(1)).columns()):
        return False
    if not all(ImC.contains(c) for c in (g @ D.d(1)).columns()):
        return False
    gf = g @ f - Matrix.identity(ring, C.rank(0))
    fg = f @ g - Matrix.identity(ring, D.rank(0))
    return (all(ImC.contains(c) for c in gf.columns())
            and all(ImD.contains(c) for c in fg.columns()))


def _kernel_generators(ring, out: Matrix | None, ambient: int) -> Matrix:
    if out is None or out.nrows == 0:
        return Matrix.identity(ring, ambient)
    if ambient == 0:
        return Matrix.zeros(ring, 0, 0)
    S = syzygies(Submodule(ring, out))
    if S.ngens == 0:
        return Matrix.zeros(ring, ambient, 0)
    return S.gens


def homology_presentation(C: FreeComplex, k: int) -> SubquotientPresentation:
    """Presentation of the homology of C at spot k."""
    if not 0 <= k <= C.length:
        raise IndexError(f"spot {k} outside 0..{C.length}")
    ring = C.ring
    r = C.rank(k)
    if C.cochain:
        out = C.maps[k] if k < C.length else None
        inc = C.maps[k - 1] if k >= 1 else None
    else:
        out = C.maps[k - 1] if k >= 1 else None
        inc = C.maps[k] if k < C.length else None
    gens = _kernel_generators(ring, out, r)
    m = gens.ncols
    if m == 0:
        return SubquotientPresentation(ring, r, gens, Matrix.zeros(ring, 0, 0), k, C)
    G = Submodule(ring, gens)
    rel_cols = []
    if inc is not None:
        for col in inc.columns():
            if any(col):
                rel_cols.append(G.lift(col))
    S = syzygies(G)
    rel_cols.extend(S.columns())
    rel_cols = _prune(ring, rel_cols, m, MonomialOrder(ring.order.tag, "top")) if rel_cols else []
    rel = Matrix.from_columns(ring, rel_cols, m) if rel_cols else Matrix.zeros(ring, m, 0)
    pres = SubquotientPresentation(ring, r, gens, rel, k, C)
    if rel_cols and pres.relation_module().is_whole():
        return SubquotientPresentation(ring, r, Matrix.zeros(ring, r, 0), Matrix.zeros(ring, 0, 0), k, C)
    return pres


def _lift_columns(module: Submodule, target: Matrix, degree: int, exc=ChainMapError):
    cols = []
    for c, col in enumerate(target.columns()):
        if not any(col):
            cols.append(tuple(module.ring.zero for _ in range(module.ngens)))
            continue
        try:
            cols.append(module.lift(col))
        except NotInModule as e:
            if exc is HomotopyFailure:
                raise HomotopyFailure(f"no homotopy in degree {degree}", degree, col) from e
            raise ChainMapError(f"column {c} cannot be lifted in degree {degree}", col) from e
    return Matrix.from_columns(module.ring, cols, module.ngens) if cols else \
        Matrix.zeros(module.ring, module.ngens, 0)


def _random_matrix(ring, nrows, ncols, rng):
    vars_ = [ring.one] + list(ring.gens)
    return Matrix(ring, [[rng.choice((0, 0, 1, -1)) * rng.choice(vars_) for _ in range(ncols)]
                         for _ in range(nrows)], nrows, ncols)


def lift_chain_map(alpha: Matrix, K: FreeComplex, E: FreeComplex,
                   perturb: int | None = None) -> ChainMap:
    """Extend alpha : K_0 -> E_0 (descending to cokernels) to a chain map K -> E.

    With ``perturb`` set, each a_k is shifted by d_{k+1} h_k for a seeded
    random h_k, which gives a different (homotopic) lift.
    """
    ring = K.ring
    if alpha.shape != (E.rank(0), K.rank(0)):
        raise ShapeError(f"alpha has shape {alpha.shape}, expected {(E.rank(0), K.rank(0))}")
    rng = random.Random(perturb) if perturb is not None else None
    maps = [alpha]
    for k in range(1, K.length + 1):
        target = maps[k - 1] @ K.d(k)
        if E.rank(k) == 0:
            if not target.is_zero():
                col = next(c for c in target.columns() if any(c))
                raise ChainMapError(f"map does not descend in degree {k}", col)
            a = Matrix.zeros(ring, 0, K.rank(k))
        else:
            a = _lift_columns(E.image(k), target, k)
        if rng is not None and E.rank(k + 1):
            a = a + E.d(k + 1) @ _random_matrix(ring, E.rank(k + 1), K.rank(k), rng)
        maps.append(a)
    return ChainMap(K, E, maps)


def homotopy_between(a: ChainMap, b: ChainMap) -> list:
    """Matrices s_i : K_i -> E_{i+1} with a_i - b_i = d_{i+1} s_i + s_{i-1} d_i."""
    K, E = a.source, a.target
    ring = K.ring
    n = max(len(a.maps), len(b.maps))
    s = []
    prev = None
    for i in range(n):
        diff = a[i] - b[i]
        if prev is not None:
            diff = diff - prev @ K.d(i)
        if E.rank(i + 1) == 0:
            if not diff.is_zero():
                col = next(c for c in diff.columns() if any(c))
                raise HomotopyFailure(f"no homotopy in degree {i}", i, col)
            si = Matrix.zeros(ring, 0, K.rank(i))
        else:
            si = _lift_columns(E.image(i + 1), diff, i, exc=HomotopyFailure)
        s.append(si)
        prev = si
    for i in range(n):
        rhs = E.d(i + 1) @ s[i]
        if i > 0:
            rhs = rhs + s[i - 1] @ K.d(i)
        if a[i] - b[i] != rhs:
            raise HomotopyFailure("homotopy identity failed re-verification", i)
    return s

"""Exact coefficient fields, monomial orders, sparse polynomials and matrices.

Everything here is an immutable value. A :class:`Ring` plays the role of a
session: polynomials remember the ring they were built in and refuse to mix
with polynomials of a different ring.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Field", "QQ", "GF", "MonomialOrder", "mono_cmp", "Ring", "Polynomial",
    "Matrix", "det", "ParseError", "SessionMismatchError", "ShapeError",
]


class SessionMismatchError(ValueError):
    """Operands were built in different rings."""


class ShapeError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


# --------------------------------------------------------------------------
# fields

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


class Field:
    """Either the rationals (characteristic 0) or a prime field F_q.

    Elements are plain Python numbers: ``int``/``Fraction`` in lowest terms
    for QQ, ``int`` in ``range(q)`` for F_q.
    """

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic and not _is_prime(characteristic):
            raise ValueError(f"{characteristic} is not prime")
        self.characteristic = characteristic

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if p:
                return value.numerator * pow(value.denominator, -1, p) % p
            return value.numerator if value.denominator == 1 else value
        if isinstance(value, int):
            return value % p if p else value
        raise TypeError(f"cannot convert {value!r} to a field element")

    def div(self, a, b):
        p = self.characteristic
        if p:
            return a * pow(b, -1, p) % p
        r = Fraction(a) / b
        return r.numerator if r.denominator == 1 else r

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})" if self.characteristic else "QQ"


QQ = Field(0)


def GF(q: int = 32003) -> Field:
    return Field(q)


def _div(a, b, p):
    if p:
        return a * pow(b, -1, p) % p
    r = Fraction(a) / b
    return r.numerator if r.denominator == 1 else r


# --------------------------------------------------------------------------
# monomial orders

def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e):
    return e


class MonomialOrder:
    """A monomial order, extended to free-module terms ``(position, exponent)``.

    ``tag`` is ``"lex"`` or ``"degrevlex"``. ``position`` is ``"top"``
    (term over position) or ``"pot"`` (position over term); lower positions
    rank higher in both. A Schreyer order is built with :meth:`schreyer`.
    Keys returned by :meth:`term_key` grow with the order.
    """

    def __init__(self, tag: str = "degrevlex", position: str = "top"):
        if tag not in ("lex", "degrevlex"):
            raise ValueError(f"unknown monomial order {tag!r}")
        if position not in ("top", "pot", "schreyer"):
            raise ValueError(f"unknown position strategy {position!r}")
        self.tag = tag
        self.position = position
        self.base = None
        self.leads = None
        self._mkey = _lex_key if tag == "lex" else _degrevlex_key
        self._cache = {}

    @classmethod
    def schreyer(cls, base: "MonomialOrder", leads: Sequence) -> "MonomialOrder":
        """Order on O^s induced by lead terms ``leads[i] = (pos, exp)`` under ``base``.

        ``m*e_i > n*e_j`` iff ``m*leads[i] > n*leads[j]`` under ``base``, ties
        broken by the smaller index.
        """
        order = cls(base.tag, "schreyer")
        order.base = base
        order.leads = tuple(leads)
        return order

    def monomial_key(self, exp):
        return self._mkey(exp)

    def term_key(self, pos, exp):
        t = (pos, exp)
        try:
            return self._cache[t]
        except KeyError:
            pass
        if self.position == "top":
            k = (self._mkey(exp), -pos)
        elif self.position == "pot":
            k = (-pos, self._mkey(exp))
        else:
            lead = self.leads[pos]
            if lead is None:
                k = (self.base.term_key(0, exp), -pos)
            else:
                k = (self.base.term_key(lead[0], tuple(map(operator.add, lead[1], exp))), -pos)
        self._cache[t] = k
        return k

    def key(self, term):
        return self.term_key(term[0], term[1])

    def term_degree(self, pos, exp):
        """Degree of a term counting the shift of its basis vector."""
        if self.position != "schreyer":
            return sum(exp)
        lead = self.leads[pos]
        if lead is None:
            return sum(exp)
        return self.base.term_degree(lead[0], tuple(map(operator.add, lead[1], exp)))

    def _ident(self):
        return (self.tag, self.position, self.leads,
                self.base._ident() if self.base is not None else None)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.position == "schreyer":
            return f"MonomialOrder(schreyer over {self.base!r}, {len(self.leads)} leads)"
        return f"MonomialOrder({self.tag!r}, {self.position!r})"


def mono_cmp(a: Sequence[int], b: Sequence[int], order: MonomialOrder | str = "degrevlex") -> int:
    """Compare two exponent vectors: -1 (a < b), 0 (equal) or 1 (a > b)."""
    if len(a) != len(b):
        raise ValueError("exponent vectors have different lengths")
    if isinstance(order, str):
        order = MonomialOrder(order)
    ka, kb = order.monomial_key(tuple(a)), order.monomial_key(tuple(b))
    return (ka > kb) - (ka < kb)


# --------------------------------------------------------------------------
# rings and polynomials

class Ring:
    """Polynomial ring ``field[variables]`` with a fixed monomial order."""

    def __init__(self, variables: Iterable[str], field: Field = QQ, order: str = "degrevlex"):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        for v in self.variables:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError(f"bad variable name {v!r}")
        self.nvars = len(self.variables)
        self.field = field
        self.order = MonomialOrder(order)
        self._zero_exp = (0,) * self.nvars

    # identity -------------------------------------------------------------
    def _ident(self):
        return (self.variables, self.field.characteristic, self.order.tag)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.variables)}]"

    # constructors ---------------------------------------------------------
    @property
    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial._make(self, {self._zero_exp: 1})

    @property
    def gens(self) -> tuple:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Polynomial._make(self, {tuple(e): 1}))
        return tuple(out)

    def var(self, name: str) -> "Polynomial":
        return self.gens[self.variables.index(name)]

    def monomial(self, exp, coef=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = self.field(coef)
        return Polynomial._make(self, {exp: c} if c else {})

    def from_dict(self, terms: dict) -> "Polynomial":
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != self.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e}")
            c = self.field(c)
            if c:
                out[e] = c
        return Polynomial._make(self, out)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise SessionMismatchError(f"polynomial from {value.ring!r} used in {self!r}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.monomial(self._zero_exp, value)

    def parse(self, text: str) -> "Polynomial":
        parser = ExprParser(tokenize(text), self)
        poly = parser.expr()
        parser.expect_end()
        return poly


class Polynomial:
    """Sparse polynomial: a dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: dict | None = None):
        p = ring.from_dict(terms or {})
        self.ring = ring
        self._terms = p._terms
        self._hash = None

    @classmethod
    def _make(cls, ring, terms):
        if not ring.field.characteristic:
            for e, c in terms.items():
                if type(c) is Fraction and c.denominator == 1:
                    terms[e] = c.numerator
        self = object.__new__(cls)
        self.ring = ring
        self._terms = terms
        self._hash = None
        return self

    # views ----------------------------------------------------------------
    @property
    def terms(self) -> list:
        """(exponent, coefficient) pairs, strictly descending in the ring order."""
        key = self.ring.order.monomial_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.ring._zero_exp in self._terms)

    def is_monomial(self) -> bool:
        """True for a single term (any coefficient)."""
        return len(self._terms) == 1

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def constant_value(self):
        return self._terms.get(self.ring._zero_exp, 0)

    @property
    def lm(self):
        key = self.ring.order.monomial_key
        return max(self._terms, key=key)

    @property
    def lc(self):
        return self._terms[self.lm]

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise SessionMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.characteristic
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.characteristic
        if p:
            return Polynomial._make(self.ring, {e: (-c) % p for e, c in self._terms.items()})
        return Polynomial._make(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.characteristic
        out = {}
        add = operator.add
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                e = tuple(map(add, a, b))
                v = out.get(e, 0) + ca * cb
                if p:
                    v %= p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._make(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        """Scalar multiple by a field element."""
        return self * self.ring.field(c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == self.ring(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _format_coef(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(f: Polynomial) -> str:
    """Render in the input grammar, e.g. ``3*x^2*y - 1/2*z``."""
    if not f._terms:
        return "0"
    names = f.ring.variables
    pieces = []
    for e, c in f.terms:
        neg = c < 0
        a = -c if neg else c
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        if not mono:
            body = _format_coef(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coef(a)}*{mono}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str):
    """Split into (kind, value, line, column) tokens; kinds are int, name, op."""
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        # keep line/column bookkeeping across skipped whitespace
        for i in range(pos, m.start(m.lastindex)):
            if text[i] == "\n":
                line += 1
                line_start = i + 1
        col = m.start(m.lastindex) - line_start + 1
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), line, col))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), line, col))
        else:
            tokens.append(("op", m.group(3), line, col))
        pos = m.end()
    return tokens


class ExprParser:
    """Recursive-descent parser for polynomial expressions over a ring.

    Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := atom ['^' int]; atom := int ['/' int] | name | '(' expr ')'.
    Juxtaposition is rejected.
    """

    def __init__(self, tokens, ring: Ring, start: int = 0):
        self.tokens = tokens
        self.ring = ring
        self.i = start

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, message, tok=None):
        tok = tok or self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else ("", "", 1, 0)
            raise ParseError(message + " at end of input", last[2], last[3] + 1)
        raise ParseError(message, tok[2], tok[3])

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            self.error(f"expected {want!r}")
        self.i += 1
        return tok

    def at(self, kind, value=None):
        tok = self.peek()
        return tok is not None and tok[0] == kind and (value is None or tok[1] == value)

    def expect_end(self):
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()[1]!r}")

    def expr(self) -> Polynomial:
        neg = False
        if self.at("op", "-"):
            self.take()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.at("op", "+") or self.at("op", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            if self.at("op", "*"):
                self.take()
                acc = acc * self.factor()
            elif self.at("name") or self.at("int") or self.at("op", "("):
                self.error("implicit multiplication is not allowed; use '*'")
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.at("op", "^"):
            self.take()
            k = self.take("int")[1]
            base = base ** k
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok is None:
            self.error("expected an expression")
        if tok[0] == "int":
            self.take()
            num = tok[1]
            if self.at("op", "/"):
                self.take()
                den_tok = self.take("int")
                if den_tok[1] == 0:
                    self.error("division by zero", den_tok)
                return self.ring(Fraction(num, den_tok[1]))
            return self.ring(num)
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.ring.variables:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return self.ring.var(tok[1])
        if tok[1] == "(":
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        self.error(f"unexpected {tok[1]!r}")


# --------------------------------------------------------------------------
# matrices

class Matrix:
    """Immutable rows x cols grid of polynomials.

    As a map it sends O^cols to O^rows; as a submodule its columns are the
    generators.
    """

    __slots__ = ("ring", "nrows", "ncols", "_rows")

    def __init__(self, ring: Ring, rows, nrows: int | None = None, ncols: int | None = None):
        rows = [[ring(x) for x in row] for row in rows]
        if nrows is None:
            nrows = len(rows)
        if len(rows) != nrows:
            raise ShapeError("row count mismatch")
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("matrix is not rectangular")
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self._rows = tuple(tuple(r) for r in rows)

    @classmethod
    def _make(cls, ring, rows, nrows, ncols):
        self = object.__new__(cls)
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self._rows = rows
        return self

    @classmethod
    def from_columns(cls, ring: Ring, columns, nrows: int | None = None) -> "Matrix":
        columns = [tuple(ring(x) for x in c) for c in columns]
        if nrows is None:
            if not columns:
                raise ShapeError("row count needed for a matrix without columns")
            nrows = len(columns[0])
        if any(len(c) != nrows for c in columns):
            raise ShapeError("columns have different lengths")
        rows = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls._make(ring, rows, nrows, len(columns))

    @classmethod
    def zeros(cls, ring: Ring, nrows: int, ncols: int) -> "Matrix":
        z = ring.zero
        return cls._make(ring, tuple((z,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls._make(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n, n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(r[j] for r in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix._make(self.ring, tuple(self.column(j) for j in range(self.ncols)),
                            self.ncols, self.nrows)

    def is_zero(self) -> bool:
        return all(not x for r in self._rows for x in r)

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.ring is not self.ring and other.ring != self.ring:
            raise SessionMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        z = self.ring.zero
        rows = []
        for r in self._rows:
            out = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        return Matrix._make(self.ring, tuple(rows), self.nrows, other.ncols)

    def apply(self, vector) -> tuple:
        """Matrix times a column vector given as a sequence of polynomials."""
        vector = [self.ring(x) for x in vector]
        if len(vector) != self.ncols:
            raise ShapeError("vector length does not match column count")
        z = self.ring.zero
        out = []
        for r in self._rows:
            acc = z
            for a, b in zip(r, vector):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError("shape mismatch")
        return Matrix._make(self.ring, tuple(tuple(a + b for a, b in zip(r, s))
                                             for r, s in zip(self._rows, other._rows)),
                            self.nrows, self.ncols)

    def __neg__(self):
        return Matrix._make(self.ring, tuple(tuple(-a for a in r) for r in self._rows),
                            self.nrows, self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = self.ring(scalar)
        return Matrix._make(self.ring, tuple(tuple(a * s for a in r) for r in self._rows),
                            self.nrows, self.ncols)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.ring == other.ring and self._rows == other._rows)

    def __hash__(self):
        return hash((self.shape, self._rows))

    def submatrix(self, rows, cols) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix._make(self.ring, tuple(tuple(self._rows[i][j] for j in cols) for i in rows),
                            len(rows), len(cols))

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.nrows != other.nrows:
            raise ShapeError("row counts differ")
        return Matrix._make(self.ring, tuple(a + b for a, b in zip(self._rows, other._rows)),
                            self.nrows, self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.ncols:
            raise ShapeError("column counts differ")
        return Matrix._make(self.ring, self._rows + other._rows,
                            self.nrows + other.nrows, self.ncols)

    def block_diag(self, other: "Matrix") -> "Matrix":
        top = self.hstack(Matrix.zeros(self.ring, self.nrows, other.ncols))
        bottom = Matrix.zeros(self.ring, other.nrows, self.ncols).hstack(other)
        return top.vstack(bottom)

    def det(self) -> Polynomial:
        return det(self)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


def det(M: Matrix) -> Polynomial:
    """Exact determinant by expansion over column subsets (O(n 2^n) products)."""
    if M.nrows != M.ncols:
        raise ShapeError(f"determinant of a non-square {M.shape} matrix")
    n = M.nrows
    ring = M.ring
    if n == 0:
        return ring.one
    # layer[mask] = signed sum over assignments of the first popcount(mask) rows
    layer = {0: ring.one}
    for i in range(n):
        nxt = {}
        row = M.row(i)
        for mask, val in layer.items():
            for j in range(n):
                if mask >> j & 1 or not row[j]:
                    continue
                above = bin(mask >> (j + 1)).count("1")
                term = val * row[j]
                if above & 1:
                    term = -term
                nm = mask | (1 << j)
                nxt[nm] = nxt[nm] + term if nm in nxt else term
        layer = {m: v for m, v in nxt.items() if v}
        if not layer:
            return ring.zero
    return layer.get((1 << n) - 1, ring.zero)

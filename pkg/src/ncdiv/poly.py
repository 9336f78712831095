"""Sparse multivariate polynomials over Q with global and local monomial orders.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Two polynomials over the same ring
are equal iff their term maps are equal, so the representation is canonical.
Term order only matters when terms are listed or a leading term is requested;
that is always done explicitly through a :class:`MonomialOrder`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exp = tuple  # tuple[int, ...]


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingContext:
    """Polynomial ring Q[names]; the point of analysis is the origin."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", nm):
                raise ValueError(f"invalid variable name {nm!r}")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, var) -> int:
        if isinstance(var, str):
            try:
                return self.names.index(var)
            except ValueError:
                raise KeyError(f"unknown variable {var!r}") from None
        if not 0 <= var < self.n:
            raise IndexError(f"variable index {var} out of range for n={self.n}")
        return var

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.n)]

    def var(self, var) -> Polynomial:
        i = self.index(var)
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def const(self, c) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def extend(self, *names: str, front: bool = False) -> RingContext:
        return RingContext(tuple(names) + self.names if front else self.names + tuple(names))

    def parse(self, text: str) -> Polynomial:
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return "Q[" + ", ".join(self.names) + "]"


def ring(names) -> RingContext:
    """Build a ring from ``"x, y, z"``, ``"x y z"`` or a sequence of names."""
    if isinstance(names, str):
        names = [s for s in re.split(r"[\s,]+", names) if s]
    return RingContext(tuple(names))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

def _revlex_tail(e: Exp) -> tuple:
    return tuple(-a for a in reversed(e))


class MonomialOrder:
    """Monomial order identified by name; ``key(e)`` grows with the monomial.

    kinds: ``lex``, ``degrevlex`` (dp), ``ds`` (local negative degree reverse
    lex) and ``elim`` (block order eliminating the first ``k`` variables).
    """

    _KINDS = ("lex", "degrevlex", "ds", "elim")

    def __init__(self, kind: str = "degrevlex", k: int = 0):
        if kind == "dp":
            kind = "degrevlex"
        if kind not in self._KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elim" and k < 1:
            raise ValueError("elimination order needs k >= 1")
        self.kind = kind
        self.k = k if kind == "elim" else 0
        self._cache: dict = {}

    @property
    def is_local(self) -> bool:
        return self.kind == "ds"

    @property
    def is_global(self) -> bool:
        return not self.is_local

    def key(self, e: Exp):
        try:
            return self._cache[e]
        except KeyError:
            pass
        if self.kind == "lex":
            key = e
        elif self.kind == "degrevlex":
            key = (sum(e), _revlex_tail(e))
        elif self.kind == "ds":
            key = (-sum(e), _revlex_tail(e))
        else:
            key = (sum(e[: self.k]), sum(e), _revlex_tail(e))
        if len(self._cache) < 200_000:
            self._cache[e] = key
        return key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.k) == (other.kind, other.k)

    def __hash__(self):
        return hash((self.kind, self.k))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}" + (f", k={self.k})" if self.k else ")")


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")
DS = MonomialOrder("ds")


def order(spec) -> MonomialOrder:
    if isinstance(spec, MonomialOrder):
        return spec
    m = re.fullmatch(r"elim\((\d+)\)", spec)
    if m:
        return MonomialOrder("elim", int(m.group(1)))
    return MonomialOrder(spec)


class ModuleOrder:
    """Term order on ``(position, exponent)`` pairs layered on a monomial order.

    ``top`` compares monomials first (term over position), ``pot`` compares
    positions first; lower positions are larger in both.
    """

    def __init__(self, base: MonomialOrder = DEGREVLEX, mode: str = "top"):
        if mode not in ("top", "pot"):
            raise ValueError(f"unknown module order mode {mode!r}")
        self.base = base
        self.mode = mode

    @property
    def is_local(self) -> bool:
        return self.base.is_local

    def key(self, t):
        pos, e = t[0], t[1:]
        if self.mode == "top":
            return (self.base.key(e), -pos)
        return (-pos, self.base.key(e))

    def __repr__(self):
        return f"ModuleOrder({self.base!r}, {self.mode!r})"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exp, Fraction] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != ring.n:
                        raise ValueError(f"exponent {e} has wrong length for {ring}")
                    clean[tuple(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingContext, terms: dict) -> Polynomial:
        # terms must already be clean
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.n, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order_at_origin(self) -> int:
        """Lowest total degree of a term (the multiplicity at 0)."""
        return min((sum(e) for e in self.terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self) -> set:
        """Indices of variables that occur."""
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def sorted_terms(self, ord: MonomialOrder = DEGREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda t: ord.key(t[0]), reverse=True)

    def leading_term(self, ord: MonomialOrder = DEGREVLEX):
        """(coefficient, exponent) of the maximal term under ``ord``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=ord.key)
        return self.terms[e], e

    def leading_monomial(self, ord: MonomialOrder = DEGREVLEX) -> Exp:
        return self.leading_term(ord)[1]

    def monic(self, ord: MonomialOrder = DEGREVLEX) -> Polynomial:
        if not self.terms:
            return self
        c, _ = self.leading_term(ord)
        return self * (1 / c)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: Polynomial):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational constant only; see :func:`divide`."""
        if isinstance(other, Polynomial) and other.is_constant():
            other = other.constant_term()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, c: Fraction, e: Exp) -> Polynomial:
        return Polynomial._raw(self.ring, {_add_exp(e, e2): c * c2 for e2, c2 in self.terms.items()})

    # -- calculus / evaluation -------------------------------------------
    def partial(self, var) -> Polynomial:
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            a = e[i]
            if a:
                e2 = e[:i] + (a - 1,) + e[i + 1:]
                out[e2] = c * a
        return Polynomial._raw(self.ring, out)

    def gradient(self) -> list[Polynomial]:
        return [self.partial(i) for i in range(self.ring.n)]

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        if len(point) != self.ring.n:
            raise ValueError("point has wrong dimension")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, a in zip(pt, e):
                if a:
                    t *= v ** a
            total += t
        return total

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Compose with the ring map sending variable i to ``images[i]``."""
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        target = images[0].ring
        powers: dict = {}

        def pw(i, a):
            if (i, a) not in powers:
                powers[(i, a)] = images[i] ** a
            return powers[(i, a)]

        out = target.zero()
        for e, c in self.terms.items():
            t = target.const(c)
            for i, a in enumerate(e):
                if a:
                    t = t * pw(i, a)
            out = out + t
        return out

    def change_ring(self, target: RingContext, positions: Sequence[int]) -> Polynomial:
        """Re-embed: variable i of this ring becomes variable positions[i] of target."""
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * target.n
            for i, a in enumerate(e):
                e2[positions[i]] += a
            out[tuple(e2)] = c
        return Polynomial(target, out)

    # -- comparison / printing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.ring.n: Fraction(other)} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(e: Exp, names: Sequence[str]) -> str:
    parts = []
    for nm, a in zip(names, e):
        if a == 1:
            parts.append(nm)
        elif a:
            parts.append(f"{nm}^{a}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text in descending degrevlex order, e.g. ``x^2*y - 1/2*z + 3``."""
    if not p.terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.sorted_terms(DEGREVLEX)):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(e, p.ring.names)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def divide(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Multivariate division of p by the single divisor q (degrevlex)."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(q)
    cq, eq = q.leading_term(DEGREVLEX)
    quot: dict = {}
    rem: dict = {}
    cur = dict(p.terms)
    key = DEGREVLEX.key
    while cur:
        e = max(cur, key=key)
        c = cur[e]
        if all(a >= b for a, b in zip(e, eq)):
            m = tuple(a - b for a, b in zip(e, eq))
            f = c / cq
            quot[m] = quot.get(m, 0) + f
            for e2, c2 in q.terms.items():
                t = _add_exp(m, e2)
                s = cur.get(t, 0) - f * c2
                if s:
                    cur[t] = s
                else:
                    cur.pop(t, None)
        else:
            rem[e] = c
            del cur[e]
    return Polynomial(p.ring, quot), Polynomial._raw(p.ring, rem)


def exact_quotient(p: Polynomial, q: Polynomial) -> Polynomial | None:
    """p / q if q divides p exactly, else ``None``."""
    quot, rem = divide(p, q)
    return quot if rem.is_zero() else None


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square polynomial matrix (Laplace expansion with memo)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    R = matrix[0][0].ring
    memo: dict = {}

    def minor(row: int, cols: tuple) -> Polynomial:
        if row == n:
            return R.one()
        if cols in memo:
            return memo[cols]
        total = R.zero()
        for j, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:j] + cols[j + 1:])
            term = entry * sub
            total = total - term if j % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def adjugate(matrix: Sequence[Sequence[Polynomial]]) -> list[list[Polynomial]]:
    """Classical adjoint: adj(M) @ M = M @ adj(M) = det(M) * Id."""
    n = len(matrix)
    R = matrix[0][0].ring
    if n == 1:
        return [[R.one()]]
    adj = [[R.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[matrix[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = determinant(sub)
            adj[j][i] = -cof if (i + j) % 2 else cof
    return adj


def minors(matrix: Sequence[Sequence[Polynomial]], k: int) -> list[Polynomial]:
    """All nonzero k x k minors of a (rows x cols) polynomial matrix."""
    from itertools import combinations

    rows, cols = len(matrix), len(matrix[0])
    out = []
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            d = determinant([[matrix[r][c] for c in cs] for r in rs])
            if not d.is_zero():
                out.append(d)
    return out


def jacobian_matrix(polys: Iterable[Polynomial]) -> list[list[Polynomial]]:
    return [p.gradient() for p in polys]

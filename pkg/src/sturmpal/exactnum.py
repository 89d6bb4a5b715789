"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).

Every number is stored as ``(p + q*sqrt(d)) / r`` in canonical form, so
equality and hashing are plain tuple comparisons.  Order and floor are
decided with integer square roots only; no floating point is involved.

Text grammar (whitespace-insensitive)::

    (P+Q*sqrt(D))/R     (P-Q*sqrt(D))/R     P/R     P

The ``/R`` suffix is optional and ``Q*`` may be omitted when Q is 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceededError, FieldError, NumberSyntaxError

#: Radicands above this bound are rejected instead of factored.
MAX_RADICAND = 10**18


def _icbrt(n: int) -> int:
    x = round(n ** (1 / 3))
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def squarefree_split(d: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``d == k*k*m`` and ``m`` squarefree."""
    if d < 0:
        raise FieldError("negative radicand: complex values are unsupported")
    if d > MAX_RADICAND:
        raise FieldError(f"radicand {d} exceeds the factorization budget {MAX_RADICAND}")
    if d == 0:
        return 0, 1
    k, m = 1, 1
    rest = d
    f = 2
    # past the cube root, what is left is 1, a prime, a prime square or a product of two primes
    limit = _icbrt(rest)
    while f <= limit:
        e = 0
        while rest % f == 0:
            rest //= f
            e += 1
        if e:
            limit = _icbrt(rest)
        k *= f ** (e // 2)
        if e % 2:
            m *= f
        f += 1 if f == 2 else 2
    root = math.isqrt(rest)
    if root * root == rest:
        return k * root, m
    return k, m * rest


def _floor_q_sqrt(q: int, d: int) -> int:
    # floor(q*sqrt(d)) for squarefree d > 1 (so q*sqrt(d) is never an integer unless q == 0)
    s = math.isqrt(q * q * d)
    if q >= 0:
        return s
    return -s - 1


def _sign(p: int, q: int, d: int) -> int:
    """Sign of p + q*sqrt(d), d squarefree."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p >= 0 and q >= 0:
        return 1
    if p <= 0 and q <= 0:
        return -1
    # opposite signs: the larger square wins
    diff = p * p - q * q * d
    if p > 0:
        return (diff > 0) - (diff < 0)
    return (diff < 0) - (diff > 0)


class QuadIrr:
    """The number ``(p + q*sqrt(d)) / r``, always kept canonical.

    Canonical means ``r > 0``, ``gcd(|p|, |q|, r) == 1``, ``d`` squarefree,
    and ``d == 1`` whenever ``q == 0``.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 1, r: int = 1):
        if r == 0:
            raise FieldError("invalid denominator: r = 0")
        k, m = squarefree_split(d)
        q *= k
        if m == 1:
            p, q = p + q, 0
        self._set(p, q, m, r)

    @classmethod
    def _reduced(cls, p: int, q: int, d: int, r: int) -> "QuadIrr":
        # trusted path: d is already squarefree (or q == 0)
        if r == 0:
            raise FieldError("invalid denominator: r = 0")
        self = object.__new__(cls)
        self._set(p, q, d, r)
        return self

    def _set(self, p, q, d, r):
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0:
            d = 1
        g = math.gcd(p, q, r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("QuadIrr is immutable")

    @classmethod
    def coerce(cls, x) -> "QuadIrr":
        if isinstance(x, QuadIrr):
            return x
        if isinstance(x, int):
            return cls._reduced(x, 0, 1, 1)
        if isinstance(x, Fraction):
            return cls._reduced(x.numerator, 0, 1, x.denominator)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadIrr")

    @property
    def fields(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.d, self.r)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def conjugate(self) -> "QuadIrr":
        return QuadIrr._reduced(self.p, -self.q, self.d, self.r)

    def sign(self) -> int:
        return _sign(self.p, self.q, self.d)

    # -- arithmetic --------------------------------------------------

    def _field_with(self, other: "QuadIrr") -> int:
        if self.q == 0:
            return other.d
        if other.q == 0 or other.d == self.d:
            return self.d
        raise FieldError(f"mixed quadratic fields sqrt({self.d}) and sqrt({other.d})")

    def __add__(self, other):
        try:
            y = QuadIrr.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field_with(y)
        return QuadIrr._reduced(
            self.p * y.r + y.p * self.r, self.q * y.r + y.q * self.r, d, self.r * y.r
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadIrr._reduced(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        try:
            y = QuadIrr.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            y = QuadIrr.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field_with(y)
        return QuadIrr._reduced(
            self.p * y.p + self.q * y.q * d,
            self.p * y.q + self.q * y.p,
            d,
            self.r * y.r,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadIrr":
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in QuadIrr")
        return QuadIrr._reduced(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other):
        try:
            y = QuadIrr.coerce(other)
        except TypeError:
            return NotImplemented
        self._field_with(y)
        return self * y.inverse()

    def __rtruediv__(self, other):
        return QuadIrr.coerce(other) * self.inverse()

    # -- order -------------------------------------------------------

    def compare(self, other) -> int:
        """-1, 0 or 1 as ``self`` is less than, equal to, or greater than ``other``."""
        y = QuadIrr.coerce(other)
        d = self._field_with(y)
        return _sign(self.p * y.r - y.p * self.r, self.q * y.r - y.q * self.r, d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadIrr.coerce(other)
        if not isinstance(other, QuadIrr):
            return NotImplemented
        return self.fields == other.fields

    def __hash__(self):
        return hash(self.fields)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # -- integer part ------------------------------------------------

    def __floor__(self) -> int:
        if self.q == 0:
            return self.p // self.r
        return (self.p + _floor_q_sqrt(self.q, self.d)) // self.r

    def floor_frac(self) -> tuple[int, "QuadIrr"]:
        f = math.floor(self)
        return f, QuadIrr._reduced(self.p - f * self.r, self.q, self.d, self.r)

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def __repr__(self):
        return f"QuadIrr({self.p}, {self.q}, {self.d}, {self.r})"

    def __str__(self):
        return format_number(self)


def qi_make(p: int, q: int, d: int, r: int) -> QuadIrr:
    return QuadIrr(p, q, d, r)


def qi_arith(x: QuadIrr, y: QuadIrr, op: str) -> QuadIrr:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qi_compare(x: QuadIrr, y: QuadIrr) -> str:
    return ("less", "equal", "greater")[x.compare(y) + 1]


def qi_floor_frac(x: QuadIrr) -> tuple[int, QuadIrr]:
    return x.floor_frac()


def floor_linear(p: int, q: int, d: int, r: int) -> int:
    """floor((p + q*sqrt(d)) / r) for r > 0 and squarefree d; no object allocation."""
    if d == 1:
        return (p + q) // r
    if q == 0:
        return p // r
    return (p + _floor_q_sqrt(q, d)) // r


def quadratic_roots(a: int, b: int, c: int, radicand: int | None = None) -> list[QuadIrr]:
    """Real roots of ``a*x**2 + b*x + c``, ascending, repeated roots listed once.

    When the roots are known to lie in Q(sqrt(radicand)), the discriminant
    is split using that hint instead of being factored.
    """
    if a == 0:
        if b == 0:
            return []
        return [QuadIrr(-c, 0, 1, b)]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    if disc == 0:
        return [QuadIrr(-b, 0, 1, 2 * a)]
    if radicand and radicand > 1 and disc % radicand == 0:
        k = math.isqrt(disc // radicand)
        if k * k * radicand == disc:
            roots = [QuadIrr._reduced(-b, s * k, radicand, 2 * a) for s in (1, -1)]
            roots.sort()
            return roots
    roots = [QuadIrr(-b, 1, disc, 2 * a), QuadIrr(-b, -1, disc, 2 * a)]
    roots.sort()
    return roots


# -- continued fractions ------------------------------------------------


@dataclass(frozen=True)
class CFExpansion:
    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    radicand: int = field(default=1, compare=False)

    def __len__(self):
        return len(self.preperiod) + len(self.period)

    def value(self) -> QuadIrr:
        """Rebuild the expanded number exactly."""
        if self.period:
            # tail y = [period; y]  =>  y = (P*y + P')/(Q*y + Q')
            P, Pp, Q, Qp = 1, 0, 0, 1
            for a in self.period:
                P, Pp, Q, Qp = a * P + Pp, P, a * Q + Qp, Q
            # Q*y^2 + (Q' - P)*y - P' = 0, take the root > 1
            tail = quadratic_roots(Q, Qp - P, -Pp, self.radicand)[-1]
        else:
            tail = None
        x = tail
        for a in reversed(self.preperiod):
            x = QuadIrr.coerce(a) if x is None else a + 1 / x
        if x is None:
            raise ValueError("empty expansion")
        return x


def default_cf_budget(x: QuadIrr) -> int:
    return 4 * x.d + 200


def cf_expand(x: QuadIrr, max_steps: int | None = None) -> CFExpansion:
    """Continued fraction of ``x`` with exact cycle detection on complete quotients."""
    if max_steps is None:
        max_steps = default_cf_budget(x)
    seen: dict[QuadIrr, int] = {}
    quotients: list[int] = []
    y = x
    while True:
        if y in seen:
            i = seen[y]
            return CFExpansion(tuple(quotients[:i]), tuple(quotients[i:]), x.d)
        if len(quotients) >= max_steps:
            raise BudgetExceededError(
                f"continued fraction of {x} did not cycle within {max_steps} steps"
            )
        seen[y] = len(quotients)
        a, f = y.floor_frac()
        quotients.append(a)
        if f.p == 0 and f.q == 0:
            return CFExpansion(tuple(quotients), (), x.d)
        y = f.inverse()


# -- text grammar ----------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message):
        raise NumberSyntaxError(message, self.text, self.pos)

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self, signed=True) -> int:
        sign = 1
        if signed:
            while self.peek() in ("+", "-"):
                if self.text[self.pos] == "-":
                    sign = -sign
                self.pos += 1
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return sign * int(self.text[start:self.pos])


def parse_number(text: str) -> QuadIrr:
    s = _Scanner(text)
    if s.accept("("):
        p = s.integer()
        if s.accept("+"):
            sign = 1
        elif s.accept("-"):
            sign = -1
        else:
            s.fail("expected '+' or '-'")
        if s.peek() in ("+", "-") or s.peek().isdigit():
            q = s.integer()
            s.expect("*")
        else:
            q = 1
        s.expect("sqrt")
        s.expect("(")
        d = s.integer(signed=False)
        s.expect(")")
        s.expect(")")
        q *= sign
    else:
        p = s.integer()
        q, d = 0, 1
    r = s.integer() if s.accept("/") else 1
    if s.peek():
        s.fail("unexpected trailing input")
    return QuadIrr(p, q, d, r)


def format_number(x: QuadIrr) -> str:
    if x.q == 0:
        return str(x.p) if x.r == 1 else f"{x.p}/{x.r}"
    op = "+" if x.q > 0 else "-"
    body = f"({x.p}{op}{abs(x.q)}*sqrt({x.d}))"
    return body if x.r == 1 else f"{body}/{x.r}"

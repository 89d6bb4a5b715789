"""Binary words, rotation codings and the three mechanical palindromes.

Letters are the characters ``"0"`` and ``"1"``; ``1`` marks a point inside
the coding arc ``[0, alpha)``.  A :class:`FiniteWord` remembers the absolute
position of its first letter, so windows of bi-infinite words can be
compared and mirrored without index bookkeeping at the call site.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidSystemError, ShapeError
from .exactnum import QuadIrr, floor_linear

LETTERS = "01"


def as_letter(x) -> str:
    s = str(x)
    if s not in ("0", "1"):
        raise ValueError(f"not a binary letter: {x!r}")
    return s


@dataclass(frozen=True)
class FiniteWord:
    letters: str
    origin: int = 0

    def __post_init__(self):
        if self.letters.strip("01"):
            raise ValueError(f"non-binary letters in {self.letters!r}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    @property
    def lo(self) -> int:
        return self.origin

    @property
    def hi(self) -> int:
        return self.origin + len(self.letters) - 1

    def at(self, n: int) -> str:
        if not self.lo <= n <= self.hi:
            raise IndexError(f"position {n} outside [{self.lo}, {self.hi}]")
        return self.letters[n - self.origin]

    def window(self, lo: int, hi: int) -> "FiniteWord":
        """Restriction to positions ``lo..hi`` (must lie inside this word)."""
        if hi < lo:
            return FiniteWord("", lo)
        if lo < self.lo or hi > self.hi:
            raise IndexError(f"[{lo}, {hi}] is not inside [{self.lo}, {self.hi}]")
        return FiniteWord(self.letters[lo - self.origin:hi - self.origin + 1], lo)

    def ones(self) -> int:
        return self.letters.count("1")

    def centered(self) -> str:
        """Human-readable rendering with position 0 bracketed."""
        if not self.lo <= 0 <= self.hi:
            return self.letters
        k = -self.origin
        return f"...{self.letters[:k]}[{self.letters[k]}]{self.letters[k + 1:]}..."


class SymmetryType(enum.Enum):
    ABOUT_ONE = "one"
    ABOUT_ZERO = "zero"
    ABOUT_GAP = "gap"

    @property
    def is_letter_centered(self) -> bool:
        return self is not SymmetryType.ABOUT_GAP

    def swapped(self) -> "SymmetryType":
        """Effect of exchanging the letters 0 and 1."""
        if self is SymmetryType.ABOUT_ONE:
            return SymmetryType.ABOUT_ZERO
        if self is SymmetryType.ABOUT_ZERO:
            return SymmetryType.ABOUT_ONE
        return self

    def span(self, radius: int) -> tuple[int, int]:
        """Positions covered by a centered window of this type."""
        if self is SymmetryType.ABOUT_GAP:
            return -radius + 1, radius
        return -radius, radius


@dataclass(frozen=True)
class RotationSystem:
    """Rotation by ``alpha`` on the unit circle, coded by the arc ``[0, alpha)``.

    The letter at position ``n`` is 1 iff ``frac(start + n*alpha) < alpha``.
    """

    alpha: QuadIrr
    start: QuadIrr

    def __post_init__(self):
        alpha = QuadIrr.coerce(self.alpha)
        start = QuadIrr.coerce(self.start)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "start", start)
        if alpha.is_rational:
            raise InvalidSystemError(f"rational slope {alpha} gives a periodic word")
        if not (0 < alpha < 1):
            raise InvalidSystemError(f"slope {alpha} is outside (0, 1)")
        if start.q and start.d != alpha.d:
            raise InvalidSystemError(f"start {start} is not in the field of {alpha}")
        if not (0 <= start < 1):
            raise InvalidSystemError(f"start {start} is outside [0, 1)")

    def shifted(self, k: int = 1) -> "RotationSystem":
        return RotationSystem(self.alpha, (self.start + k * self.alpha).floor_frac()[1])


def code_window(sys: RotationSystem, lo: int, hi: int) -> FiniteWord:
    """Letters of the coding of ``sys`` at positions ``lo..hi``.

    Uses letter(n) = floor(start + n*alpha) - floor(start + (n-1)*alpha),
    which is 1 exactly when the orbit point lands in ``[0, alpha)``.
    """
    if hi < lo:
        return FiniteWord("", lo)
    a, s = sys.alpha, sys.start
    d = a.d
    den = a.r * s.r
    p0, q0 = s.p * a.r, s.q * a.r
    dp, dq = a.p * s.r, a.q * s.r
    prev = floor_linear(p0 + (lo - 1) * dp, q0 + (lo - 1) * dq, d, den)
    out = []
    for n in range(lo, hi + 1):
        cur = floor_linear(p0 + n * dp, q0 + n * dq, d, den)
        out.append("1" if cur != prev else "0")
        prev = cur
    return FiniteWord("".join(out), lo)


def palindrome_start(alpha: QuadIrr, sym: SymmetryType) -> QuadIrr:
    if sym is SymmetryType.ABOUT_ONE:
        return alpha / 2
    if sym is SymmetryType.ABOUT_ZERO:
        return (1 + alpha) / 2
    return QuadIrr(1, 0, 1, 2)


def palindrome_system(alpha: QuadIrr, sym: SymmetryType) -> RotationSystem:
    return RotationSystem(alpha, palindrome_start(QuadIrr.coerce(alpha), sym))


def palindrome_systems(alpha: QuadIrr) -> tuple[RotationSystem, RotationSystem, RotationSystem]:
    """Systems coding the palindromes about a 1, about a 0, and about a gap."""
    return tuple(palindrome_system(alpha, sym) for sym in SymmetryType)


def palindrome_window(alpha: QuadIrr, sym: SymmetryType, radius: int) -> FiniteWord:
    lo, hi = sym.span(radius)
    return code_window(palindrome_system(alpha, sym), lo, hi)


def check_palindrome(w: FiniteWord, sym: SymmetryType) -> bool:
    n = len(w)
    if sym.is_letter_centered:
        if n % 2 != 1 or w.origin != -(n // 2):
            raise ShapeError(f"letter-centered window needs origin -k and length 2k+1, got {w.origin}, {n}")
        if w.at(0) != ("1" if sym is SymmetryType.ABOUT_ONE else "0"):
            return False
    else:
        if n % 2 != 0 or w.origin != -(n // 2) + 1:
            raise ShapeError(f"gap-centered window needs origin -k+1 and length 2k, got {w.origin}, {n}")
    return w.letters == w.letters[::-1]


def factor_complexity(w: FiniteWord, n: int) -> int:
    """Number of distinct length-``n`` factors of ``w``."""
    if n < 0 or n > len(w):
        raise ValueError(f"factor length {n} out of range for a word of length {len(w)}")
    s = w.letters
    return len({s[i:i + n] for i in range(len(s) - n + 1)})


def balance_check(w: FiniteWord, n: int) -> bool:
    """True iff all length-``n`` factors have 1-counts within 1 of each other."""
    if n < 1 or n > len(w):
        raise ValueError(f"factor length {n} out of range for a word of length {len(w)}")
    s = w.letters
    c = s[:n].count("1")
    lo = hi = c
    for i in range(n, len(s)):
        c += (s[i] == "1") - (s[i - n] == "1")
        if c < lo:
            lo = c
        elif c > hi:
            hi = c
    return hi - lo <= 1

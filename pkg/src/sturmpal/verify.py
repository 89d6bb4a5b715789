"""Independent cross-checks for the exact core.

The numeric oracle recodes a rotation using scaled decimal integers and
only the raw ``(p, q, d, r)`` fields of its inputs, so an error in the exact
number classes cannot hide behind a matching bug here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AlignmentError, BudgetExceededError, PrecisionError
from .subst import Substitution
from .words import FiniteWord, RotationSystem, code_window


#: Largest coded window check_fixed_window will build, in letters.
MAX_FIXED_WINDOW = 2 * 10**7


@dataclass(frozen=True)
class PrecisionBudget:
    digits: int = 30
    max_digits: int = 1000

    def __post_init__(self):
        if not 10 <= self.digits <= self.max_digits <= 1000:
            raise ValueError(f"need 10 <= digits <= max_digits <= 1000, got {self.digits}, {self.max_digits}")


def _scaled(fields: tuple[int, int, int, int], digits: int) -> int:
    # (p + q*sqrt(d))/r * 10**digits, within 2 units
    p, q, d, r = fields
    m = 10**digits
    root = math.isqrt(q * q * d * m * m)
    return (p * m + (root if q >= 0 else -root)) // r


def _oracle_letter(a: int, s: int, n: int, m: int, margin: int) -> str | None:
    x = (s + n * a) % m
    # decision boundaries are 0 (== m) and alpha
    if x < margin or m - x < margin or abs(x - a) < margin:
        return None
    return "1" if x < a else "0"


def oracle_window(sys: RotationSystem, lo: int, hi: int, budget: PrecisionBudget | None = None) -> tuple[FiniteWord, int]:
    """Like :func:`numeric_oracle_window`, also returning the largest precision used."""
    budget = budget or PrecisionBudget()
    af, sf = sys.alpha.fields, sys.start.fields
    pending = list(range(lo, hi + 1))
    letters: dict[int, str] = {}
    digits = budget.digits
    used = digits
    while pending:
        used = digits
        m = 10**digits
        a, s = _scaled(af, digits), _scaled(sf, digits)
        floor_margin = 10**5
        unresolved = []
        for n in pending:
            # accumulated error is at most 2 + 2|n| units; keep a wide berth
            margin = max(floor_margin, 4 * (abs(n) + 2))
            c = _oracle_letter(a, s, n, m, margin)
            if c is None:
                unresolved.append(n)
            else:
                letters[n] = c
        pending = unresolved
        if pending:
            if digits >= budget.max_digits:
                raise PrecisionError(f"{len(pending)} positions undecided at {digits} digits")
            digits = min(2 * digits, budget.max_digits)
    return FiniteWord("".join(letters[n] for n in range(lo, hi + 1)), lo), used


def numeric_oracle_window(sys: RotationSystem, lo: int, hi: int, budget: PrecisionBudget | None = None) -> FiniteWord:
    return oracle_window(sys, lo, hi, budget)[0]


def find_fixed_alignment(s: Substitution, sys: RotationSystem, radius: int) -> int | None:
    """Offset at which ``s`` applied to the coded window reappears in the coding.

    Returns the absolute position of the first letter of the trimmed image
    inside the coding, or None when it does not occur.
    """
    if radius < 1:
        raise ValueError("radius must be at least 1")
    L = s.max_image_length
    if (2 * L * radius + 1) > MAX_FIXED_WINDOW:
        raise BudgetExceededError(
            f"window of radius {L}*{radius} exceeds {MAX_FIXED_WINDOW} letters; use a smaller radius"
        )
    image = s(code_window(sys, -radius, radius).letters)
    core = image[L:len(image) - L]
    big = code_window(sys, -L * radius, L * radius)
    i = big.letters.find(core)
    if i < 0:
        return None
    if big.letters.find(core, i + 1) >= 0:
        raise AlignmentError(f"image of {s} aligns with the coding at several offsets")
    return big.origin + i


def check_fixed_window(s: Substitution, sys: RotationSystem, radius: int) -> bool:
    """True iff the image of the coded window under ``s`` reappears in the coding.

    One maximal image length is trimmed at each edge, where a finite
    window's image may differ from the image of the infinite word.
    """
    return find_fixed_alignment(s, sys, radius) is not None

"""Substitutions (morphisms) on the binary alphabet.

Rules text format: ``0>00101;1>001``.

Composition reads like function composition: ``compose(f, g)`` maps a
word ``w`` to ``f(g(w))``.  Incidence matrices are stored column-wise,
column ``x`` holding the letter counts of the image of ``x``, so that the
matrix of ``compose(f, g)`` is ``incidence(f) @ incidence(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AmbiguityError,
    DegenerateSubstitutionError,
    DomainError,
    InconsistencyError,
    NotProlongableError,
    SeedError,
)
from .exactnum import QuadIrr, quadratic_roots
from .words import FiniteWord, as_letter

MAX_POWER = 4


@dataclass(frozen=True)
class Substitution:
    image0: str
    image1: str
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        for img in (self.image0, self.image1):
            if not img or img.strip("01"):
                raise DomainError(f"substitution images must be nonempty binary words, got {img!r}")
        object.__setattr__(self, "_table", str.maketrans({"0": self.image0, "1": self.image1}))

    def __call__(self, w: str) -> str:
        return w.translate(self._table)

    def image(self, letter) -> str:
        return self.image1 if as_letter(letter) == "1" else self.image0

    @property
    def max_image_length(self) -> int:
        return max(len(self.image0), len(self.image1))

    def __str__(self):
        return format_rules(self)

    def as_dict(self) -> dict[str, str]:
        return {"0": self.image0, "1": self.image1}


IDENTITY = Substitution("0", "1", "ID")
#: 1 -> 01, 0 -> 0: a zero is inserted before every 1
G = Substitution("0", "01", "G")
#: 1 -> 10, 0 -> 0: a zero is inserted after every 1
G_TILDE = Substitution("0", "10", "G~")
#: letter exchange
E = Substitution("1", "0", "E")
#: arc-cutting step of the classical induction (1 -> 10, 0 -> 0)
CUT = Substitution("0", "10", "CUT")
#: fixes the golden-slope palindrome centered on a 1
PHI_FIB = Substitution("00101", "001", "PHI")
PSI_1 = Substitution("01", "1", "PSI1")
PSI_2 = Substitution("001", "01", "PSI2")


def apply(s: Substitution, w: FiniteWord | str) -> FiniteWord:
    return FiniteWord(s(str(w)), 0)


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """``outer o inner``."""
    return Substitution(outer(inner.image0), outer(inner.image1))


def compose_all(subs) -> Substitution:
    """``s1 o s2 o ... o sk`` for the sequence ``[s1, ..., sk]``."""
    subs = list(subs)
    if not subs:
        return IDENTITY
    out = subs[-1]
    for s in reversed(subs[:-1]):
        out = compose(s, out)
    return out


def power(s: Substitution, k: int) -> Substitution:
    out = s
    for _ in range(k - 1):
        out = compose(s, out)
    return out


@dataclass(frozen=True)
class IncidenceMatrix:
    """Counts: image of 0 has ``a`` zeros and ``b`` ones; image of 1 has ``c`` zeros and ``d`` ones."""

    a: int
    b: int
    c: int
    d: int

    def as_matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        # column x = counts in the image of x
        return ((self.a, self.c), (self.b, self.d))

    def __matmul__(self, other: "IncidenceMatrix") -> "IncidenceMatrix":
        (m00, m01), (m10, m11) = self.as_matrix()
        (n00, n01), (n10, n11) = other.as_matrix()
        return IncidenceMatrix(
            a=m00 * n00 + m01 * n10,
            b=m10 * n00 + m11 * n10,
            c=m00 * n01 + m01 * n11,
            d=m10 * n01 + m11 * n11,
        )


def incidence(s: Substitution) -> IncidenceMatrix:
    return IncidenceMatrix(
        s.image0.count("0"), s.image0.count("1"), s.image1.count("0"), s.image1.count("1")
    )


def frequency_equation(m: IncidenceMatrix) -> tuple[int, int, int]:
    """Coefficients ``(A, B, C)`` of ``A*x^2 + B*x + C = 0``.

    Obtained by clearing the denominator in
    ``x = (b(1-x) + d x) / ((a+b)(1-x) + (c+d) x)``, the balance that a
    fixed word with 1-frequency ``x`` must satisfy.
    """
    return (m.c + m.d - m.a - m.b, m.a + 2 * m.b - m.d, -m.b)


def alpha_from_substitution(s: Substitution) -> QuadIrr:
    """The 1-frequency of the fixed words of ``s``, as an exact number.

    A square discriminant yields a rational result; callers that need an
    aperiodic word should check ``result.is_rational``.
    """
    return alpha_from_incidence(incidence(s), str(s))


def alpha_from_incidence(m: IncidenceMatrix, label: str | None = None, radicand: int | None = None) -> QuadIrr:
    """Root in (0, 1) of the frequency equation of ``m``.

    ``radicand`` is an optional squarefree hint for the field of the root;
    it spares factoring the discriminant of long compositions.
    """
    s = label or str(m)
    A, B, C = frequency_equation(m)
    if A == B == C == 0:
        raise DegenerateSubstitutionError(f"{s}: every slope satisfies the frequency equation")
    if A != 0 and B * B - 4 * A * C == 0:
        raise DegenerateSubstitutionError(f"{s}: double root of the frequency equation")
    inside = [x for x in quadratic_roots(A, B, C, radicand) if 0 < x < 1]
    if not inside:
        raise DegenerateSubstitutionError(f"{s}: frequency equation has no root in (0, 1)")
    if len(inside) > 1:
        raise AmbiguityError(f"{s}: two roots in (0, 1): {inside[0]}, {inside[1]}", inside)
    return inside[0]


def _prolongable_power(s: Substitution, seed: str, *, right: bool) -> Substitution:
    t = s
    for _ in range(MAX_POWER):
        img = t(seed)
        ok = img.startswith(seed) if right else img.endswith(seed)
        if ok and len(img) >= 2:
            return t
        t = compose(s, t)
    side = "starts" if right else "ends"
    raise NotProlongableError(f"no power s^k, k <= {MAX_POWER}, of {s} {side} with {seed} and grows")


def expand_one_sided(s: Substitution, seed, min_len: int) -> FiniteWord:
    """Prefix of length ``min_len`` of the right-infinite fixed point grown from ``seed``."""
    seed = as_letter(seed)
    t = _prolongable_power(s, seed, right=True)
    w = seed
    while len(w) < min_len:
        nxt = t(w)
        if not nxt.startswith(w):
            raise InconsistencyError("successive iterates disagree")
        w = nxt[:min_len]
    return FiniteWord(w[:max(min_len, 0)], 0)


def _pair_occurs(s: Substitution, pair: str, limit: int = 1 << 14) -> bool:
    for start in "01":
        w = start
        for _ in range(64):
            if pair in w:
                return True
            nxt = s(w)
            if nxt == w or len(w) > limit:
                break
            w = nxt[:limit]
    return False


def expand_two_sided(s: Substitution, left_seed, right_seed, radius: int) -> FiniteWord:
    """Window of the two-sided fixed point ``s^inf(left|right)``.

    ``left_seed`` sits at position 0 and ``right_seed`` at position 1.  The
    window spans ``[-radius, radius]``, or ``[0, 1]`` when ``radius`` is 0.
    """
    a, b = as_letter(left_seed), as_letter(right_seed)
    img_a, img_b = s(a), s(b)
    if not (img_a.endswith(a) and len(img_a) >= 2):
        raise SeedError(f"{s}: image of {a} = {img_a} does not end with {a} or does not grow")
    if not (img_b.startswith(b) and len(img_b) >= 2):
        raise SeedError(f"{s}: image of {b} = {img_b} does not start with {b} or does not grow")
    if not _pair_occurs(s, a + b):
        raise SeedError(f"{s}: the pair {a}|{b} never occurs in its iterates")
    n_left, n_right = radius + 1, max(radius, 1)
    left, right = a, b
    while len(left) < n_left or len(right) < n_right:
        nl, nr = s(left), s(right)
        if not (nl.endswith(left) and nr.startswith(right)):
            raise SeedError(f"{s}: iterates from {a}|{b} disagree on their overlap")
        left, right = nl[-n_left:], nr[:n_right]
    return FiniteWord(left[-n_left:] + right[:n_right], -radius)


# -- rules grammar -------------------------------------------------------


def parse_rules(text: str) -> Substitution:
    rules = {}
    for part in text.replace(" ", "").split(";"):
        if not part:
            continue
        letter, sep, image = part.partition(">")
        if not sep or letter not in ("0", "1") or letter in rules:
            raise DomainError(f"bad substitution rule {part!r} in {text!r}")
        rules[letter] = image
    if set(rules) != {"0", "1"}:
        raise DomainError(f"substitution {text!r} must give images for both 0 and 1")
    return Substitution(rules["0"], rules["1"])


def format_rules(s: Substitution) -> str:
    return f"0>{s.image0};1>{s.image1}"

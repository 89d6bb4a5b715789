"""Classical and palindromic Rauzy induction with exact cycle detection.

Both engines iterate a deterministic step map on exact states until a
state repeats.  The recorded substitutions split into a pre-period and a
period; with ``S1`` the first substitution recorded, the original word is
``S1(S2(...))``, so ``psi`` and ``phi`` compose outermost-first.

Palindromic steps (slope ``a``, symmetry ``j``)::

    a > 1/2        E,  a -> 1 - a,       one <-> zero, gap stays
    j = one        G,  a -> a/(1 - a),   stays one
    j = zero       G~, a -> a/(1 - a),   becomes gap
    j = gap        G,  a -> a/(1 - a),   becomes zero

Every step keeps the cut between positions 0 and 1: the image of the
letter at 0 ends at 0 and the image of the letter at 1 starts at 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .errors import (
    AlignmentError,
    BudgetExceededError,
    InconsistencyError,
    InvalidStateError,
)
from .exactnum import QuadIrr, cf_expand, format_number
from .subst import CUT, E, G, G_TILDE, IncidenceMatrix, Substitution, compose_all, incidence
from .words import FiniteWord, SymmetryType

HALF = QuadIrr(1, 0, 1, 2)
MIN_ALIGN_RADIUS = 64
MAX_ALIGN_RADIUS = 1 << 20


@dataclass(frozen=True)
class PalState:
    alpha: QuadIrr
    sym: SymmetryType

    def __str__(self):
        return f"({format_number(self.alpha)}, {self.sym.value})"

    @property
    def center(self) -> str:
        """Letter at position 0 of the palindrome this state describes."""
        if self.sym is SymmetryType.ABOUT_ONE:
            return "1"
        if self.sym is SymmetryType.ABOUT_ZERO:
            return "0"
        # w0 = w1, and two equal letters are the frequent ones
        return "0" if self.alpha < HALF else "1"


State = Union[PalState, QuadIrr]


@dataclass(frozen=True)
class Step:
    before: State
    applied: Substitution
    after: State

    def as_dict(self) -> dict:
        return {
            "before": _state_dict(self.before),
            "applied": self.applied.name,
            "after": _state_dict(self.after),
        }


def _incidence_product(steps) -> IncidenceMatrix:
    out = IncidenceMatrix(1, 0, 0, 1)
    for step in steps:
        out = out @ incidence(step.applied)
    return out


def _state_dict(s: State) -> dict:
    if isinstance(s, PalState):
        return {"alpha": format_number(s.alpha), "sym": s.sym.value}
    return {"alpha": format_number(s)}


@dataclass(frozen=True)
class InductionResult:
    preperiod: tuple[Step, ...]
    period: tuple[Step, ...]
    mode: str = field(default="palindrome")

    @property
    def initial(self) -> State:
        return (self.preperiod or self.period)[0].before

    @property
    def cycle_start(self) -> State:
        return self.period[0].before

    @cached_property
    def psi(self) -> Substitution:
        return compose_all(s.applied for s in self.preperiod)

    @cached_property
    def phi(self) -> Substitution:
        return compose_all(s.applied for s in self.period)

    @property
    def phi_incidence(self) -> IncidenceMatrix:
        """Incidence matrix of ``phi`` as a product, without building its images."""
        return _incidence_product(self.period)

    @property
    def psi_incidence(self) -> IncidenceMatrix:
        return _incidence_product(self.preperiod)

    @property
    def steps(self) -> tuple[Step, ...]:
        return self.preperiod + self.period

    def as_dict(self, with_compositions: bool = True) -> dict:
        out = {
            "mode": self.mode,
            "initial": _state_dict(self.initial),
            "cycle_start": _state_dict(self.cycle_start),
            "trace": [
                dict(s.as_dict(), phase=phase)
                for phase, part in (("preperiod", self.preperiod), ("period", self.period))
                for s in part
            ],
        }
        if with_compositions:
            out["psi"] = self.psi.as_dict()
            out["phi"] = self.phi.as_dict()
        return out


def _check_slope(alpha: QuadIrr) -> QuadIrr:
    alpha = QuadIrr.coerce(alpha)
    if alpha.is_rational:
        raise InvalidStateError(f"rational slope {alpha} has no Sturmian coding")
    if not 0 < alpha < 1:
        raise InvalidStateError(f"slope {alpha} is outside (0, 1)")
    return alpha


def pal_step(state: PalState) -> Step:
    alpha = _check_slope(state.alpha)
    if alpha > HALF:
        return Step(state, E, PalState(1 - alpha, state.sym.swapped()))
    nxt = alpha / (1 - alpha)
    if state.sym is SymmetryType.ABOUT_ONE:
        return Step(state, G, PalState(nxt, SymmetryType.ABOUT_ONE))
    if state.sym is SymmetryType.ABOUT_ZERO:
        return Step(state, G_TILDE, PalState(nxt, SymmetryType.ABOUT_GAP))
    return Step(state, G, PalState(nxt, SymmetryType.ABOUT_ZERO))


def rauzy_step(alpha: QuadIrr) -> Step:
    alpha = _check_slope(alpha)
    if alpha > HALF:
        return Step(alpha, E, 1 - alpha)
    return Step(alpha, CUT, alpha / (1 - alpha))


def default_max_steps(alpha: QuadIrr) -> int:
    return 10 * len(cf_expand(alpha)) + 60


def _run(step_fn, start, max_steps: int, mode: str) -> InductionResult:
    visited = {}
    trace: list[Step] = []
    state = start
    while state not in visited:
        if len(trace) >= max_steps:
            raise BudgetExceededError(f"induction from {start} did not cycle within {max_steps} steps")
        visited[state] = len(trace)
        step = step_fn(state)
        trace.append(step)
        state = step.after
    i = visited[state]
    return InductionResult(tuple(trace[:i]), tuple(trace[i:]), mode)


def run_palindromic_induction(alpha: QuadIrr, sym: SymmetryType, max_steps: int | None = None) -> InductionResult:
    alpha = _check_slope(alpha)
    if max_steps is None:
        max_steps = default_max_steps(alpha)
    return _run(pal_step, PalState(alpha, SymmetryType(sym)), max_steps, "palindrome")


def run_rauzy_induction(alpha: QuadIrr, max_steps: int | None = None) -> InductionResult:
    alpha = _check_slope(alpha)
    if max_steps is None:
        max_steps = default_max_steps(alpha)
    return _run(rauzy_step, alpha, max_steps, "rauzy")


# -- regrowth ------------------------------------------------------------


def _mirror(left: str, sym: SymmetryType, radius: int) -> str:
    """Centered window of a palindrome from its left half (ending at position 0)."""
    left = left[-(radius + 1):]
    if sym.is_letter_centered:
        return left + left[-2::-1]
    return left[1:] + left[::-1][:radius]


def _symmetric_centers(x: str, sym: SymmetryType, lo: int, hi: int, min_radius: int) -> list[int]:
    # indices c in [lo, hi] of x such that x is symmetric of type sym about c
    # (letter at c, or the gap between c and c + 1) over the widest span available
    out = []
    want = {SymmetryType.ABOUT_ONE: "1", SymmetryType.ABOUT_ZERO: "0"}.get(sym)
    for c in range(max(lo, 0), min(hi, len(x) - 1) + 1):
        if want is not None:
            m = min(c, len(x) - 1 - c)
            if m < min_radius or x[c] != want:
                continue
            if x[c - m:c] == x[c + 1:c + 1 + m][::-1]:
                out.append(c)
        else:
            m = min(c + 1, len(x) - 1 - c)
            if m < min_radius:
                continue
            if x[c + 1 - m:c + 1] == x[c + 1:c + 1 + m][::-1]:
                out.append(c)
    return out


def _substitute_window(window: str, sym: SymmetryType, radius: int, step: Step) -> str:
    """Apply one step to a centered window of ``step.after``; return the centered window of ``step.before``."""
    s = step.applied
    k = 1 - sym.span(radius)[0]  # letters at positions <= 0
    left, right = s(window[:k]), s(window[k:])
    image = left + right
    cut = len(left) - 1  # index of position 0 under the cut convention
    target = step.before.sym
    reach = s.max_image_length
    centers = _symmetric_centers(image, target, cut - reach, cut + reach, radius // 2)
    if centers != [cut]:
        raise AlignmentError(
            f"step {s.name} from {step.after}: symmetric centers {centers}, expected [{cut}]"
        )
    lo, hi = target.span(radius)
    out = image[cut + lo:cut + hi + 1]
    if len(out) != hi - lo + 1:
        raise InconsistencyError("substituted window is shorter than its preimage")
    return out


def _grow_left_half(period: tuple[Step, ...], seed: str, need: int) -> str:
    left = seed
    for _ in range(4 * need + 8):
        before = left
        for step in reversed(period):
            left = step.applied(left)[-need:]
        m = min(len(left), len(before))
        if left[-m:] != before[-m:]:
            raise InconsistencyError("left half is not a fixed point of the period composition")
        if len(left) >= need and left == before:
            return left
    raise InconsistencyError("left half did not stabilize under the period composition")


def regrow_palindrome(result: InductionResult, cycle_start: PalState | None = None, radius: int = 1000) -> FiniteWord:
    """Centered window of the palindrome of ``result.initial``, grown from ``psi(phi^inf(seed))``.

    Only the center letter of the cycle-start state is used as a seed; its
    left half is iterated through the period until it is a fixed point, then
    mirrored.  Each period and pre-period step is then replayed on the whole
    window, checking that the cut-preserving placement is the only one that
    yields a palindrome of the expected type.
    """
    if result.mode != "palindrome":
        raise InvalidStateError("regrowth needs a palindromic induction result")
    cs = result.cycle_start
    if cycle_start is not None and cycle_start != cs:
        raise InvalidStateError(f"{cycle_start} is not the cycle start {cs} of this result")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    work = max(radius, MIN_ALIGN_RADIUS)
    while True:
        try:
            window = _regrow(result, work)
            break
        except AlignmentError:
            # long runs of one letter make small windows look symmetric about several centers
            if work >= MAX_ALIGN_RADIUS:
                raise
            work *= 2
    sym = result.initial.sym
    lo, hi = sym.span(radius)
    wlo, _ = sym.span(work)
    return FiniteWord(window[lo - wlo:hi - wlo + 1], lo)


def _regrow(result: InductionResult, work: int) -> str:
    cs = result.cycle_start
    left = _grow_left_half(result.period, cs.center, work + 1)
    start = _mirror(left, cs.sym, work)
    window = start
    for step in reversed(result.period):
        window = _substitute_window(window, step.after.sym, work, step)
    if window != start:
        raise InconsistencyError("period composition does not fix the cycle-start palindrome")
    for step in reversed(result.preperiod):
        window = _substitute_window(window, step.after.sym, work, step)
    return window

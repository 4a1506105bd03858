"""Time sweeps and detection of the decoherence transition and entanglement sudden death.

Time is always the dimensionless product ``lambda t``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .channels import ChannelKind, evolve
from .correlations import CorrelationRecord, MeasurementModel, concurrence_margin, correlation_record
from .errors import DomainError, NoBracket, UnruhDiscordError
from .states import BellDiagonalParams, UnruhParams

DEFAULT_BRACKET = (0.0, 2.0)
BISECT_TOL = 1e-8
# measurement branches compared when locating the transition: (name, theta, phi)
BRANCHES = (
    ("z", 0.0, 0.0),
    ("x", math.pi / 2, 0.0),
    ("y", math.pi / 2, math.pi / 2),
)
BRANCH_TIE_TOL = 1e-13


class SweepError(UnruhDiscordError):
    """A grid point failed; ``lambda_t`` names it."""

    def __init__(self, lambda_t: float, cause: Exception):
        super().__init__(f"evaluation failed at lambda_t={lambda_t!r}: {cause}")
        self.lambda_t = lambda_t
        self.cause = cause


@dataclass(frozen=True)
class SweepConfig:
    params: BellDiagonalParams
    unruh: UnruhParams
    channel: ChannelKind
    t_grid: tuple[float, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "channel", ChannelKind(self.channel))
        object.__setattr__(self, "t_grid", tuple(float(t) for t in self.t_grid))

    def violations(self) -> list[str]:
        out = list(self.params.violations())
        grid = np.asarray(self.t_grid, dtype=float)
        if grid.size == 0:
            out.append("t_grid must be non-empty")
        else:
            if not np.all(np.isfinite(grid)):
                out.append("t_grid must be finite")
            elif grid.min() < 0:
                out.append(f"t_grid must be >= 0 (found {grid.min()!r})")
            if grid.size > 1 and not np.all(np.diff(grid) > 0):
                out.append("t_grid must be strictly increasing")
        return out

    def state_at(self, lambda_t: float) -> np.ndarray:
        return evolve(self.params, self.unruh, self.channel, lambda_t)


@dataclass(frozen=True)
class TransitionReport:
    transition_time: float | None = None
    sudden_death_time: float | None = None
    method: str = "detected"
    residual: float | None = None

    def as_dict(self) -> dict:
        return {
            "transition_time": self.transition_time,
            "sudden_death_time": self.sudden_death_time,
            "method": self.method,
            "residual": self.residual,
        }


def sweep(config: SweepConfig, max_workers: int = 1) -> list[CorrelationRecord]:
    """One :class:`CorrelationRecord` per grid point, in grid order."""
    bad = config.violations()
    if bad:
        raise DomainError("; ".join(bad))

    def point(lt: float) -> CorrelationRecord:
        try:
            return correlation_record(config.state_at(lt), lt)
        except Exception as exc:  # noqa: BLE001 - re-raised with the grid point attached
            raise SweepError(lt, exc) from exc

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(point, config.t_grid))
    return [point(lt) for lt in config.t_grid]


def bisect_predicate(pred: Callable[[float], bool], lo: float, hi: float,
                     tol: float = BISECT_TOL) -> float:
    """Boundary between ``pred(lo) == True`` and ``pred(hi) == False``."""
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def branch_entropies(params, unruh, channel, lambda_t) -> np.ndarray:
    """Conditional entropies for measurements along z, x and y on Alice's qubit."""
    model = MeasurementModel(evolve(params, unruh, channel, lambda_t))
    return np.array([model.conditional_entropy(t, p) for _, t, p in BRANCHES])


def _winner(values: np.ndarray) -> int:
    return int(np.argmin(values))


def detect_transition(params: BellDiagonalParams, unruh: UnruhParams, channel: ChannelKind,
                      bracket: Sequence[float] = DEFAULT_BRACKET) -> float:
    """Time at which the optimal measurement branch switches.

    The branch that minimises the conditional entropy at the bracket start is
    followed until it stops being (co-)optimal; the switch is bisected to
    ``1e-8`` in ``lambda t``.

    Raises
    ------
    NoBracket
        If the starting branch is still optimal at the bracket end.
    """
    lo, hi = map(float, bracket)
    if not 0 <= lo < hi:
        raise DomainError(f"invalid bracket {bracket!r}")
    channel = ChannelKind(channel)
    start = _winner(branch_entropies(params, unruh, channel, lo))

    def still_optimal(lt: float) -> bool:
        s = branch_entropies(params, unruh, channel, lt)
        return s[start] <= s.min() + BRANCH_TIE_TOL

    if still_optimal(hi):
        raise NoBracket("no transition in bracket")
    return bisect_predicate(still_optimal, lo, hi)


def closed_form_transition_phase_flip_T0(params: BellDiagonalParams) -> float:
    """``1/2 ln(|c1|/|c3|)``: zero-temperature phase-flip transition time."""
    c1, c2, c3 = (abs(c) for c in params.coefficients)
    if c1 < c2 or c3 == 0 or c3 > c1:
        raise DomainError("closed form needs |c1| >= |c2|, |c1| >= |c3| > 0")
    return 0.5 * math.log(c1 / c3)


def closed_form_transition_phase_bit_flip(params: BellDiagonalParams) -> float:
    """``-1/4 ln(c2^2/c1^2)``, independent of the Unruh temperature."""
    c1, c2, _ = params.coefficients
    if c2 == 0 or abs(c2) > abs(c1):
        raise DomainError("closed form needs |c1| >= |c2| > 0")
    return -0.25 * math.log(c2 ** 2 / c1 ** 2)


def closed_form_transition(params, unruh, channel) -> float | None:
    """Closed-form transition time where one is known, else ``None``."""
    channel = ChannelKind(channel)
    try:
        if channel is ChannelKind.PHASE_FLIP and unruh.q == 0:
            return closed_form_transition_phase_flip_T0(params)
        if channel is ChannelKind.PHASE_BIT_FLIP:
            return closed_form_transition_phase_bit_flip(params)
    except DomainError:
        return None
    return None


def find_transition(params: BellDiagonalParams, unruh: UnruhParams, channel: ChannelKind,
                    bracket: Sequence[float] = DEFAULT_BRACKET) -> TransitionReport:
    """Locate the classical/quantum decoherence transition.

    When no switch is detected inside the bracket but a closed form exists
    and lies in it (e.g. a transition exactly at the bracket start), the
    closed form is reported with ``method="closed_form"``.
    """
    exact = closed_form_transition(params, unruh, channel)
    try:
        t = detect_transition(params, unruh, channel, bracket)
    except NoBracket:
        if exact is not None and bracket[0] <= exact <= bracket[1]:
            return TransitionReport(transition_time=exact, method="closed_form")
        raise
    residual = None if exact is None else abs(t - exact)
    return TransitionReport(transition_time=t, residual=residual)


def closed_form_sudden_death_phase_flip(params: BellDiagonalParams, unruh: UnruhParams) -> float:
    """Time at which phase-flip concurrence reaches zero.

    Valid when the ``|00>,|11>`` coherence carries the entanglement and the
    other coherence never does:
    ``|c1 - c2| e^{-2 lt} = sqrt((1-c3)(1-c3+2q)/(1+q))``.
    """
    c1, c2, c3 = params.coefficients
    q = unruh.q
    lead = abs(c1 - c2)
    other_ok = abs(c1 + c2) * math.sqrt(1 + q) <= math.sqrt((1 + c3) * (1 + c3 + 2 * q))
    floor = math.sqrt((1 - c3) * (1 - c3 + 2 * q) / (1 + q))
    if not other_ok or floor <= 0 or lead <= floor:
        raise DomainError("closed-form sudden death does not apply to these parameters")
    return -0.5 * math.log(floor / lead)


def find_sudden_death(params: BellDiagonalParams, unruh: UnruhParams, channel: ChannelKind,
                      bracket: Sequence[float] = DEFAULT_BRACKET) -> TransitionReport:
    """Bisect the first time the concurrence reaches zero.

    Raises
    ------
    NoBracket
        If the state is not entangled at the bracket start or stays entangled
        up to the bracket end.
    """
    lo, hi = map(float, bracket)
    channel = ChannelKind(channel)

    def entangled(lt: float) -> bool:
        return concurrence_margin(evolve(params, unruh, channel, lt)) > 0

    if not entangled(lo):
        raise NoBracket("state is not entangled at the bracket start")
    if entangled(hi):
        raise NoBracket("concurrence stays positive on the bracket")
    t = bisect_predicate(entangled, lo, hi)
    residual = None
    if channel is ChannelKind.PHASE_FLIP:
        try:
            residual = abs(t - closed_form_sudden_death_phase_flip(params, unruh))
        except DomainError:
            pass
    return TransitionReport(sudden_death_time=t, residual=residual)


def analyze(params: BellDiagonalParams, unruh: UnruhParams, channel: ChannelKind,
            bracket: Sequence[float] = DEFAULT_BRACKET) -> TransitionReport:
    """Transition time plus sudden-death time (``None`` when there is none).

    Raises NoBracket when there is no transition.
    """
    trans = find_transition(params, unruh, channel, bracket)
    try:
        death = find_sudden_death(params, unruh, channel, bracket)
    except NoBracket:
        death = TransitionReport()
    residuals = [r for r in (trans.residual, death.residual) if r is not None]
    return TransitionReport(
        transition_time=trans.transition_time,
        sudden_death_time=death.sudden_death_time,
        method=trans.method,
        residual=max(residuals) if residuals else None,
    )

import math

import numpy as np
import pytest

from unruh_discord import (
    INFINITE,
    BellDiagonalParams,
    ChannelKind,
    SweepConfig,
    UnruhParams,
    analyze,
    closed_form_transition_phase_flip_T0,
    find_sudden_death,
    find_transition,
    sweep,
)
from unruh_discord import dynamics
from unruh_discord.dynamics import (
    SweepError,
    bisect_predicate,
    closed_form_sudden_death_phase_flip,
    closed_form_transition_phase_bit_flip,
)
from unruh_discord.errors import DomainError, NoBracket

from conftest import T1, T2

FIXTURE = BellDiagonalParams(1, -0.6, 0.6)
PF = ChannelKind.PHASE_FLIP


def config(t_grid, temperature=0.0, params=FIXTURE, channel=PF):
    return SweepConfig(params, UnruhParams(1.0, temperature), channel, t_grid)


class TestSweep:
    def test_single_point(self):
        (r,) = sweep(config([0.0]))
        assert r.mutual_info == pytest.approx(1.2780719051126377, abs=1e-12)
        assert r.classical == pytest.approx(1.0, abs=1e-12)
        assert r.discord == pytest.approx(0.2780719051126377, abs=1e-12)

    def test_discord_frozen_before_transition(self):
        grid = np.linspace(0, 2, 81)
        recs = sweep(config(grid))
        early = [r.discord for r in recs if r.lambda_t < 0.25541]
        assert max(abs(d - 0.2780719051126377) for d in early) < 1e-9

    def test_higher_temperature_lowers_mutual_information(self):
        grid = np.linspace(0, 2, 21)
        cold = sweep(config(grid))
        hot = sweep(config(grid, INFINITE))
        assert all(h.mutual_info < c.mutual_info for h, c in zip(hot, cold))

    @pytest.mark.parametrize("channel", list(ChannelKind))
    @pytest.mark.parametrize("temperature", [0.0, T1, INFINITE])
    def test_mutual_information_nonincreasing(self, channel, temperature):
        params = FIXTURE if channel is not ChannelKind.BIT_FLIP else BellDiagonalParams(0.6, -0.6, 1)
        recs = sweep(config(np.linspace(0, 2, 41), temperature, params, channel))
        info = np.array([r.mutual_info for r in recs])
        assert np.all(np.diff(info) <= 1e-9)

    def test_records_in_grid_order_with_threads(self):
        grid = np.linspace(0, 1, 17)
        assert sweep(config(grid), max_workers=4) == sweep(config(grid))

    @pytest.mark.parametrize("grid, message", [([], "non-empty"), ([0.2, 0.1], "strictly increasing"),
                                               ([-0.1, 0.0], ">= 0"), ([0.0, math.nan], "finite")])
    def test_invalid_grid(self, grid, message):
        with pytest.raises(DomainError, match=message):
            sweep(config(grid))

    def test_failed_point_reports_lambda_t(self, monkeypatch):
        real = dynamics.SweepConfig.state_at

        def flaky(self, lt):
            if lt == 0.5:
                raise FloatingPointError("boom")
            return real(self, lt)

        monkeypatch.setattr(dynamics.SweepConfig, "state_at", flaky)
        with pytest.raises(SweepError) as info:
            sweep(config([0.0, 0.5, 1.0]))
        assert info.value.lambda_t == 0.5


class TestTransition:
    def test_zero_temperature(self):
        rep = find_transition(FIXTURE, UnruhParams(), PF)
        assert rep.transition_time == pytest.approx(0.25541, abs=1e-4)
        assert rep.residual < 1e-6

    def test_infinite_temperature(self):
        assert find_transition(FIXTURE, UnruhParams(1, INFINITE), PF).transition_time == pytest.approx(0.37326, abs=1e-3)

    @pytest.mark.parametrize("temperature", [0.0, T1, INFINITE])
    def test_phase_bit_flip_constant(self, temperature):
        rep = find_transition(BellDiagonalParams(1, 0.6, -0.6), UnruhParams(1, temperature), ChannelKind.PHASE_BIT_FLIP)
        assert rep.transition_time == pytest.approx(0.25541281188299536, abs=1e-7)

    def test_closed_form_values(self):
        assert closed_form_transition_phase_flip_T0(FIXTURE) == pytest.approx(0.25541281188299536)
        assert closed_form_transition_phase_flip_T0(BellDiagonalParams(1, -0.5, 1)) == 0
        assert closed_form_transition_phase_bit_flip(BellDiagonalParams(1, 0.6, -0.6)) == pytest.approx(0.25541281188299536)

    def test_closed_form_against_bisection(self):
        p = BellDiagonalParams(0.8, -0.2, 0.4)
        assert closed_form_transition_phase_flip_T0(p) == pytest.approx(0.34657359027997264)
        assert find_transition(p, UnruhParams(), PF).transition_time == pytest.approx(0.34657359027997264, abs=1e-7)

    @pytest.mark.parametrize("c", [(0.5, -0.9, 0.3), (1, -0.6, 0), (0.4, -0.2, 0.8)])
    def test_closed_form_domain(self, c):
        with pytest.raises(DomainError):
            closed_form_transition_phase_flip_T0(BellDiagonalParams(*c))

    def test_transition_at_origin_uses_closed_form(self):
        rep = find_transition(BellDiagonalParams(0.6, -0.2, 0.6), UnruhParams(), PF)
        assert rep.method == "closed_form" and rep.transition_time == 0

    def test_product_state_has_no_transition(self):
        with pytest.raises(NoBracket):
            find_transition(BellDiagonalParams(0, 0, 0), UnruhParams(), PF)

    def test_bracket_validation(self):
        with pytest.raises(DomainError):
            find_transition(FIXTURE, UnruhParams(), PF, bracket=(1.0, 0.5))

    def test_phase_flip_delayed_by_temperature(self):
        times = [find_transition(FIXTURE, UnruhParams(1, t), PF).transition_time for t in (0, T1, T2, INFINITE)]
        assert all(a < b for a, b in zip(times, times[1:]))


class TestSuddenDeath:
    def test_zero_temperature_closed_form(self):
        rep = find_sudden_death(BellDiagonalParams(1, -0.3, 0.3), UnruhParams(), PF)
        assert rep.sudden_death_time == pytest.approx(0.30951960420311175, abs=1e-6)
        assert rep.residual < 1e-6

    def test_closed_form_simplifies_at_zero_temperature(self):
        got = closed_form_sudden_death_phase_flip(BellDiagonalParams(1, -0.3, 0.3), UnruhParams())
        assert got == pytest.approx(-0.5 * math.log(0.7 / 1.3))

    def test_pure_bell_state_never_dies(self):
        # the |01>,|10> populations vanish when c3 = 1, so the concurrence only decays asymptotically
        with pytest.raises(NoBracket):
            find_sudden_death(BellDiagonalParams(1, -1, 1), UnruhParams(), PF, bracket=(0, 10))

    def test_near_bell_state_matches_closed_form(self):
        p = BellDiagonalParams(0.95, -0.9, 0.9)
        rep = find_sudden_death(p, UnruhParams(), PF, bracket=(0, 5))
        assert rep.sudden_death_time == pytest.approx(closed_form_sudden_death_phase_flip(p, UnruhParams()), abs=1e-6)

    def test_earlier_at_higher_temperature(self):
        p = BellDiagonalParams(1, -0.3, 0.3)
        times = [find_sudden_death(p, UnruhParams(1, t), PF).sudden_death_time for t in (0, T1, T2, INFINITE)]
        assert all(a > b for a, b in zip(times, times[1:]))

    def test_not_entangled_at_start(self):
        with pytest.raises(NoBracket):
            find_sudden_death(BellDiagonalParams(0.2, -0.1, 0.1), UnruhParams(), PF)

    def test_analyze_combines_both(self):
        rep = analyze(BellDiagonalParams(1, -0.3, 0.3), UnruhParams(), PF)
        assert rep.transition_time == pytest.approx(0.5 * math.log(1 / 0.3), abs=1e-6)
        assert rep.sudden_death_time == pytest.approx(0.30951960420311175, abs=1e-6)
        assert set(rep.as_dict()) == {"transition_time", "sudden_death_time", "method", "residual"}


def test_bisect_predicate():
    assert bisect_predicate(lambda x: x < 0.3, 0.0, 1.0, tol=1e-10) == pytest.approx(0.3, abs=1e-10)

import json
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lwhbench import energymodel as em
from lwhbench.energymodel import CaptureConfig, PowerTrace
from lwhbench.errors import InvalidArgument, ParseError

samples = st.floats(-0.5, 0.5, allow_nan=False, allow_infinity=False)


def exact_power(sample, cfg=em.DEFAULT_CONFIG):
    # rational arithmetic as an oracle for the float pipeline
    f = lambda x: Fraction(x)
    return f(sample) * f(cfg.v_adc_ref) / f(cfg.gain_factor) / f(cfg.r_shunt) * f(cfg.v_sup)


def test_voltage_examples():
    assert em.to_actual_voltage(0.5) == pytest.approx(0.1, rel=1e-15)
    assert em.to_actual_voltage(0.0) == 0.0
    assert em.to_actual_voltage(-0.5) == pytest.approx(-0.1, rel=1e-15)


def test_power_examples():
    p = em.instantaneous_power(0.5)
    assert p == pytest.approx(float(exact_power(0.5)), rel=1e-14)
    assert p == pytest.approx(6.613e-3, rel=1e-3)
    assert em.instantaneous_power(0.0) == 0.0
    doubled = CaptureConfig(r_shunt=2 * 49.9)
    assert em.instantaneous_power(0.3, doubled) == pytest.approx(em.instantaneous_power(0.3) / 2, rel=1e-15)


def test_watts_per_unit_not_prerounded():
    assert em.DEFAULT_CONFIG.watts_per_unit == pytest.approx(3.3 / 5 / 49.9, rel=1e-15)
    assert em.DEFAULT_CONFIG.watts_per_unit != 1.3e-2


@pytest.mark.parametrize("bad", [0.5000001, -0.51, 2.0])
def test_out_of_range_sample(bad):
    with pytest.raises(InvalidArgument):
        em.to_actual_voltage(bad)
    with pytest.raises(InvalidArgument):
        PowerTrace([0.0, bad])


def test_config_validation():
    for field in ("v_adc_ref", "gain_factor", "r_shunt", "v_sup", "f_clk"):
        with pytest.raises(InvalidArgument):
            CaptureConfig(**{field: 0})
        with pytest.raises(InvalidArgument):
            CaptureConfig(**{field: -1.0})
    with pytest.raises(InvalidArgument):
        CaptureConfig(gain_factor=float("nan"))


def test_gain_db_option():
    assert em.gain_from_db(20) == pytest.approx(10.0)
    cfg = CaptureConfig.with_gain_db(5.0)
    assert cfg.gain_factor == pytest.approx(1.778279410038923)


def test_rms_constant_and_sign():
    t = PowerTrace([0.25] * 10)
    assert em.rms_power(t) == pytest.approx(abs(em.instantaneous_power(0.25)), rel=1e-15)
    assert em.rms_power(PowerTrace([0.5, -0.5])) == pytest.approx(em.rms_power(PowerTrace([0.5, 0.5])), rel=1e-15)
    assert em.rms_power(PowerTrace([0.0, 0.0])) == 0.0


def test_rms_empty_trace():
    with pytest.raises(InvalidArgument):
        em.rms_power(PowerTrace([]))


def two_pass_rms(samples, cfg=em.DEFAULT_CONFIG):
    powers = [em.instantaneous_power(s, cfg) for s in samples]
    mean_sq = math.fsum(p * p for p in powers) / len(powers)
    return math.sqrt(mean_sq)


def test_rms_matches_two_pass_oracle_on_10k_trace():
    rng = random.Random(2024)
    xs = [rng.uniform(-0.5, 0.5) for _ in range(10_000)]
    got = em.rms_power(PowerTrace(xs))
    want = two_pass_rms(xs)
    assert abs(got - want) / want < 1e-12


def test_execution_time():
    assert em.execution_time(7_372_800) == 1.0
    assert em.execution_time(0) == 0.0
    assert em.execution_time(204 * 128) == pytest.approx(3.542e-3, rel=1e-3)
    with pytest.raises(InvalidArgument):
        em.execution_time(-1)


def test_energy_examples():
    r = em.energy(PowerTrace([0.5] * 8), 7_372_800)
    assert r.energy_joules == pytest.approx(6.613e-3, rel=1e-3)
    assert r.energy_joules == r.p_rms_watts * r.t_exec_seconds
    assert r.energy_nj == r.energy_joules * 1e9
    assert em.energy(PowerTrace([0.3, -0.1]), 0).energy_joules == 0.0


def test_energy_config_override():
    t = PowerTrace([0.4] * 4)
    base = em.energy(t, 1000)
    fast = em.energy(t, 1000, CaptureConfig(f_clk=2 * 7_372_800))
    assert fast.energy_joules == pytest.approx(base.energy_joules / 2, rel=1e-15)


@settings(max_examples=60, deadline=None)
@given(st.lists(samples, min_size=1, max_size=200), st.integers(0, 10**7), st.integers(1, 50))
def test_energy_linear_in_cycles(xs, cycles, k):
    t = PowerTrace(xs)
    e1 = em.energy(t, cycles).energy_joules
    ek = em.energy(t, cycles * k).energy_joules
    assert ek == pytest.approx(k * e1, rel=1e-12, abs=1e-300)  # subnormal inputs lose relative precision


@settings(max_examples=60, deadline=None)
@given(st.lists(samples, min_size=1, max_size=200), st.randoms(use_true_random=False))
def test_energy_permutation_invariant(xs, rnd):
    ys = list(xs)
    rnd.shuffle(ys)
    a = em.rms_power(PowerTrace(xs))
    b = em.rms_power(PowerTrace(ys))
    assert a == pytest.approx(b, rel=1e-12, abs=1e-300)


@settings(max_examples=60, deadline=None)
@given(st.lists(samples, min_size=1, max_size=100), st.integers(1, 100))
def test_zero_padding_never_raises_rms(xs, pad):
    assert em.rms_power(PowerTrace(xs + [0.0] * pad)) <= em.rms_power(PowerTrace(xs)) * (1 + 1e-12)


@settings(max_examples=40, deadline=None)
@given(st.lists(samples, min_size=1, max_size=50), st.floats(0.1, 10), st.floats(1, 1000))
def test_homogeneity_in_vsup_and_shunt(xs, vsup, shunt):
    t = PowerTrace(xs)
    base = em.energy(t, 1000, CaptureConfig(v_sup=vsup, r_shunt=shunt)).energy_joules
    up = em.energy(t, 1000, CaptureConfig(v_sup=2 * vsup, r_shunt=shunt)).energy_joules
    wide = em.energy(t, 1000, CaptureConfig(v_sup=vsup, r_shunt=2 * shunt)).energy_joules
    assert up == pytest.approx(2 * base, rel=1e-12, abs=1e-300)
    assert wide == pytest.approx(base / 2, rel=1e-12, abs=1e-300)


def test_trace_is_immutable():
    t = PowerTrace([0.1, 0.2])
    with pytest.raises(ValueError):
        t.samples[0] = 0.3


def test_text_and_binary_trace_io(tmp_path):
    xs = [0.5, -0.25, 0.125, 0.0]
    em.save_trace(tmp_path / "t.txt", xs)
    em.save_trace(tmp_path / "t.bin", xs, binary=True)
    a = em.load_trace(tmp_path / "t.txt")
    b = em.load_trace(tmp_path / "t.bin")
    assert list(a.samples) == xs == list(b.samples)
    assert (tmp_path / "t.bin").read_bytes()[:8] == b"LWHTRC01"


def test_binary_float32_precision(tmp_path):
    em.save_trace(tmp_path / "t.bin", [0.1], binary=True)
    assert em.load_trace(tmp_path / "t.bin").samples[0] == float(np.float32(0.1))


def test_trace_parse_errors(tmp_path):
    (tmp_path / "bad.txt").write_text("0.1\nabc\n")
    with pytest.raises(ParseError) as exc:
        em.load_trace(tmp_path / "bad.txt")
    assert exc.value.line == 2
    (tmp_path / "range.txt").write_text("0.9\n")
    with pytest.raises(ParseError):
        em.load_trace(tmp_path / "range.txt")
    (tmp_path / "short.bin").write_bytes(b"LWHTRC01\x00\x00")
    with pytest.raises(ParseError):
        em.load_trace(tmp_path / "short.bin")


def test_result_dict_is_json_ready():
    d = em.energy(PowerTrace([0.5]), 100).as_dict()
    assert set(d) == {"p_rms_w", "t_exec_s", "energy_j", "energy_nj", "n_samples"}
    json.dumps(d)

"""Energy per hash execution from normalized ADC power traces.

A capture sample s in [-0.5, 0.5] maps to the voltage across the shunt as
``v = s * v_adc_ref / gain``; current is ``v / r_shunt`` and power is that
current times the supply voltage. Energy is RMS power times execution time
``cycles / f_clk``.
"""

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidArgument, ParseError

SAMPLE_MIN = -0.5
SAMPLE_MAX = 0.5
TRACE_MAGIC = b"LWHTRC01"


def gain_from_db(db):
    """Amplitude gain for a figure in decibels (20 log10 convention)."""
    return 10.0 ** (db / 20.0)


@dataclass(frozen=True)
class CaptureConfig:
    v_adc_ref: float = 1.0
    gain_factor: float = 5.0
    r_shunt: float = 49.9
    v_sup: float = 3.3
    f_clk: float = 7_372_800.0

    def __post_init__(self):
        for name in ("v_adc_ref", "gain_factor", "r_shunt", "v_sup", "f_clk"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InvalidArgument(f"{name} must be a positive finite number, got {value!r}")

    @classmethod
    def with_gain_db(cls, db, **kw):
        return cls(gain_factor=gain_from_db(db), **kw)

    @property
    def watts_per_unit(self):
        """Instantaneous power for a sample of 1.0 (about 1.3226e-2 W with defaults)."""
        return self.v_adc_ref / self.gain_factor / self.r_shunt * self.v_sup


DEFAULT_CONFIG = CaptureConfig()


def _check_samples(arr):
    if arr.size and not np.all(np.isfinite(arr)):
        raise InvalidArgument("trace contains non-finite samples")
    if arr.size and (arr.min() < SAMPLE_MIN or arr.max() > SAMPLE_MAX):
        bad = arr[(arr < SAMPLE_MIN) | (arr > SAMPLE_MAX)][0]
        raise InvalidArgument(f"sample {bad!r} outside the normalized ADC range [-0.5, 0.5]")


class PowerTrace:
    """Immutable sequence of normalized ADC samples plus its capture settings."""

    def __init__(self, samples, config=DEFAULT_CONFIG):
        arr = np.array(samples, dtype=np.float64).ravel()
        _check_samples(arr)
        arr.setflags(write=False)
        self.samples = arr
        self.config = config

    def __len__(self):
        return self.samples.size

    def __repr__(self):
        return f"PowerTrace(n={len(self)}, config={self.config!r})"


@dataclass(frozen=True)
class EnergyResult:
    p_rms_watts: float
    t_exec_seconds: float
    energy_joules: float
    n_samples: int

    @property
    def energy_nj(self):
        return self.energy_joules * 1e9

    def as_dict(self):
        return {
            "p_rms_w": self.p_rms_watts,
            "t_exec_s": self.t_exec_seconds,
            "energy_j": self.energy_joules,
            "energy_nj": self.energy_nj,
            "n_samples": self.n_samples,
        }


def _check_sample(sample):
    if not SAMPLE_MIN <= sample <= SAMPLE_MAX:
        raise InvalidArgument(f"sample {sample!r} outside the normalized ADC range [-0.5, 0.5]")


def to_actual_voltage(sample, config=DEFAULT_CONFIG):
    _check_sample(sample)
    return sample * config.v_adc_ref / config.gain_factor


def instantaneous_power(sample, config=DEFAULT_CONFIG):
    current = to_actual_voltage(sample, config) / config.r_shunt
    return current * config.v_sup


def power_series(trace):
    c = trace.config
    return trace.samples * c.v_adc_ref / c.gain_factor / c.r_shunt * c.v_sup


def rms_power(trace):
    if len(trace) == 0:
        raise InvalidArgument("RMS power of an empty trace is undefined")
    p = power_series(trace)
    # scale by the peak first so tiny powers do not underflow when squared
    peak = float(np.max(np.abs(p)))
    if peak == 0.0:
        return 0.0
    q = p / peak
    return peak * math.sqrt(float(np.dot(q, q)) / q.size)


def execution_time(cycles, config=DEFAULT_CONFIG):
    if cycles < 0:
        raise InvalidArgument("cycles must be nonnegative")
    return cycles / config.f_clk


def energy(trace, cycles, config=None):
    """Energy of one execution. ``config`` overrides the trace's own settings."""
    if config is not None and config is not trace.config:
        trace = PowerTrace(trace.samples, config)
    p_rms = rms_power(trace)
    t = execution_time(cycles, trace.config)
    return EnergyResult(p_rms, t, p_rms * t, len(trace))


def loads_text_trace(text, path=None):
    values = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ParseError(f"not a number: {line!r}", line=line_no, path=path) from None
    return values


def loads_binary_trace(blob, path=None):
    if not blob.startswith(TRACE_MAGIC):
        raise ParseError("missing LWHTRC01 header", path=path)
    body = blob[len(TRACE_MAGIC):]
    if len(body) % 4:
        raise ParseError(f"payload of {len(body)} bytes is not a whole number of float32 samples", path=path)
    return np.frombuffer(body, dtype="<f4").astype(np.float64)


def dumps_binary_trace(samples):
    arr = np.asarray(samples, dtype="<f4")
    return TRACE_MAGIC + arr.tobytes()


def dumps_text_trace(samples):
    return "".join(f"{float(s)!r}\n" for s in samples)


def load_trace(path, config=DEFAULT_CONFIG):
    """Read a trace file; the binary form is detected by its magic header."""
    path = Path(path)
    blob = path.read_bytes()
    if blob.startswith(TRACE_MAGIC):
        samples = loads_binary_trace(blob, str(path))
    else:
        try:
            text = blob.decode("ascii")
        except UnicodeDecodeError:
            raise ParseError("trace is neither LWHTRC01 binary nor ASCII text", path=str(path)) from None
        samples = loads_text_trace(text, str(path))
    try:
        return PowerTrace(samples, config)
    except InvalidArgument as exc:
        raise ParseError(str(exc), path=str(path)) from None


def save_trace(path, samples, binary=False):
    path = Path(path)
    if binary:
        path.write_bytes(dumps_binary_trace(samples))
    else:
        path.write_text(dumps_text_trace(samples))


__all__ = [
    "CaptureConfig", "DEFAULT_CONFIG", "EnergyResult", "PowerTrace", "TRACE_MAGIC",
    "energy", "execution_time", "gain_from_db", "instantaneous_power", "load_trace",
    "rms_power", "save_trace", "to_actual_voltage",
]

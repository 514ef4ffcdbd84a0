"""E-RANK, FOM and the two min-max normalizations."""

import math
import warnings

from ..errors import DegenerateInput, InvalidArgument

LOG_RATIO = "ratio"
LOG_PRINTED = "printed"


def _positive(name, value):
    try:
        ok = value > 0 and math.isfinite(value)
    except TypeError:
        ok = False
    if not ok:
        raise InvalidArgument(f"{name} must be a positive finite number, got {value!r}")


def erank(rec):
    """(1e9 / cpb) / ((rom + 2 ram) * energy) in cycles/byte, bytes and nJ.

    RAM counts twice because it is the scarcer resource on the target parts.
    """
    rec.require_complete()
    return (1e9 / rec.cpb) / ((rec.rom_bytes + 2 * rec.ram_bytes) * rec.energy_nj)


def fom(throughput, clk, ge):
    """Hardware figure of merit: throughput / (clk * GE^2)."""
    _positive("throughput", throughput)
    _positive("clk", clk)
    _positive("ge", ge)
    return throughput / (clk * ge * ge)


def _degenerate(values, what):
    msg = f"{what}: all {len(values)} values are equal; every score set to 1.0"
    warnings.warn(msg, RuntimeWarning, stacklevel=3)
    return [1.0] * len(values)


def normalize_inverted_minmax(values, strict=False):
    """Lower is better: x -> 1 - (x - min) / (max - min).

    Constant input has no spread to normalize over; it maps to all 1.0
    with a warning, or raises DegenerateInput when ``strict``.
    """
    values = [float(v) for v in values]
    if not values:
        raise InvalidArgument("cannot normalize an empty column")
    if any(not math.isfinite(v) for v in values):
        raise InvalidArgument("values must be finite")
    lo, hi = min(values), max(values)
    if lo == hi:
        if strict:
            raise DegenerateInput("all values equal")
        return _degenerate(values, "inverted min-max")
    span = hi - lo
    return [1.0 - (v - lo) / span for v in values]


def normalize_log_minmax(values, variant=LOG_RATIO, strict=False):
    """Higher is better, on a log scale: log(x/min) / log(max/min).

    ``variant="printed"`` evaluates log(x * min) / log(max/min) literally,
    as an earlier typeset form had it. It is kept only for auditing and is
    not confined to [0, 1].
    """
    values = [float(v) for v in values]
    if not values:
        raise InvalidArgument("cannot normalize an empty column")
    for v in values:
        _positive("log-normalized value", v)
    lo, hi = min(values), max(values)
    if lo == hi:
        if strict:
            raise DegenerateInput("all values equal")
        return _degenerate(values, "log min-max")
    denom = math.log(hi / lo)
    if variant == LOG_RATIO:
        out = [math.log(v / lo) / denom for v in values]
        # log(x/min) can land a hair outside [0,1] from rounding at the endpoints
        return [min(1.0, max(0.0, x)) for x in out]
    if variant == LOG_PRINTED:
        return [math.log(v * lo) / denom for v in values]
    raise InvalidArgument(f"unknown log normalization variant {variant!r}")

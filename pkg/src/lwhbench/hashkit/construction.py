"""Shared machinery for the sponge, duplex and HAIFA hash modes."""

from dataclasses import dataclass
from enum import Enum

from ..errors import InvalidArgument, StateError
from .registry import get_spec


def pad_10star(block, rate_bytes, domain=0x01):
    """Pad ``block`` to ``rate_bytes``: the data, one domain byte, then zeros.

    ``domain`` defaults to 0x01 (little-endian 10* padding); big-endian
    designs such as Ascon pass 0x80.
    """
    block = bytes(block)
    if rate_bytes < 1:
        raise InvalidArgument("rate_bytes must be positive")
    if len(block) >= rate_bytes:
        raise InvalidArgument(
            f"block of {len(block)} bytes does not leave room for padding in a {rate_bytes}-byte rate"
        )
    return block + bytes([domain]) + bytes(rate_bytes - len(block) - 1)


def xor_into(state, data, offset=0):
    for i, b in enumerate(data):
        state[offset + i] ^= b


class Phase(Enum):
    ABSORBING = "Absorbing"
    SQUEEZING = "Squeezing"
    FINALIZED = "Finalized"


@dataclass(frozen=True)
class Digest:
    bytes: bytes
    spec_id: str

    def hex(self):
        return self.bytes.hex()

    def __len__(self):
        return len(self.bytes)


class HashInstance:
    """Buffered absorb/squeeze driver; subclasses supply the mode.

    Subclasses set ``spec_id`` and ``block_size`` and implement
    ``_absorb_block`` (a block that is known not to be the last one),
    ``_absorb_final`` (the remaining 0..block_size bytes) and ``_squeeze``.
    With ``lazy_final`` a full block is held back until more input arrives,
    for modes that treat a full final block differently from a padded one.

    Instances are single-owner; do not share one across threads mid-hash.
    """

    spec_id = None
    block_size = 1
    lazy_final = False

    def __init__(self, data=b""):
        self.spec = get_spec(self.spec_id)
        self._state = bytearray(self.spec.state_bytes)
        self._buf = bytearray()
        self._digest = None
        self.absorbed_bytes = 0
        self.phase = Phase.ABSORBING
        self._init_state()
        if data:
            self.update(data)

    def _init_state(self):
        pass

    def _next_block_size(self):
        return self.block_size

    def _absorb_block(self, block):
        raise NotImplementedError

    def _absorb_final(self, tail):
        raise NotImplementedError

    def _squeeze(self, n):
        raise NotImplementedError

    @property
    def state(self):
        return bytes(self._state)

    @property
    def digest_size(self):
        return self.spec.digest_bytes

    def update(self, data):
        if self.phase is not Phase.ABSORBING:
            raise StateError(f"{self.spec.id}: update after finalization")
        buf = self._buf
        buf += data
        pos = 0
        n = len(buf)
        while True:
            bs = self._next_block_size()
            avail = n - pos
            if avail < bs or (self.lazy_final and avail == bs):
                break
            self._absorb_block(bytes(buf[pos:pos + bs]))
            self.absorbed_bytes += bs
            pos += bs
        if pos:
            del buf[:pos]
        return self

    def finalize(self):
        if self._digest is None:
            tail = bytes(self._buf)
            self._buf.clear()
            self._absorb_final(tail)
            self.absorbed_bytes += len(tail)
            self.phase = Phase.SQUEEZING
            out = self._squeeze(self.spec.digest_bytes)
            self.phase = Phase.FINALIZED
            self._digest = Digest(bytes(out), self.spec.id)
        return self._digest

    def digest(self):
        return self.finalize().bytes

    def hexdigest(self):
        return self.finalize().hex()

    def copy(self):
        other = object.__new__(type(self))
        other.__dict__.update(self.__dict__)
        other._state = bytearray(self._state)
        other._buf = bytearray(self._buf)
        return other

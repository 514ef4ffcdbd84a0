"""Esch256: SPARKLE384 sponge with Feistel-style message injection."""

import struct

from .. import _kernels
from .._kernels._pure import ell
from .construction import HashInstance

BRANCHES = 6
STEPS_SLIM = 7
STEPS_BIG = 11
RATE = 16
# y word of branch 2 sits at bytes 20..23; the constants live in its top byte
_CONST_OFFSET = 23


class Esch256(HashInstance):
    spec_id = "esch256"
    block_size = RATE
    lazy_final = True

    def _inject(self, block):
        if len(block) < RATE:
            block = bytes(block) + b"\x80" + bytes(RATE - len(block) - 1)
        m0, m1, m2, m3 = struct.unpack("<4I", block)
        tx = ell(m0 ^ m2)
        ty = ell(m1 ^ m3)
        w = list(struct.unpack("<12I", self._state))
        # words: x0 y0 x1 y1 x2 y2 ...
        w[0] ^= m0 ^ ty
        w[1] ^= m1 ^ tx
        w[2] ^= m2 ^ ty
        w[3] ^= m3 ^ tx
        w[4] ^= ty
        w[5] ^= tx
        self._state[:] = struct.pack("<12I", *w)

    def _absorb_block(self, block):
        self._inject(block)
        _kernels.sparkle_permute(self._state, BRANCHES, STEPS_SLIM)

    def _absorb_final(self, tail):
        self._state[_CONST_OFFSET] ^= 0x01 if len(tail) < RATE else 0x02
        self._inject(tail)
        _kernels.sparkle_permute(self._state, BRANCHES, STEPS_BIG)

    def _squeeze(self, n):
        out = bytearray(self._state[:RATE])
        while len(out) < n:
            _kernels.sparkle_permute(self._state, BRANCHES, STEPS_SLIM)
            out += self._state[:RATE]
        return out[:n]

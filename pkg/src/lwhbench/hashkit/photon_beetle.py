"""PHOTON-Beetle-Hash with a 32-bit rate over the PHOTON-256 permutation.

The first 16 message bytes are loaded straight into the state; the rest is
absorbed four bytes at a time. A 3-bit constant in the top of the last
state byte separates padded (1) from block-aligned (2) final blocks.
"""

from .. import _kernels
from .construction import HashInstance, xor_into

INITIAL_RATE = 16
RATE = 4
SQUEEZE_RATE = 16


class PhotonBeetleHash(HashInstance):
    spec_id = "photon-beetle"
    lazy_final = True

    def _next_block_size(self):
        return INITIAL_RATE if self.absorbed_bytes == 0 else RATE

    def _add_const(self, c0):
        self._state[31] ^= c0 << 5

    def _absorb_block(self, block):
        if self.absorbed_bytes == 0:
            xor_into(self._state, block)
        else:
            _kernels.photon256_permute(self._state)
            xor_into(self._state, block)

    def _absorb_final(self, tail):
        st = self._state
        if self.absorbed_bytes == 0:
            limit = INITIAL_RATE
        else:
            limit = RATE
            _kernels.photon256_permute(st)
        xor_into(st, tail)
        if len(tail) < limit:
            if tail or self.absorbed_bytes:
                st[len(tail)] ^= 0x01
            self._add_const(1)
        else:
            self._add_const(2)

    def _squeeze(self, n):
        out = bytearray()
        while len(out) < n:
            _kernels.photon256_permute(self._state)
            out += self._state[:SQUEEZE_RATE]
        return out[:n]

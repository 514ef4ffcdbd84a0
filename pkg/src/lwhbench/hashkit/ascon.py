"""Ascon-Hash (v1.2, NIST LWC final round): 64-bit rate, p12 everywhere."""

from .. import _kernels
from .construction import HashInstance, pad_10star, xor_into

# IV for Ascon-Hash: k=0, r=64, a=12, a-b=0, h=256
ASCON_HASH_IV = bytes.fromhex("00400c0000000100")


class AsconHash(HashInstance):
    spec_id = "ascon"
    block_size = 8
    rounds = 12

    def _init_state(self):
        self._state[:8] = ASCON_HASH_IV
        _kernels.ascon_permute(self._state, self.rounds)

    def _absorb_block(self, block):
        xor_into(self._state, block)
        _kernels.ascon_permute(self._state, self.rounds)

    def _absorb_final(self, tail):
        xor_into(self._state, pad_10star(tail, 8, domain=0x80))
        _kernels.ascon_permute(self._state, self.rounds)

    def _squeeze(self, n):
        out = bytearray(self._state[:8])
        while len(out) < n:
            _kernels.ascon_permute(self._state, self.rounds)
            out += self._state[:8]
        return out[:n]

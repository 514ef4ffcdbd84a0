"""Gimli-Hash as submitted to NIST LWC (gimli24v1)."""

from .. import _kernels
from .construction import HashInstance, xor_into


class GimliHash(HashInstance):
    spec_id = "gimli"
    block_size = 16
    # (offset, byte) pairs XORed after the final partial block
    pad_byte = 0x01
    final_marker = (47, 0x01)

    def _absorb_block(self, block):
        xor_into(self._state, block)
        _kernels.gimli_permute(self._state)

    def _absorb_final(self, tail):
        st = self._state
        xor_into(st, tail)
        st[len(tail)] ^= self.pad_byte
        idx, byte = self.final_marker
        st[idx] ^= byte
        _kernels.gimli_permute(st)

    def _squeeze(self, n):
        out = bytearray(self._state[:16])
        while len(out) < n:
            _kernels.gimli_permute(self._state)
            out += self._state[:16]
        return out[:n]

"""Xoodyak in Cyclist hash mode (Xoodoo[12], 16-byte absorb/squeeze rate)."""

from .. import _kernels
from .construction import HashInstance, xor_into

ABSORB_DOMAIN = 0x03
SQUEEZE_DOMAIN = 0x40  # only applied in keyed mode; kept for reference


class XoodyakHash(HashInstance):
    spec_id = "xoodyak"
    block_size = 16

    def _down(self, block, cd):
        st = self._state
        xor_into(st, block)
        st[len(block)] ^= 0x01
        # hash mode keeps only the lowest bit of the domain byte
        st[47] ^= cd & 0x01

    def _absorb_block(self, block):
        if self.absorbed_bytes == 0:
            self._down(block, ABSORB_DOMAIN)
        else:
            _kernels.xoodoo_permute(self._state, 12)
            self._down(block, 0)

    def _absorb_final(self, tail):
        # an empty message still absorbs one empty block; a block-aligned one does not
        if tail or self.absorbed_bytes == 0:
            self._absorb_block(tail)

    def _squeeze(self, n):
        _kernels.xoodoo_permute(self._state, 12)
        out = bytearray(self._state[:16])
        while len(out) < n:
            self._down(b"", 0)
            _kernels.xoodoo_permute(self._state, 12)
            out += self._state[:16]
        return out[:n]

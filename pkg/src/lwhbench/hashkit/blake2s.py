"""Unkeyed BLAKE2s-256 (RFC 7693)."""

import struct

from .. import _kernels
from .._kernels._pure import BLAKE2S_IV
from .construction import HashInstance

BLOCK = 64


class Blake2s(HashInstance):
    spec_id = "blake2s"
    block_size = BLOCK
    lazy_final = True

    def _init_state(self):
        # parameter block: digest length 32, key length 0, fanout 1, depth 1
        h = list(BLAKE2S_IV)
        h[0] ^= 0x01010000 | self.spec.digest_bytes
        self._state[:] = struct.pack("<8I", *h)
        self._counter = 0

    def _absorb_block(self, block):
        self._counter += BLOCK
        _kernels.blake2s_compress(self._state, block, self._counter, False)

    def _absorb_final(self, tail):
        self._counter += len(tail)
        block = bytes(tail) + bytes(BLOCK - len(tail))
        _kernels.blake2s_compress(self._state, block, self._counter, True)

    def _squeeze(self, n):
        return bytes(self._state[:n])

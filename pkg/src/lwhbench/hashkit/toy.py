"""An 8-bit toy permutation used to check bijectivity exhaustively in tests."""

from .._kernels._pure import PHOTON_SBOX

_ROUND_CONSTANTS = (0x1B, 0x36, 0x6C)


def toy8_permute(x):
    """Three rounds of nibble S-box, 3-bit rotation and constant addition."""
    if not 0 <= x <= 0xFF:
        raise ValueError("toy8_permute takes a byte value")
    for rc in _ROUND_CONSTANTS:
        x = (PHOTON_SBOX[x >> 4] << 4) | PHOTON_SBOX[x & 0xF]
        x = ((x << 3) | (x >> 5)) & 0xFF
        x ^= rc
    return x

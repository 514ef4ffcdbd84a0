"""Pure-Python permutation and compression kernels.

Every kernel mutates a ``bytearray`` in place using the byte order of the
corresponding reference implementation. The compiled module ``_ckernels``
exposes the same names and signatures.
"""

import struct

M32 = 0xFFFFFFFF
M64 = 0xFFFFFFFFFFFFFFFF


def _rotl32(x, n):
    return ((x << n) | (x >> (32 - n))) & M32


def _rotr32(x, n):
    return ((x >> n) | (x << (32 - n))) & M32


def _rotr64(x, n):
    return ((x >> n) | (x << (64 - n))) & M64


# --- Ascon ---------------------------------------------------------------

def ascon_permute(state, rounds=12):
    """Ascon-p with ``rounds`` rounds on a 40-byte big-endian state."""
    x0, x1, x2, x3, x4 = struct.unpack(">5Q", state)
    for r in range(12 - rounds, 12):
        x2 ^= ((0xF - r) << 4) | r
        x0 ^= x4
        x4 ^= x3
        x2 ^= x1
        t0 = (~x0 & M64) & x1
        t1 = (~x1 & M64) & x2
        t2 = (~x2 & M64) & x3
        t3 = (~x3 & M64) & x4
        t4 = (~x4 & M64) & x0
        x0 ^= t1
        x1 ^= t2
        x2 ^= t3
        x3 ^= t4
        x4 ^= t0
        x1 ^= x0
        x0 ^= x4
        x3 ^= x2
        x2 ^= M64
        x0 ^= _rotr64(x0, 19) ^ _rotr64(x0, 28)
        x1 ^= _rotr64(x1, 61) ^ _rotr64(x1, 39)
        x2 ^= _rotr64(x2, 1) ^ _rotr64(x2, 6)
        x3 ^= _rotr64(x3, 10) ^ _rotr64(x3, 17)
        x4 ^= _rotr64(x4, 7) ^ _rotr64(x4, 41)
    state[:] = struct.pack(">5Q", x0, x1, x2, x3, x4)


# --- Gimli ---------------------------------------------------------------

def gimli_permute(state):
    """Gimli (24 rounds) on a 48-byte state of little-endian words."""
    s = list(struct.unpack("<12I", state))
    for rnd in range(24, 0, -1):
        for col in range(4):
            x = _rotl32(s[col], 24)
            y = _rotl32(s[4 + col], 9)
            z = s[8 + col]
            s[8 + col] = (x ^ (z << 1) ^ ((y & z) << 2)) & M32
            s[4 + col] = (y ^ x ^ ((x | z) << 1)) & M32
            s[col] = (z ^ y ^ ((x & y) << 3)) & M32
        if rnd & 3 == 0:
            s[0], s[1], s[2], s[3] = s[1], s[0], s[3], s[2]
            s[0] ^= 0x9E377900 | rnd
        elif rnd & 3 == 2:
            s[0], s[1], s[2], s[3] = s[2], s[3], s[0], s[1]
    state[:] = struct.pack("<12I", *s)


# --- Xoodoo --------------------------------------------------------------

XOODOO_RC = (
    0x00000058, 0x00000038, 0x000003C0, 0x000000D0,
    0x00000120, 0x00000014, 0x00000060, 0x0000002C,
    0x00000380, 0x000000F0, 0x000001A0, 0x00000012,
)


def xoodoo_permute(state, rounds=12):
    """Xoodoo[rounds] on a 48-byte state (3 planes x 4 lanes, little-endian)."""
    a = list(struct.unpack("<12I", state))
    for rc in XOODOO_RC[12 - rounds:]:
        p = [a[x] ^ a[4 + x] ^ a[8 + x] for x in range(4)]
        e = [_rotl32(p[(x - 1) % 4], 5) ^ _rotl32(p[(x - 1) % 4], 14) for x in range(4)]
        for i in range(12):
            a[i] ^= e[i & 3]
        # rho-west
        a[4], a[5], a[6], a[7] = a[7], a[4], a[5], a[6]
        for x in range(4):
            a[8 + x] = _rotl32(a[8 + x], 11)
        a[0] ^= rc
        # chi
        for x in range(4):
            a0, a1, a2 = a[x], a[4 + x], a[8 + x]
            a[x] = a0 ^ (~a1 & a2)
            a[4 + x] = a1 ^ (~a2 & a0)
            a[8 + x] = a2 ^ (~a0 & a1)
            a[x] &= M32
            a[4 + x] &= M32
            a[8 + x] &= M32
        # rho-east
        for x in range(4):
            a[4 + x] = _rotl32(a[4 + x], 1)
        b = a[8:12]
        for x in range(4):
            a[8 + x] = _rotl32(b[(x - 2) % 4], 8)
    state[:] = struct.pack("<12I", *a)


# --- PHOTON-256 ----------------------------------------------------------

PHOTON_SBOX = (12, 5, 6, 11, 9, 0, 10, 13, 3, 14, 15, 8, 4, 7, 1, 2)
# last row of the serial matrix; MixColumns uses its 8th power
PHOTON_SERIAL_ROW = (2, 4, 2, 11, 2, 8, 5, 6)
_PHOTON_RC_BASE = (1, 3, 7, 14, 13, 11, 6, 12, 9, 2, 5, 10)
_PHOTON_IC = (0, 1, 3, 7, 15, 14, 12, 8)


def gf16_mul(a, b):
    """Multiply in GF(2^4) modulo x^4 + x + 1."""
    r = 0
    for i in range(4):
        if (b >> i) & 1:
            r ^= a << i
    for i in (6, 5, 4):
        if (r >> i) & 1:
            r ^= 0x13 << (i - 4)
    return r


def _photon_mix_matrix():
    a = [[1 if j == i + 1 else 0 for j in range(8)] for i in range(7)]
    a.append(list(PHOTON_SERIAL_ROW))
    m = a
    for _ in range(7):
        m = [
            [_xor_all(gf16_mul(m[i][k], a[k][j]) for k in range(8)) for j in range(8)]
            for i in range(8)
        ]
    return tuple(tuple(row) for row in m)


def _xor_all(values):
    acc = 0
    for v in values:
        acc ^= v
    return acc


PHOTON_MIX = _photon_mix_matrix()
PHOTON_RC = tuple(tuple(rc ^ ic for rc in _PHOTON_RC_BASE) for ic in _PHOTON_IC)
_GF16 = tuple(tuple(gf16_mul(a, b) for b in range(16)) for a in range(16))


def photon256_permute(state):
    """PHOTON-256 (12 rounds, 8x8 nibbles) on a 32-byte state.

    Cell ``i`` (row-major) sits in byte ``i // 2``, low nibble first.
    """
    s = [[0] * 8 for _ in range(8)]
    for i in range(64):
        s[i >> 3][i & 7] = (state[i >> 1] >> (4 * (i & 1))) & 0xF
    sbox = PHOTON_SBOX
    for rnd in range(12):
        for r in range(8):
            s[r][0] ^= PHOTON_RC[r][rnd]
        for r in range(8):
            row = [sbox[c] for c in s[r]]
            s[r] = row[r:] + row[:r]
        cols = [[s[r][c] for r in range(8)] for c in range(8)]
        for c in range(8):
            col = cols[c]
            for r in range(8):
                mrow = _GF16_ROWS[r]
                acc = 0
                for k in range(8):
                    acc ^= mrow[k][col[k]]
                s[r][c] = acc
    for i in range(32):
        state[i] = s[(2 * i) >> 3][(2 * i) & 7] | (s[(2 * i + 1) >> 3][(2 * i + 1) & 7] << 4)


_GF16_ROWS = tuple(tuple(_GF16[coef] for coef in row) for row in PHOTON_MIX)


# --- SPARKLE -------------------------------------------------------------

SPARKLE_RCON = (
    0xB7E15162, 0xBF715880, 0x38B4DA56, 0x324E7738,
    0xBB1185EB, 0x4F7C7B57, 0xCFBFA1C8, 0xC2B3293D,
)


def ell(x):
    return _rotr32((x ^ (x << 16)) & M32, 16)


def alzette(x, y, c):
    x = (x + _rotr32(y, 31)) & M32
    y ^= _rotr32(x, 24)
    x ^= c
    x = (x + _rotr32(y, 17)) & M32
    y ^= _rotr32(x, 17)
    x ^= c
    x = (x + y) & M32
    y ^= _rotr32(x, 31)
    x ^= c
    x = (x + _rotr32(y, 24)) & M32
    y ^= _rotr32(x, 16)
    x ^= c
    return x, y


def sparkle_permute(state, branches, steps):
    """SPARKLE with ``branches`` 64-bit branches, laid out x0 y0 x1 y1 ..."""
    nw = 2 * branches
    w = list(struct.unpack("<%dI" % nw, state))
    xs = w[0::2]
    ys = w[1::2]
    half = branches // 2
    for i in range(steps):
        ys[0] ^= SPARKLE_RCON[i % 8]
        ys[1] ^= i
        for j in range(branches):
            xs[j], ys[j] = alzette(xs[j], ys[j], SPARKLE_RCON[j])
        tx = 0
        ty = 0
        for j in range(half):
            tx ^= xs[j]
            ty ^= ys[j]
        tx = ell(tx)
        ty = ell(ty)
        for j in range(half):
            ys[j + half] ^= tx ^ ys[j]
            xs[j + half] ^= ty ^ xs[j]
        # swap halves, rotating the new left side by one branch
        xs = xs[half + 1:] + xs[half:half + 1] + xs[:half]
        ys = ys[half + 1:] + ys[half:half + 1] + ys[:half]
    w[0::2] = xs
    w[1::2] = ys
    state[:] = struct.pack("<%dI" % nw, *w)


# --- BLAKE2s -------------------------------------------------------------

BLAKE2S_IV = (
    0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
    0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19,
)

BLAKE2S_SIGMA = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3),
    (11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4),
    (7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8),
    (9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13),
    (2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9),
    (12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11),
    (13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10),
    (6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5),
    (10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0),
)

_G_LANES = ((0, 4, 8, 12), (1, 5, 9, 13), (2, 6, 10, 14), (3, 7, 11, 15),
            (0, 5, 10, 15), (1, 6, 11, 12), (2, 7, 8, 13), (3, 4, 9, 14))


def blake2s_compress(h, block, counter, last):
    """BLAKE2s compression F: updates the 32-byte chaining value ``h`` in place."""
    hw = struct.unpack("<8I", h)
    m = struct.unpack("<16I", block)
    v = list(hw) + list(BLAKE2S_IV)
    v[12] ^= counter & M32
    v[13] ^= (counter >> 32) & M32
    if last:
        v[14] ^= M32
    for rnd in range(10):
        s = BLAKE2S_SIGMA[rnd]
        for i, (a, b, c, d) in enumerate(_G_LANES):
            x = m[s[2 * i]]
            y = m[s[2 * i + 1]]
            va = (v[a] + v[b] + x) & M32
            vd = _rotr32(v[d] ^ va, 16)
            vc = (v[c] + vd) & M32
            vb = _rotr32(v[b] ^ vc, 12)
            va = (va + vb + y) & M32
            vd = _rotr32(vd ^ va, 8)
            vc = (vc + vd) & M32
            vb = _rotr32(vb ^ vc, 7)
            v[a], v[b], v[c], v[d] = va, vb, vc, vd
    h[:] = struct.pack("<8I", *(hw[i] ^ v[i] ^ v[i + 8] for i in range(8)))

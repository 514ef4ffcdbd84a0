# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counterparts of the kernels in ``_pure``; same names, same byte order."""

from libc.stdint cimport uint8_t, uint32_t, uint64_t

from . import _pure


cdef inline uint32_t rotl32(uint32_t x, int n) nogil:
    return (x << n) | (x >> (32 - n))


cdef inline uint32_t rotr32(uint32_t x, int n) nogil:
    return (x >> n) | (x << (32 - n))


cdef inline uint64_t rotr64(uint64_t x, int n) nogil:
    return (x >> n) | (x << (64 - n))


cdef inline uint32_t load32le(const uint8_t *p) nogil:
    return (<uint32_t>p[0]) | (<uint32_t>p[1] << 8) | (<uint32_t>p[2] << 16) | (<uint32_t>p[3] << 24)


cdef inline void store32le(uint8_t *p, uint32_t v) noexcept nogil:
    p[0] = v & 0xFF
    p[1] = (v >> 8) & 0xFF
    p[2] = (v >> 16) & 0xFF
    p[3] = (v >> 24) & 0xFF


cdef inline uint64_t load64be(const uint8_t *p) nogil:
    cdef uint64_t v = 0
    cdef int i
    for i in range(8):
        v = (v << 8) | p[i]
    return v


cdef inline void store64be(uint8_t *p, uint64_t v) noexcept nogil:
    cdef int i
    for i in range(7, -1, -1):
        p[i] = v & 0xFF
        v >>= 8


cdef void _check(Py_ssize_t got, Py_ssize_t want, str name) except *:
    if got != want:
        raise ValueError(f"{name}: state must be {want} bytes, got {got}")


# --- Ascon ---------------------------------------------------------------

def ascon_permute(uint8_t[::1] state, int rounds=12):
    _check(state.shape[0], 40, "ascon_permute")
    if rounds < 1 or rounds > 12:
        raise ValueError("rounds must be in 1..12")
    cdef uint64_t x0, x1, x2, x3, x4, t0, t1, t2, t3, t4
    cdef int r
    cdef uint8_t *p = &state[0]
    with nogil:
        x0 = load64be(p)
        x1 = load64be(p + 8)
        x2 = load64be(p + 16)
        x3 = load64be(p + 24)
        x4 = load64be(p + 32)
        for r in range(12 - rounds, 12):
            x2 ^= <uint64_t>(((0xF - r) << 4) | r)
            x0 ^= x4
            x4 ^= x3
            x2 ^= x1
            t0 = (~x0) & x1
            t1 = (~x1) & x2
            t2 = (~x2) & x3
            t3 = (~x3) & x4
            t4 = (~x4) & x0
            x0 ^= t1
            x1 ^= t2
            x2 ^= t3
            x3 ^= t4
            x4 ^= t0
            x1 ^= x0
            x0 ^= x4
            x3 ^= x2
            x2 = ~x2
            x0 ^= rotr64(x0, 19) ^ rotr64(x0, 28)
            x1 ^= rotr64(x1, 61) ^ rotr64(x1, 39)
            x2 ^= rotr64(x2, 1) ^ rotr64(x2, 6)
            x3 ^= rotr64(x3, 10) ^ rotr64(x3, 17)
            x4 ^= rotr64(x4, 7) ^ rotr64(x4, 41)
        store64be(p, x0)
        store64be(p + 8, x1)
        store64be(p + 16, x2)
        store64be(p + 24, x3)
        store64be(p + 32, x4)


# --- Gimli ---------------------------------------------------------------

def gimli_permute(uint8_t[::1] state):
    _check(state.shape[0], 48, "gimli_permute")
    cdef uint32_t s[12]
    cdef uint32_t x, y, z
    cdef int rnd, col, i
    cdef uint8_t *p = &state[0]
    with nogil:
        for i in range(12):
            s[i] = load32le(p + 4 * i)
        rnd = 24
        while rnd > 0:
            for col in range(4):
                x = rotl32(s[col], 24)
                y = rotl32(s[4 + col], 9)
                z = s[8 + col]
                s[8 + col] = x ^ (z << 1) ^ ((y & z) << 2)
                s[4 + col] = y ^ x ^ ((x | z) << 1)
                s[col] = z ^ y ^ ((x & y) << 3)
            if (rnd & 3) == 0:
                x = s[0]; s[0] = s[1]; s[1] = x
                x = s[2]; s[2] = s[3]; s[3] = x
                s[0] ^= (<uint32_t>0x9E377900) | <uint32_t>rnd
            elif (rnd & 3) == 2:
                x = s[0]; s[0] = s[2]; s[2] = x
                x = s[1]; s[1] = s[3]; s[3] = x
            rnd -= 1
        for i in range(12):
            store32le(p + 4 * i, s[i])


# --- Xoodoo --------------------------------------------------------------

cdef uint32_t XRC[12]
XRC[:] = [0x00000058, 0x00000038, 0x000003C0, 0x000000D0,
          0x00000120, 0x00000014, 0x00000060, 0x0000002C,
          0x00000380, 0x000000F0, 0x000001A0, 0x00000012]


def xoodoo_permute(uint8_t[::1] state, int rounds=12):
    _check(state.shape[0], 48, "xoodoo_permute")
    if rounds < 1 or rounds > 12:
        raise ValueError("rounds must be in 1..12")
    cdef uint32_t a[12]
    cdef uint32_t p[4]
    cdef uint32_t e[4]
    cdef uint32_t b[4]
    cdef uint32_t a0, a1, a2, t
    cdef int i, x, r
    cdef uint8_t *q = &state[0]
    with nogil:
        for i in range(12):
            a[i] = load32le(q + 4 * i)
        for r in range(12 - rounds, 12):
            for x in range(4):
                p[x] = a[x] ^ a[4 + x] ^ a[8 + x]
            for x in range(4):
                t = p[(x + 3) & 3]
                e[x] = rotl32(t, 5) ^ rotl32(t, 14)
            for i in range(12):
                a[i] ^= e[i & 3]
            t = a[7]; a[7] = a[6]; a[6] = a[5]; a[5] = a[4]; a[4] = t
            for x in range(4):
                a[8 + x] = rotl32(a[8 + x], 11)
            a[0] ^= XRC[r]
            for x in range(4):
                a0 = a[x]; a1 = a[4 + x]; a2 = a[8 + x]
                a[x] = a0 ^ ((~a1) & a2)
                a[4 + x] = a1 ^ ((~a2) & a0)
                a[8 + x] = a2 ^ ((~a0) & a1)
            for x in range(4):
                a[4 + x] = rotl32(a[4 + x], 1)
                b[x] = a[8 + x]
            for x in range(4):
                a[8 + x] = rotl32(b[(x + 2) & 3], 8)
        for i in range(12):
            store32le(q + 4 * i, a[i])


# --- PHOTON-256 ----------------------------------------------------------

cdef uint8_t PSBOX[16]
cdef uint8_t PRC[8][12]
cdef uint8_t PMUL[8][8][16]


def _init_photon_tables():
    cdef int i, j, k
    for i in range(16):
        PSBOX[i] = _pure.PHOTON_SBOX[i]
    for i in range(8):
        for j in range(12):
            PRC[i][j] = _pure.PHOTON_RC[i][j]
    for i in range(8):
        for j in range(8):
            for k in range(16):
                PMUL[i][j][k] = _pure.gf16_mul(_pure.PHOTON_MIX[i][j], k)


_init_photon_tables()


def photon256_permute(uint8_t[::1] state):
    _check(state.shape[0], 32, "photon256_permute")
    cdef uint8_t s[8][8]
    cdef uint8_t row[8]
    cdef uint8_t col[8]
    cdef uint8_t acc
    cdef int i, r, c, k, rnd
    cdef uint8_t *p = &state[0]
    with nogil:
        for i in range(64):
            s[i >> 3][i & 7] = (p[i >> 1] >> (4 * (i & 1))) & 0xF
        for rnd in range(12):
            for r in range(8):
                s[r][0] ^= PRC[r][rnd]
            for r in range(8):
                for c in range(8):
                    row[c] = PSBOX[s[r][(c + r) & 7]]
                for c in range(8):
                    s[r][c] = row[c]
            for c in range(8):
                for k in range(8):
                    col[k] = s[k][c]
                for r in range(8):
                    acc = 0
                    for k in range(8):
                        acc ^= PMUL[r][k][col[k]]
                    s[r][c] = acc
        for i in range(32):
            p[i] = s[(2 * i) >> 3][(2 * i) & 7] | (s[(2 * i + 1) >> 3][(2 * i + 1) & 7] << 4)


# --- SPARKLE -------------------------------------------------------------

cdef uint32_t SRC[8]
SRC[:] = [0xB7E15162, 0xBF715880, 0x38B4DA56, 0x324E7738,
          0xBB1185EB, 0x4F7C7B57, 0xCFBFA1C8, 0xC2B3293D]


cdef inline uint32_t ell(uint32_t x) nogil:
    return rotr32(x ^ (x << 16), 16)


def sparkle_permute(uint8_t[::1] state, int branches, int steps):
    if branches not in (4, 6, 8):
        raise ValueError("branches must be 4, 6 or 8")
    _check(state.shape[0], 8 * branches, "sparkle_permute")
    cdef uint32_t xs[8]
    cdef uint32_t ys[8]
    cdef uint32_t x, y, c, tx, ty
    cdef int i, j, half = branches // 2
    cdef uint8_t *p = &state[0]
    with nogil:
        for j in range(branches):
            xs[j] = load32le(p + 8 * j)
            ys[j] = load32le(p + 8 * j + 4)
        for i in range(steps):
            ys[0] ^= SRC[i & 7]
            ys[1] ^= <uint32_t>i
            for j in range(branches):
                c = SRC[j]
                x = xs[j]
                y = ys[j]
                x += rotr32(y, 31); y ^= rotr32(x, 24); x ^= c
                x += rotr32(y, 17); y ^= rotr32(x, 17); x ^= c
                x += y;             y ^= rotr32(x, 31); x ^= c
                x += rotr32(y, 24); y ^= rotr32(x, 16); x ^= c
                xs[j] = x
                ys[j] = y
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
            tx = xs[0]
            ty = ys[0]
            for j in range(half - 1):
                xs[j] = xs[j + half + 1]
                xs[j + half + 1] = xs[j + 1]
                ys[j] = ys[j + half + 1]
                ys[j + half + 1] = ys[j + 1]
            xs[half - 1] = xs[half]
            xs[half] = tx
            ys[half - 1] = ys[half]
            ys[half] = ty
        for j in range(branches):
            store32le(p + 8 * j, xs[j])
            store32le(p + 8 * j + 4, ys[j])


# --- BLAKE2s -------------------------------------------------------------

cdef uint32_t BIV[8]
BIV[:] = [0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
          0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19]

cdef uint8_t SIGMA[10][16]


def _init_sigma():
    cdef int i, j
    for i in range(10):
        for j in range(16):
            SIGMA[i][j] = _pure.BLAKE2S_SIGMA[i][j]


_init_sigma()


cdef inline void gmix(uint32_t *v, int a, int b, int c, int d, uint32_t x, uint32_t y) noexcept nogil:
    v[a] = v[a] + v[b] + x
    v[d] = rotr32(v[d] ^ v[a], 16)
    v[c] = v[c] + v[d]
    v[b] = rotr32(v[b] ^ v[c], 12)
    v[a] = v[a] + v[b] + y
    v[d] = rotr32(v[d] ^ v[a], 8)
    v[c] = v[c] + v[d]
    v[b] = rotr32(v[b] ^ v[c], 7)


def blake2s_compress(uint8_t[::1] h, const uint8_t[::1] block, unsigned long long counter, bint last):
    _check(h.shape[0], 32, "blake2s_compress")
    if block.shape[0] != 64:
        raise ValueError("blake2s_compress: block must be 64 bytes")
    cdef uint32_t m[16]
    cdef uint32_t v[16]
    cdef uint32_t hw[8]
    cdef int i, r
    cdef const uint8_t *s
    cdef uint8_t *hp = &h[0]
    cdef const uint8_t *bp = &block[0]
    with nogil:
        for i in range(16):
            m[i] = load32le(bp + 4 * i)
        for i in range(8):
            hw[i] = load32le(hp + 4 * i)
            v[i] = hw[i]
            v[i + 8] = BIV[i]
        v[12] ^= <uint32_t>counter
        v[13] ^= <uint32_t>(counter >> 32)
        if last:
            v[14] = ~v[14]
        for r in range(10):
            s = &SIGMA[r][0]
            gmix(v, 0, 4, 8, 12, m[s[0]], m[s[1]])
            gmix(v, 1, 5, 9, 13, m[s[2]], m[s[3]])
            gmix(v, 2, 6, 10, 14, m[s[4]], m[s[5]])
            gmix(v, 3, 7, 11, 15, m[s[6]], m[s[7]])
            gmix(v, 0, 5, 10, 15, m[s[8]], m[s[9]])
            gmix(v, 1, 6, 11, 12, m[s[10]], m[s[11]])
            gmix(v, 2, 7, 8, 13, m[s[12]], m[s[13]])
            gmix(v, 3, 4, 9, 14, m[s[14]], m[s[15]])
        for i in range(8):
            store32le(hp + 4 * i, hw[i] ^ v[i] ^ v[i + 8])

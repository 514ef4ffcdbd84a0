"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--reps N] [--msg-len BYTES]

Prints per-kernel permutation calls per second for each backend, the
speedup, and whole-hash throughput for every implemented function.
"""

import argparse
import timeit

from lwhbench import _kernels, hashkit

KERNEL_CASES = [
    ("ascon_permute", 40, (12,)),
    ("gimli_permute", 48, ()),
    ("xoodoo_permute", 48, (12,)),
    ("photon256_permute", 32, ()),
    ("sparkle_permute", 48, (6, 11)),
]


def time_kernel(mod, name, size, extra, reps):
    fn = getattr(mod, name)
    state = bytearray(range(size))
    t = min(timeit.repeat(lambda: fn(state, *extra), number=reps, repeat=3))
    return reps / t


def time_blake2s(mod, reps):
    h = bytearray(32)
    block = bytes(64)
    t = min(timeit.repeat(lambda: mod.blake2s_compress(h, block, 64, False), number=reps, repeat=3))
    return reps / t


def time_hash(spec_id, msg, reps):
    t = min(timeit.repeat(lambda: hashkit.hash(spec_id, msg), number=reps, repeat=3))
    return reps * len(msg) / t / 1e6


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=2000)
    ap.add_argument("--msg-len", type=int, default=1024)
    args = ap.parse_args()

    try:
        compiled = _kernels.backend("cython")
    except ImportError:
        compiled = None
        print("compiled kernels not built; timing the pure-Python backend only")
    pure = _kernels.backend("python")

    print(f"{'kernel':20s} {'python/s':>12s} {'cython/s':>12s} {'speedup':>8s}")
    rows = [(name, lambda m, n=name, s=size, e=extra: time_kernel(m, n, s, e, args.reps))
            for name, size, extra in KERNEL_CASES]
    rows.append(("blake2s_compress", lambda m: time_blake2s(m, args.reps)))
    for name, bench in rows:
        py = bench(pure)
        if compiled is None:
            print(f"{name:20s} {py:12.0f}")
            continue
        cy = bench(compiled)
        print(f"{name:20s} {py:12.0f} {cy:12.0f} {cy / py:7.1f}x")

    msg = bytes(i & 0xFF for i in range(args.msg_len))
    print(f"\nwhole-hash throughput, active backend ({_kernels.BACKEND}), {args.msg_len}-byte message")
    for spec_id in hashkit.implemented_ids():
        print(f"{spec_id:15s} {time_hash(spec_id, msg, max(1, args.reps // 100)):8.3f} MB/s")


if __name__ == "__main__":
    main()

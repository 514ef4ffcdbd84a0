"""Hot kernels: compiled extension when available, pure Python otherwise.

Set ``LWHBENCH_PURE=1`` to force the pure-Python fallback.
"""

import os

from . import _pure

BACKEND = "python"
_impl = _pure

if os.environ.get("LWHBENCH_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

ascon_permute = _impl.ascon_permute
gimli_permute = _impl.gimli_permute
xoodoo_permute = _impl.xoodoo_permute
photon256_permute = _impl.photon256_permute
sparkle_permute = _impl.sparkle_permute
blake2s_compress = _impl.blake2s_compress

KERNEL_NAMES = (
    "ascon_permute",
    "gimli_permute",
    "xoodoo_permute",
    "photon256_permute",
    "sparkle_permute",
    "blake2s_compress",
)


def backend(name):
    """Return the kernel module for ``"python"`` or ``"cython"``."""
    if name == "python":
        return _pure
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")

"""Hash construction framework, the implemented hash subset and the registry."""

from .. import _kernels
from ..errors import InvalidArgument, NotImplementedSpec
from .ascon import AsconHash
from .blake2s import Blake2s
from .construction import Digest, HashInstance, Phase, pad_10star
from .esch import Esch256
from .gimli import GimliHash
from .photon_beetle import PhotonBeetleHash
from .registry import (HashSpec, Structure, canonical_id, get_spec,
                       implemented_ids, registry_list)
from .toy import toy8_permute
from .xoodyak import XoodyakHash

__all__ = [
    "Digest", "HashInstance", "HashSpec", "Phase", "Structure",
    "canonical_id", "get_spec", "hash", "hash_streaming", "implemented_ids",
    "new", "pad_10star", "permute", "registry_list", "toy8_permute",
]

_CLASSES = {
    cls.spec_id: cls
    for cls in (AsconHash, GimliHash, XoodyakHash, PhotonBeetleHash, Esch256, Blake2s)
}

_PERMUTATIONS = {
    "ascon": lambda st: _kernels.ascon_permute(st, 12),
    "gimli": _kernels.gimli_permute,
    "xoodyak": lambda st: _kernels.xoodoo_permute(st, 12),
    "photon-beetle": _kernels.photon256_permute,
    "esch256": lambda st: _kernels.sparkle_permute(st, 6, 11),
}


def _implemented_spec(spec_id):
    spec = get_spec(spec_id)
    if not spec.implemented:
        raise NotImplementedSpec(
            f"{spec.name} is registry-only; implemented: {', '.join(implemented_ids())}"
        )
    return spec


def new(spec_id, data=b""):
    """Fresh streaming instance for ``spec_id`` (hashlib-style update/digest)."""
    spec = _implemented_spec(spec_id)
    return _CLASSES[spec.id](data)


def hash(spec_id, message):
    return new(spec_id, message).finalize()


def hash_streaming(spec_id, chunks):
    h = new(spec_id)
    for chunk in chunks:
        h.update(chunk)
    return h.finalize()


def permute(spec_id, state):
    """Apply the hash's permutation to a copy of ``state`` and return it."""
    spec = _implemented_spec(spec_id)
    fn = _PERMUTATIONS.get(spec.id)
    if fn is None:
        raise NotImplementedSpec(f"{spec.name} is built on a compression function, not a permutation")
    if len(state) != spec.state_bytes:
        raise InvalidArgument(
            f"{spec.name} state is {spec.state_bytes} bytes, got {len(state)}"
        )
    out = bytearray(state)
    fn(out)
    return bytes(out)

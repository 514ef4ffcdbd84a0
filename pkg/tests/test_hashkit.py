import hashlib

import pytest
from hypothesis import given, settings, strategies as st

from lwhbench import hashkit
from lwhbench.errors import InvalidArgument, NotImplementedSpec, ParseError, StateError
from lwhbench.hashkit import Phase, Structure, kat, pad_10star
from lwhbench.hashkit.gimli import GimliHash

IMPLEMENTED = hashkit.implemented_ids()


def test_registry_has_24_unique_entries():
    specs = hashkit.registry_list()
    assert len(specs) == 24
    assert len({s.id for s in specs}) == 24


def test_registry_implemented_subset():
    assert set(IMPLEMENTED) == {"ascon", "gimli", "xoodyak", "photon-beetle", "esch256", "blake2s"}


@pytest.mark.parametrize("spec", hashkit.registry_list(), ids=lambda s: s.id)
def test_registry_entry_consistency(spec):
    assert spec.rate_bits > 0
    assert spec.digest_bits == 256
    if spec.capacity_applicable:
        assert spec.structure.sponge_family
        if spec.id == "subterranean":
            # 257-bit state: one bit beyond the 32 + 224 split
            assert spec.state_bits == spec.rate_bits + spec.capacity_bits + 1
        else:
            assert spec.rate_bits + spec.capacity_bits == spec.state_bits
    else:
        assert spec.structure in (Structure.MERKLE_DAMGARD, Structure.HAIFA, Structure.BINARY_TREE)
        assert spec.capacity_bits == 0


@pytest.mark.parametrize("spec_id,rate,cap,state", [
    ("ascon", 64, 256, 320),
    ("gimli", 128, 256, 384),
    ("photon-beetle", 32, 224, 256),
    ("esch256", 128, 256, 384),
    ("gage", 8, 224, 232),
])
def test_registry_table_values(spec_id, rate, cap, state):
    s = hashkit.get_spec(spec_id)
    assert (s.rate_bits, s.capacity_bits, s.state_bits) == (rate, cap, state)


def test_registry_round_labels():
    assert hashkit.get_spec("clx").rounds is None
    assert hashkit.get_spec("clx").rounds_label == "var"
    assert hashkit.get_spec("ascon").rounds_label == "12/8"
    assert hashkit.get_spec("subterranean").absorb_rate_bits == 9


def test_aliases_and_unknown_ids():
    assert hashkit.get_spec("ESCH").id == "esch256"
    assert hashkit.get_spec(" Photon-256 ").id == "photon"
    with pytest.raises(NotImplementedSpec, match="implemented: "):
        hashkit.get_spec("md5")
    with pytest.raises(NotImplementedSpec):
        hashkit.hash("knot", b"x")


def test_pad_10star():
    assert pad_10star(b"\xaa", 4) == b"\xaa\x01\x00\x00"
    assert pad_10star(b"", 2, domain=0x80) == b"\x80\x00"
    with pytest.raises(InvalidArgument):
        pad_10star(b"abcd", 4)


@pytest.mark.parametrize("spec_id", IMPLEMENTED)
def test_digest_length_and_determinism(spec_id):
    d1 = hashkit.hash(spec_id, b"lightweight")
    d2 = hashkit.hash(spec_id, b"lightweight")
    assert len(d1) == 32 and d1 == d2
    assert d1.spec_id == spec_id
    assert hashkit.hash(spec_id, b"lightweighu") != d1


@pytest.mark.parametrize("spec_id", IMPLEMENTED)
def test_phases_and_update_after_finalize(spec_id):
    h = hashkit.new(spec_id)
    assert h.phase is Phase.ABSORBING
    h.update(b"abc")
    first = h.digest()
    assert h.phase is Phase.FINALIZED
    assert h.digest() == first
    with pytest.raises(StateError):
        h.update(b"more")


@pytest.mark.parametrize("spec_id", IMPLEMENTED)
def test_copy_is_independent(spec_id):
    h = hashkit.new(spec_id, b"x" * 40)
    c = h.copy()
    c.update(b"tail")
    assert h.digest() == hashkit.hash(spec_id, b"x" * 40).bytes
    assert c.digest() == hashkit.hash(spec_id, b"x" * 40 + b"tail").bytes


@pytest.mark.parametrize("spec_id", IMPLEMENTED)
@settings(max_examples=25, deadline=None)
@given(data=st.binary(max_size=300), cuts=st.lists(st.integers(0, 300), max_size=6))
def test_chunking_invariance(spec_id, data, cuts):
    points = sorted({min(c, len(data)) for c in cuts})
    chunks, prev = [], 0
    for p in points + [len(data)]:
        chunks.append(data[prev:p])
        prev = p
    assert hashkit.hash_streaming(spec_id, chunks) == hashkit.hash(spec_id, data)


@pytest.mark.parametrize("msg", [b"", b"abc", bytes(range(64)), bytes(range(65)), b"\xff" * 1000])
def test_blake2s_matches_hashlib(msg):
    assert hashkit.hash("blake2s", msg).bytes == hashlib.blake2s(msg).digest()


def test_blake2s_rfc7693_abc():
    assert hashkit.hash("blake2s", b"abc").hex() == (
        "508c5e8c327c14e2e1a72ba34eeb452f37458b209ed63a294d999b4c86675982"
    )


class GimliChes(GimliHash):
    """Original CHES 2017 Gimli-Hash padding: 0x1f after the data, 0x80 at rate end."""
    pad_byte = 0x1F
    final_marker = (15, 0x80)


@pytest.mark.parametrize("msg,md", [
    (b"", "b0634b2c0b082aedc5c0a2fe4ee3adcfc989ec05de6f00addb04b3aaac271f67"),
    (b"There's plenty for the both of us, may the best Dwarf win.",
     "4afb3ff784c7ad6943d49cf5da79facfa7c4434e1ce44f5dd4b28f91a84d22c8"),
])
def test_gimli_ches_padding_variant(msg, md):
    # independent published vectors exercise the shared absorb/squeeze path
    assert GimliChes(msg).hexdigest() == md


@pytest.mark.parametrize("spec_id", ["ascon", "gimli", "xoodyak", "photon-beetle", "esch256"])
def test_permute_copies_and_changes_state(spec_id):
    size = hashkit.get_spec(spec_id).state_bytes
    zero = bytes(size)
    out = hashkit.permute(spec_id, zero)
    assert len(out) == size and out != zero
    with pytest.raises(InvalidArgument):
        hashkit.permute(spec_id, bytes(size + 1))


def test_permute_blake2s_is_not_a_permutation():
    with pytest.raises(NotImplementedSpec):
        hashkit.permute("blake2s", bytes(32))


def test_esch_full_final_block_differs_from_padded():
    # a 16-byte message takes the full-block constant, a 15-byte one the padded constant
    a = hashkit.hash("esch256", bytes(16))
    b = hashkit.hash("esch256", bytes(15) + b"\x80")
    assert a != b


def test_photon_beetle_short_messages_distinct():
    digests = {hashkit.hash("photon-beetle", bytes(range(n))).bytes for n in range(40)}
    assert len(digests) == 40


# KAT parsing


def test_parse_kat_roundtrip():
    vecs = [kat.KatVector(1, b"", bytes(32)), kat.KatVector(2, b"\x00\x01", bytes(range(32)))]
    back = kat.parse_kat(kat.format_kat(vecs))
    assert [(v.count, v.msg, v.md) for v in back] == [(v.count, v.msg, v.md) for v in vecs]


@pytest.mark.parametrize("text,match", [
    ("", "no KAT vectors"),
    ("Count = 1\nMsg = \n", "missing MD"),
    ("Count = 1\nMsg = zz\nMD = 00\n", "bad value"),
    ("Count = 1\nFoo = 00\n", "unknown field"),
    ("Count 1\n", "key = value"),
])
def test_parse_kat_errors(text, match):
    with pytest.raises(ParseError, match=match):
        kat.parse_kat(text)


def test_check_kat_reports_corrupted_vector():
    vecs = [kat.KatVector(i + 1, bytes(range(i)), hashkit.hash("ascon", bytes(range(i))).bytes)
            for i in range(5)]
    bad = kat.KatVector(3, vecs[2].msg, bytes(32))
    vecs[2] = bad
    assert kat.check_kat("ascon", vecs) == [bad]

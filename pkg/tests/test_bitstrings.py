import pytest
from hypothesis import given
from hypothesis import strategies as st

from kcagree.bitstrings import (
    all_bitstrings_upto,
    bits_to_packed,
    decode_pair,
    encode_pair,
    int_from_bits,
    packed_to_bits,
    pad_pair,
    pair_length,
)
from kcagree.errors import MalformedPairCode, PadTooSmall

from oracles import oracle_decode, oracle_encode, oracle_pad

bits_st = st.text(alphabet="01", max_size=24)


def test_encode_empty_pair():
    pc = encode_pair("", "")
    assert pc.encoded == "1"
    assert len(pc.encoded) == 1


def test_encode_known_example():
    pc = encode_pair("01", "1")
    assert pc.encoded == "000111"
    assert len(pc.encoded) == 6


def test_decode_known_examples():
    assert decode_pair("1") == ("", "")
    assert decode_pair("000111") == ("01", "1")


def test_decode_rejects_unterminated():
    with pytest.raises(MalformedPairCode):
        decode_pair("00")
    with pytest.raises(MalformedPairCode):
        decode_pair("")
    with pytest.raises(MalformedPairCode):
        decode_pair("0")


def test_roundtrip_exhaustive_small():
    for pi in all_bitstrings_upto(4):
        for x in all_bitstrings_upto(4):
            pc = encode_pair(pi, x)
            assert len(pc.encoded) == 2 * len(pi) + 1 + len(x)
            assert decode_pair(pc.encoded) == (pi, x)
            assert oracle_decode(pc.encoded) == (pi, x)
            assert oracle_encode(pi, x) == pc.encoded


@given(bits_st, bits_st)
def test_roundtrip_property(pi, x):
    pc = encode_pair(pi, x)
    assert decode_pair(pc.encoded) == (pi, x)
    assert len(pc.encoded) == pair_length(pi, x)


def test_pad_known_example():
    pc = pad_pair("0", "1", 8)
    assert (pc.pi, pc.x) == ("010", "1")
    assert len(pc.encoded) == 8


def test_pad_minimal_room():
    # ell = |(pi,z)| + 2 forces k=0 and no extension
    pc = pad_pair("0", "1", 6)
    assert (pc.pi, pc.x) == ("01", "1")


def test_pad_too_small():
    with pytest.raises(PadTooSmall):
        pad_pair("0", "1", 5)
    with pytest.raises(PadTooSmall):
        pad_pair("", "", 2)


@given(bits_st, bits_st, st.integers(min_value=0, max_value=90))
def test_pad_matches_bruteforce_oracle(pi, z, ell):
    expected = oracle_pad(pi, z, ell)
    if expected is None:
        with pytest.raises(PadTooSmall):
            pad_pair(pi, z, ell)
        return
    pc = pad_pair(pi, z, ell)
    assert (pc.pi, pc.x) == expected
    assert len(pc.encoded) == ell
    # structure: pi is a proper prefix followed by '1'; z a prefix of z'
    assert pc.pi.startswith(pi) and pc.pi[len(pi)] == "1"
    assert pc.x.startswith(z) and len(pc.x) - len(z) <= 1


def test_pad_deterministic():
    assert pad_pair("10", "011", 20) == pad_pair("10", "011", 20)


@given(bits_st)
def test_packed_roundtrip(s):
    assert packed_to_bits(bits_to_packed(s)) == s


def test_packed_layout():
    raw = bits_to_packed("10000001")
    assert raw[:4] == (8).to_bytes(4, "little")
    assert raw[4:] == bytes([0b10000001])
    # MSB-first packing with zero fill
    assert bits_to_packed("1")[4:] == bytes([0b10000000])


def test_int_from_bits_empty():
    assert int_from_bits("") == 0

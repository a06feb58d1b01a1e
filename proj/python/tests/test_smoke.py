# Copyright 2026 The Ariadne Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import ariadne


def test_constants():
    assert ariadne.KEY_LEN == 32
    assert ariadne.MAC_LEN == 16
    assert ariadne.PATTERN_LEN == 3
    assert ariadne.ADDR_LEN == 16
    assert ariadne.ELEMENT_LEN == 36
    assert ariadne.MAX_HOPS == 5
    assert ariadne.VECTOR_LEN == 180
    assert ariadne.FRAME_LEN == 1500
    assert ariadne.DATA_PAYLOAD_LEN == 1272


def test_derive_temp_keys_is_deterministic():
    master = bytes(range(32))
    enc1, mac1 = ariadne.derive_temp_keys(master, 7)
    enc2, mac2 = ariadne.derive_temp_keys(master, 7)
    assert (enc1, mac1) == (enc2, mac2)
    assert len(enc1) == 32 and len(mac1) == 32
    enc3, _ = ariadne.derive_temp_keys(master, 8)
    assert enc3 != enc1


def test_keystream_prefix_property():
    enc, _ = ariadne.derive_temp_keys(b"\x01" * 32, 0)
    assert ariadne.keystream(enc, 2048)[:64] == ariadne.keystream(enc, 64)


def test_mac_detects_modification():
    _, mac_key = ariadne.derive_temp_keys(b"\x02" * 32, 1)
    tag = ariadne.mac(mac_key, b"hello")
    assert len(tag) == 16
    assert tag != ariadne.mac(mac_key, b"hellp")


def test_encrypt_pattern_matches_keystream():
    enc, _ = ariadne.derive_temp_keys(b"\x03" * 32, 5)
    ks = ariadne.keystream(enc, 3)
    pattern = b"ARI"
    got = ariadne.encrypt_pattern(enc, pattern)
    assert got == bytes(a ^ b for a, b in zip(pattern, ks))


def test_bad_lengths_raise():
    with pytest.raises(ValueError):
        ariadne.derive_temp_keys(b"short", 0)
    with pytest.raises(ValueError):
        ariadne.encrypt_pattern(b"\x00" * 32, b"toolong")


def test_address_for_name_is_stable():
    a = ariadne.address_for_name("alice")
    assert a == ariadne.address_for_name("alice")
    assert a != ariadne.address_for_name("bob")
    assert len(a) == 16


def test_end_to_end_provisioned_path():
    net = ariadne.Network(seed=1, pattern=b"ARI", window=16)
    path = []
    for name in ("n1", "n2", "n3"):
        addr = ariadne.address_for_name(name)
        net.add_node(addr)
        master = bytes([len(path)] * 32)
        net.provision(addr, master)
        path.append((addr, master))
    for t in range(8):
        payload = b"payload %d" % t
        assert net.send(path, payload, t) == payload
    assert net.tap_count() == 8 * 3


def test_setup_then_data():
    net = ariadne.Network(seed=2, pattern=b"ARI", window=32)
    addrs = [ariadne.address_for_name(n) for n in ("a", "b", "c", "d")]
    for addr in addrs:
        net.add_node(addr)
    masters = net.setup(addrs)
    assert len(masters) == 4
    path = list(zip(addrs, masters))
    assert net.send(path, b"negotiated", 0) == b"negotiated"


def test_replay_is_dropped():
    net = ariadne.Network(seed=3, pattern=b"ARI", window=8)
    addr = ariadne.address_for_name("solo")
    net.add_node(addr)
    master = b"\x05" * 32
    net.provision(addr, master)
    path = [(addr, master)]
    assert net.send(path, b"x", 4) == b"x"
    assert net.send(path, b"x", 4) is None


def test_golden_vectors_nonempty():
    text = ariadne.golden_test_vectors()
    assert "delta(" in text and "mu(" in text

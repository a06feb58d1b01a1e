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

"""Python facade over the Ariadne protocol core."""

try:
    from ariadne._ariadne import (  # noqa: F401
        ADDR_LEN,
        DATA_PAYLOAD_LEN,
        DEFAULT_WINDOW,
        ELEMENT_LEN,
        FRAME_LEN,
        KEY_LEN,
        MAC_LEN,
        MAX_HOPS,
        PATTERN_LEN,
        SETUP_PAYLOAD_LEN,
        VECTOR_LEN,
        Network,
        address_for_name,
        derive_temp_keys,
        encrypt_pattern,
        golden_test_vectors,
        keystream,
        mac,
    )
except ImportError:
    # Uninstalled tree: the extension is built out-of-package by CMake.
    from _ariadne import (  # noqa: F401
        ADDR_LEN,
        DATA_PAYLOAD_LEN,
        DEFAULT_WINDOW,
        ELEMENT_LEN,
        FRAME_LEN,
        KEY_LEN,
        MAC_LEN,
        MAX_HOPS,
        PATTERN_LEN,
        SETUP_PAYLOAD_LEN,
        VECTOR_LEN,
        Network,
        address_for_name,
        derive_temp_keys,
        encrypt_pattern,
        golden_test_vectors,
        keystream,
        mac,
    )

__all__ = [
    "ADDR_LEN",
    "DATA_PAYLOAD_LEN",
    "DEFAULT_WINDOW",
    "ELEMENT_LEN",
    "FRAME_LEN",
    "KEY_LEN",
    "MAC_LEN",
    "MAX_HOPS",
    "PATTERN_LEN",
    "SETUP_PAYLOAD_LEN",
    "VECTOR_LEN",
    "Network",
    "address_for_name",
    "derive_temp_keys",
    "encrypt_pattern",
    "golden_test_vectors",
    "keystream",
    "mac",
]

// Copyright 2026 The Ariadne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ariadne/vectors.hpp"

#include <sstream>

#include "ariadne/crypto.hpp"

namespace ariadne {

namespace {

std::string hex(std::span<const std::uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * data.size());
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace

std::string golden_test_vectors() {
  std::ostringstream os;
  Rng rng(0x41524941444e45ull);  // fixed vector seed

  for (int i = 0; i < 4; ++i) {
    MasterKey k;
    rng.fill(k.bytes);
    std::uint64_t t = i * 1000003;
    TempKeyPair keys = derive_temp_keys(k, t);
    os << "delta(" << hex(k.bytes) << "," << t << ") -> " << hex(keys.enc)
       << hex(keys.mac) << "\n";

    auto stream = keystream(keys.enc, 64);
    os << "rho(" << hex(keys.enc) << ",64) -> " << hex(stream) << "\n";

    std::array<std::uint8_t, 48> msg;
    rng.fill(msg);
    MacTag tag = mac(keys.mac, msg);
    os << "mu(" << hex(keys.mac) << "," << hex(msg) << ") -> "
       << hex(tag.bytes) << "\n";

    Pattern pi{{0x41, 0x52, 0x49}};
    auto enc_pi = encrypt_pattern(keys.enc, pi);
    os << "pattern(" << hex(keys.enc) << "," << hex(pi.bytes) << ") -> "
       << hex(enc_pi) << "\n";
  }
  return os.str();
}

}  // namespace ariadne

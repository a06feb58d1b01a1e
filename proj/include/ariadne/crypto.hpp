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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ariadne/params.hpp"

namespace ariadne {

struct CryptoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 32-byte opaque long-lived secret shared between a source and one relay.
/// Never appears on the wire.
struct MasterKey {
  std::array<std::uint8_t, kKeyLen> bytes{};

  bool operator==(const MasterKey&) const = default;
};

/// Per-packet (enc, mac) key pair derived from (MasterKey, t).
struct TempKeyPair {
  std::array<std::uint8_t, kKeyLen> enc{};
  std::array<std::uint8_t, kKeyLen> mac{};
  std::uint64_t t = 0;
};

/// The deployment-wide 3-byte pattern used for encrypted key references.
struct Pattern {
  std::array<std::uint8_t, kPatternLen> bytes{};

  bool operator==(const Pattern&) const = default;
};

/// 16-byte MAC tag as carried in a routing element.
struct MacTag {
  std::array<std::uint8_t, kMacLen> bytes{};
};

/// Encoded Curve25519 point.
struct GroupElement {
  std::array<std::uint8_t, kGroupElementLen> bytes{};

  bool operator==(const GroupElement&) const = default;
};

/// Curve25519 scalar (clamped at point of use).
struct GroupScalar {
  std::array<std::uint8_t, kGroupElementLen> bytes{};
};

struct DhKeypair {
  GroupScalar sk;
  GroupElement pk;
};

/// Deterministic ChaCha20-based RNG. Seeded randomly by default; a fixed
/// seed reproduces the exact byte stream, which the simulator relies on.
class Rng {
 public:
  Rng();  // random seed
  explicit Rng(std::uint64_t seed);
  explicit Rng(const std::array<std::uint8_t, 32>& seed);

  void fill(std::span<std::uint8_t> out);
  std::uint8_t byte();
  std::uint64_t u64();
  /// Uniform draw in [0, bound), bound > 0.
  std::uint32_t uniform(std::uint32_t bound);

  /// Derives an independent child generator (for per-worker seeding).
  Rng fork();

 private:
  std::array<std::uint8_t, 32> key_;
  std::uint64_t block_ = 0;
  std::array<std::uint8_t, 64> buf_;
  std::size_t pos_ = 64;
};

/// One-time process-wide libsodium init; safe to call repeatedly.
void crypto_init();

/// (k_enc, k_mac) = delta(master, t): extract-then-expand KDF with the
/// 8-byte big-endian t and the labels "ariadne-enc" / "ariadne-mac".
TempKeyPair derive_temp_keys(const MasterKey& master, std::uint64_t t);

inline constexpr std::size_t kKeystreamCap = std::size_t{1} << 20;

/// rho(k_enc): deterministic keystream with the prefix property, so every
/// per-hop slice (pattern, element, header, packet) comes from one stream.
std::vector<std::uint8_t> keystream(
    std::span<const std::uint8_t, kKeyLen> enc_key, std::size_t len);

/// XORs keystream bytes [offset, offset + buf.size()) into buf.
void keystream_xor(std::span<const std::uint8_t, kKeyLen> enc_key,
                   std::size_t offset, std::span<std::uint8_t> buf);

/// mu(k_mac, msg): keyed hash truncated to 16 bytes.
MacTag mac(std::span<const std::uint8_t, kKeyLen> mac_key,
           std::span<const std::uint8_t> msg);

/// Constant-time tag comparison.
bool mac_equal(const MacTag& a, const MacTag& b);

/// pi XOR rho(k_enc)[0..3): the encrypted key reference.
std::array<std::uint8_t, kPatternLen> encrypt_pattern(
    std::span<const std::uint8_t, kKeyLen> enc_key, const Pattern& pi);

// --- DH group operations (setup protocol) ---

DhKeypair dh_keygen(Rng& rng);

/// g^x.
GroupElement blind_base(const GroupScalar& x);

/// Hashes an encoded group element into a master key; dh_shared is
/// key_from_element composed with scalar multiplication.
MasterKey key_from_element(const GroupElement& elem);

/// Shared-secret derivation: hash of the scalar-mult output.
/// Throws CryptoError on a low-order / identity result.
MasterKey dh_shared(const GroupElement& elem, const GroupScalar& x);

/// b = h_b(alpha, k): hash of (alpha || k) used as a blinding scalar.
GroupScalar blind_factor(const GroupElement& alpha, const MasterKey& k);

/// Group exponentiation: alpha^b.
GroupElement blind(const GroupElement& alpha, const GroupScalar& b);

}  // namespace ariadne

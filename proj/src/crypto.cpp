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

#include "ariadne/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <string_view>

namespace ariadne {

namespace {

void store_be64(std::uint64_t v, std::uint8_t out[8]) {
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(v & 0xff);
    v >>= 8;
  }
}

using Hmac = std::array<std::uint8_t, crypto_auth_hmacsha256_BYTES>;

Hmac hmac_sha256(std::span<const std::uint8_t> key,
                 std::span<const std::uint8_t> msg) {
  Hmac out;
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.data(), key.size());
  crypto_auth_hmacsha256_update(&st, msg.data(), msg.size());
  crypto_auth_hmacsha256_final(&st, out.data());
  return out;
}

// Keyed-hash PRF used by the extract-then-expand KDF.
std::array<std::uint8_t, kKeyLen> prf(std::span<const std::uint8_t> key,
                                      std::span<const std::uint8_t> msg) {
  std::array<std::uint8_t, kKeyLen> out;
  crypto_generichash(out.data(), out.size(), msg.data(), msg.size(),
                     key.data(), key.size());
  return out;
}

// HKDF-style expand step: one PRF block per 32-byte output chunk.
std::array<std::uint8_t, kKeyLen> expand_label(
    const std::array<std::uint8_t, kKeyLen>& prk, std::string_view label) {
  std::array<std::uint8_t, 16> info{};
  std::memcpy(info.data(), label.data(), label.size());
  info[label.size()] = 0x01;
  return prf(prk, std::span<const std::uint8_t>(info.data(), label.size() + 1));
}

}  // namespace

void crypto_init() {
  if (sodium_init() < 0) {
    throw CryptoError("libsodium initialization failed");
  }
}

Rng::Rng() {
  crypto_init();
  randombytes_buf(key_.data(), key_.size());
}

Rng::Rng(std::uint64_t seed) {
  crypto_init();
  key_.fill(0);
  store_be64(seed, key_.data());
  // Domain-separate from raw keys.
  Hmac h = hmac_sha256(key_, std::span<const std::uint8_t>{});
  key_ = h;
}

Rng::Rng(const std::array<std::uint8_t, 32>& seed) : key_(seed) {
  crypto_init();
}

void Rng::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buf_.size()) {
      std::uint8_t nonce[crypto_stream_chacha20_NONCEBYTES];
      store_be64(block_++, nonce);
      crypto_stream_chacha20(buf_.data(), buf_.size(), nonce, key_.data());
      pos_ = 0;
    }
    std::size_t n = std::min(out.size() - done, buf_.size() - pos_);
    std::memcpy(out.data() + done, buf_.data() + pos_, n);
    pos_ += n;
    done += n;
  }
}

std::uint8_t Rng::byte() {
  std::uint8_t b;
  fill({&b, 1});
  return b;
}

std::uint64_t Rng::u64() {
  std::uint8_t b[8];
  fill(b);
  std::uint64_t v = 0;
  for (std::uint8_t x : b) v = (v << 8) | x;
  return v;
}

std::uint32_t Rng::uniform(std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform: zero bound");
  // Rejection sampling over a 32-bit draw.
  const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
  for (;;) {
    std::uint8_t b[4];
    fill(b);
    std::uint32_t v = (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
                      (std::uint32_t{b[2]} << 8) | b[3];
    if (v < limit) return v % bound;
  }
}

Rng Rng::fork() {
  std::array<std::uint8_t, 32> child;
  fill(child);
  return Rng(child);
}

TempKeyPair derive_temp_keys(const MasterKey& master, std::uint64_t t) {
  crypto_init();
  std::uint8_t salt[8];
  store_be64(t, salt);
  // Extract: PRK = PRF(salt = t, IKM = master key).
  std::array<std::uint8_t, kKeyLen> prk = prf(std::span(salt, 8), master.bytes);
  TempKeyPair out;
  out.enc = expand_label(prk, "ariadne-enc");
  out.mac = expand_label(prk, "ariadne-mac");
  out.t = t;
  return out;
}

std::vector<std::uint8_t> keystream(
    std::span<const std::uint8_t, kKeyLen> enc_key, std::size_t len) {
  if (len > kKeystreamCap) {
    throw CryptoError("keystream length over cap");
  }
  crypto_init();
  std::vector<std::uint8_t> out(len);
  static const std::uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {0};
  crypto_stream_chacha20(out.data(), out.size(), nonce, enc_key.data());
  return out;
}

void keystream_xor(std::span<const std::uint8_t, kKeyLen> enc_key,
                   std::size_t offset, std::span<std::uint8_t> buf) {
  if (offset + buf.size() > kKeystreamCap) {
    throw CryptoError("keystream length over cap");
  }
  std::vector<std::uint8_t> stream = keystream(enc_key, offset + buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) {
    buf[i] ^= stream[offset + i];
  }
}

MacTag mac(std::span<const std::uint8_t, kKeyLen> mac_key,
           std::span<const std::uint8_t> msg) {
  crypto_init();
  MacTag tag;
  crypto_generichash(tag.bytes.data(), kMacLen, msg.data(), msg.size(),
                     mac_key.data(), mac_key.size());
  return tag;
}

bool mac_equal(const MacTag& a, const MacTag& b) {
  return sodium_memcmp(a.bytes.data(), b.bytes.data(), kMacLen) == 0;
}

std::array<std::uint8_t, kPatternLen> encrypt_pattern(
    std::span<const std::uint8_t, kKeyLen> enc_key, const Pattern& pi) {
  std::vector<std::uint8_t> stream = keystream(enc_key, kPatternLen);
  std::array<std::uint8_t, kPatternLen> out;
  for (std::size_t i = 0; i < kPatternLen; ++i) {
    out[i] = pi.bytes[i] ^ stream[i];
  }
  return out;
}

DhKeypair dh_keygen(Rng& rng) {
  DhKeypair kp;
  rng.fill(kp.sk.bytes);
  crypto_scalarmult_base(kp.pk.bytes.data(), kp.sk.bytes.data());
  return kp;
}

GroupElement blind_base(const GroupScalar& x) {
  crypto_init();
  GroupElement out;
  crypto_scalarmult_base(out.bytes.data(), x.bytes.data());
  return out;
}

MasterKey key_from_element(const GroupElement& elem) {
  crypto_init();
  MasterKey k;
  crypto_generichash(k.bytes.data(), k.bytes.size(), elem.bytes.data(),
                     elem.bytes.size(), nullptr, 0);
  return k;
}

MasterKey dh_shared(const GroupElement& elem, const GroupScalar& x) {
  crypto_init();
  GroupElement shared;
  if (crypto_scalarmult(shared.bytes.data(), x.bytes.data(),
                        elem.bytes.data()) != 0) {
    throw CryptoError("invalid or low-order group element");
  }
  MasterKey k = key_from_element(shared);
  sodium_memzero(shared.bytes.data(), shared.bytes.size());
  return k;
}

GroupScalar blind_factor(const GroupElement& alpha, const MasterKey& k) {
  crypto_init();
  std::array<std::uint8_t, kGroupElementLen + kKeyLen> input;
  std::memcpy(input.data(), alpha.bytes.data(), kGroupElementLen);
  std::memcpy(input.data() + kGroupElementLen, k.bytes.data(), kKeyLen);
  GroupScalar b;
  crypto_generichash(b.bytes.data(), b.bytes.size(), input.data(),
                     input.size(), nullptr, 0);
  sodium_memzero(input.data(), input.size());
  return b;
}

GroupElement blind(const GroupElement& alpha, const GroupScalar& b) {
  crypto_init();
  GroupElement out;
  if (crypto_scalarmult(out.bytes.data(), b.bytes.data(),
                        alpha.bytes.data()) != 0) {
    throw CryptoError("invalid or low-order group element");
  }
  return out;
}

}  // namespace ariadne

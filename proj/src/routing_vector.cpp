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

#include "ariadne/routing_vector.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace ariadne {

std::array<std::uint8_t, kElementLen> RoutingElement::serialize() const {
  std::array<std::uint8_t, kElementLen> out;
  std::size_t off = 0;
  std::memcpy(out.data() + off, pattern.bytes.data(), kPatternLen);
  off += kPatternLen;
  std::memcpy(out.data() + off, next_addr.data(), kAddrLen);
  off += kAddrLen;
  out[off++] = next_slot;
  std::memcpy(out.data() + off, mac.bytes.data(), kMacLen);
  return out;
}

RoutingElement RoutingElement::parse(
    std::span<const std::uint8_t, kElementLen> raw) {
  RoutingElement e;
  std::size_t off = 0;
  std::memcpy(e.pattern.bytes.data(), raw.data() + off, kPatternLen);
  off += kPatternLen;
  std::memcpy(e.next_addr.data(), raw.data() + off, kAddrLen);
  off += kAddrLen;
  e.next_slot = raw[off++];
  std::memcpy(e.mac.bytes.data(), raw.data() + off, kMacLen);
  return e;
}

RoutingElement RoutingElement::starred() const {
  RoutingElement e = *this;
  e.mac.bytes.fill(0);
  return e;
}

SlotAssignment sample_slot_assignment(std::size_t n_plus_1, std::size_t l_pmax,
                                      Rng& rng) {
  if (n_plus_1 < 1 || n_plus_1 > l_pmax) {
    throw RoutingError("path length exceeds routing vector capacity");
  }
  std::vector<std::uint8_t> slots(l_pmax);
  std::iota(slots.begin(), slots.end(), std::uint8_t{0});
  // Fisher-Yates with the crypto-seeded generator.
  for (std::size_t i = l_pmax - 1; i > 0; --i) {
    std::size_t j = rng.uniform(static_cast<std::uint32_t>(i + 1));
    std::swap(slots[i], slots[j]);
  }
  slots.resize(n_plus_1);
  return slots;
}

std::array<std::uint8_t, kElementLen> read_slot(const RoutingVector& vec,
                                                std::size_t index) {
  if (index >= kMaxHops) throw RoutingError("slot index out of range");
  std::array<std::uint8_t, kElementLen> out;
  std::memcpy(out.data(), vec.bytes.data() + index * kElementLen, kElementLen);
  return out;
}

void splice_slot(RoutingVector& vec, std::size_t index,
                 std::span<const std::uint8_t, kElementLen> element) {
  if (index >= kMaxHops) throw RoutingError("slot index out of range");
  std::memcpy(vec.bytes.data() + index * kElementLen, element.data(),
              kElementLen);
}

RoutingVector build_filler(const SlotAssignment& assignment,
                           std::span<const Address> hop_addrs,
                           std::span<const TempKeyPair> hop_keys,
                           const Pattern& pattern, Rng& rng) {
  const std::size_t hops = assignment.size();
  if (hops == 0 || hops > kMaxHops) {
    throw RoutingError("invalid slot assignment size");
  }
  if (hop_addrs.size() != hops || hop_keys.size() != hops) {
    throw RoutingError("assignment, addresses and keys must have equal length");
  }

  RoutingVector vec;
  rng.fill(vec.bytes);

  for (std::size_t i = 0; i < hops; ++i) {
    // Element for hop i names hop i+1; the terminal element names the
    // destination itself, pointing at its own slot.
    const bool last = (i + 1 == hops);
    RoutingElement e;
    e.pattern = pattern;
    e.next_addr = last ? hop_addrs[i] : hop_addrs[i + 1];
    e.next_slot = last ? assignment[i] : assignment[i + 1];
    splice_slot(vec, assignment[i], e.serialize());
    // rho_{i,t,Header} = keystream[U, U + L_dmax).
    keystream_xor(hop_keys[i].enc, kElementLen, vec.bytes);
  }
  return vec;
}

}  // namespace ariadne

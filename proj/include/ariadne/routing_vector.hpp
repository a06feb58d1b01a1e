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
#include <vector>

#include "ariadne/crypto.hpp"
#include "ariadne/params.hpp"

namespace ariadne {

using Address = std::array<std::uint8_t, kAddrLen>;

struct RoutingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One 36-byte slot entry: pattern | next-hop address | next-slot | MAC.
struct RoutingElement {
  Pattern pattern;
  Address next_addr{};
  std::uint8_t next_slot = 0;
  MacTag mac;

  std::array<std::uint8_t, kElementLen> serialize() const;
  static RoutingElement parse(std::span<const std::uint8_t, kElementLen> raw);

  /// The r* variant: same element with a zeroed MAC field, as substituted
  /// into the vector before MAC computation and verification.
  RoutingElement starred() const;
};

/// Fixed 180-byte vector of 5 slots. Unassigned slots stay random.
struct RoutingVector {
  std::array<std::uint8_t, kVectorLen> bytes{};
};

/// Pairwise-distinct slot indices, one per hop, in path order.
using SlotAssignment = std::vector<std::uint8_t>;

/// Uniformly random injection of n+1 hops into l_pmax slots.
SlotAssignment sample_slot_assignment(std::size_t n_plus_1, std::size_t l_pmax,
                                      Rng& rng);

std::array<std::uint8_t, kElementLen> read_slot(const RoutingVector& vec,
                                                std::size_t index);

void splice_slot(RoutingVector& vec, std::size_t index,
                 std::span<const std::uint8_t, kElementLen> element);

/// Builds the filler vector: starting from random bytes, for each hop in
/// path order write the zero-MAC element at its slot, then XOR the whole
/// vector with that hop's header keystream slice.
RoutingVector build_filler(const SlotAssignment& assignment,
                           std::span<const Address> hop_addrs,
                           std::span<const TempKeyPair> hop_keys,
                           const Pattern& pattern, Rng& rng);

}  // namespace ariadne

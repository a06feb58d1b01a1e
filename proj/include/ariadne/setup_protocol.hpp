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

#include <optional>
#include <variant>

#include "ariadne/data_protocol.hpp"

namespace ariadne {

/// One 36-byte setup slot: next-hop address | next-slot | pad | MAC.
/// No pattern field; the group element alpha identifies the key.
struct SetupRoutingElement {
  Address next_addr{};
  std::uint8_t next_slot = 0;
  std::array<std::uint8_t, 3> pad{};
  MacTag mac;

  std::array<std::uint8_t, kElementLen> serialize() const;
  static SetupRoutingElement parse(
      std::span<const std::uint8_t, kElementLen> raw);
  SetupRoutingElement starred() const;
};

struct SetupPacketBody {
  GroupElement alpha;
  RoutingVector vec;
  std::array<std::uint8_t, kSetupPayloadLen> payload{};
};

struct SetupHop {
  Address addr{};
  GroupElement pubkey;
};

/// Per-hop secrets derived by the source during key generation.
struct SetupHopSecrets {
  GroupElement alpha;   // group element this hop will receive
  MasterKey master;     // k_i, as the node will derive it
  GroupScalar blind;    // b_i = h_b(alpha_i, k_i)
  TempKeyPair keys;     // delta(k_i, 0)
};

struct SetupChain {
  GroupScalar eph_sk;  // x_t
  GroupElement eph_pk;  // y_t
  std::vector<SetupHopSecrets> hops;
};

/// Source-side NIKE chain: alpha_1 = g^x_t, alpha_{i+1} = alpha_i^{b_i},
/// k_i agreed with hop i via the accumulated blinding.
SetupChain setup_keygen(std::span<const GroupElement> pubkeys, Rng& rng);

/// Session parameters carried in the setup payload for the receiving side.
struct SetupPayload {
  Pattern pattern;
  std::uint16_t window = kDefaultWindow;
  std::array<std::uint8_t, 16> nonce{};
  std::vector<std::uint8_t> user_data;

  std::vector<std::uint8_t> serialize() const;
  static std::optional<SetupPayload> parse(std::span<const std::uint8_t> raw);
};

struct CreatedSetupPacket {
  Address first_hop{};
  CommonHeader header;
  SetupPacketBody body;
  SlotAssignment assignment;
  SetupChain chain;  // retained by the source to provision its own state
};

CreatedSetupPacket create_setup_packet(std::span<const SetupHop> path,
                                       std::span<const std::uint8_t> user_data,
                                       const Pattern& pattern,
                                       std::size_t window, Rng& rng);

struct SetupForward {
  Address next_addr{};
  CommonHeader header;
  SetupPacketBody body;
};

using SetupOutcome = std::variant<SetupForward, Deliver, Drop>;

struct SetupNodeContext {
  Address self{};
  DhKeypair keypair;
  PatternTable* table = nullptr;  // receives the negotiated data session
  Pattern pattern;                // deployment pattern for the data session
  std::size_t window = kDefaultWindow;
  Rng* rng = nullptr;
};

struct SetupResult {
  SetupOutcome outcome;
  /// Master key installed by this node on success (also registered in the
  /// node's pattern table).
  std::optional<MasterKey> installed;
  std::optional<std::uint64_t> session;
};

SetupResult process_setup_packet(SetupNodeContext& node,
                                 const CommonHeader& header,
                                 const SetupPacketBody& body);

}  // namespace ariadne

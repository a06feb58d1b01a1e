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

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ariadne/key_reference.hpp"
#include "ariadne/routing_vector.hpp"

namespace ariadne {

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 8-byte extension common header. Only the pointer is protocol state;
/// reserved bytes are re-randomized at every hop.
struct CommonHeader {
  std::uint8_t next_header = 59;  // no next header
  std::uint8_t hdr_ext_len = 0;
  std::uint8_t routing_type = 0;  // 1 = data, 2 = setup
  std::uint8_t segments_left = 0;
  std::uint8_t pointer = 0;
  std::array<std::uint8_t, 3> reserved{};
};

/// X = routing vector | padded payload; the MACed, layer-encrypted region.
struct AriadnePacketBody {
  RoutingVector vec;
  std::array<std::uint8_t, kDataPayloadLen> payload{};
};

struct PathHop {
  Address addr{};
  MasterKey key;
};

enum class DropReason { bad_pattern, bad_mac, replay, malformed };

struct Forward {
  Address next_addr{};
  CommonHeader header;
  AriadnePacketBody body;
};

struct Deliver {
  std::vector<std::uint8_t> payload;
};

struct Drop {
  DropReason reason;
};

using ProcessOutcome = std::variant<Forward, Deliver, Drop>;

const char* drop_reason_name(DropReason reason);

/// 2-byte big-endian length | data | random fill, to a fixed total size.
std::vector<std::uint8_t> pad_payload(std::span<const std::uint8_t> data,
                                      std::size_t padded_len, Rng& rng);

/// Inverse of pad_payload; empty optional when the declared length is
/// inconsistent with the buffer.
std::optional<std::vector<std::uint8_t>> unpad_payload(
    std::span<const std::uint8_t> padded);

struct CreatedPacket {
  Address first_hop{};
  CommonHeader header;
  AriadnePacketBody body;
  SlotAssignment assignment;  // kept for tests and transcripts
};

/// Source-side packet construction for packet counter t.
CreatedPacket create_packet(std::span<const PathHop> path, std::uint64_t t,
                            const Pattern& pattern,
                            std::span<const std::uint8_t> payload, Rng& rng);

struct NodeContext {
  Address self{};
  PatternTable* table = nullptr;
  Rng* rng = nullptr;  // for re-randomized header bytes

  /// Filled by process_packet when a table entry matched (diagnostics).
  struct MatchInfo {
    std::uint64_t session = 0;
    std::uint64_t t = 0;
    bool valid = false;
  } last_match;
};

/// Relay/destination processing of one data packet.
ProcessOutcome process_packet(NodeContext& node, const CommonHeader& header,
                              const AriadnePacketBody& body);

}  // namespace ariadne

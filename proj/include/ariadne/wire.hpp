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

#include <variant>

#include "ariadne/setup_protocol.hpp"

namespace ariadne {

struct WireError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PacketKind : std::uint8_t { data = 1, setup = 2 };

using Frame = std::array<std::uint8_t, kFrameLen>;

/// IPv6 frame: 40-byte header (next header 253), extension header
/// (8-byte common header [+ 32-byte group element] + 180-byte vector),
/// payload padded so every frame is exactly 1500 bytes.
Frame encode(const Address& src, const Address& dst, const CommonHeader& header,
             const AriadnePacketBody& body);

Frame encode(const Address& src, const Address& dst, const CommonHeader& header,
             const SetupPacketBody& body);

struct DecodedFrame {
  PacketKind kind;
  Address src{};
  Address dst{};
  CommonHeader header;
  std::variant<AriadnePacketBody, SetupPacketBody> body;
};

/// Throws WireError on wrong length, next header, or routing type.
DecodedFrame decode(std::span<const std::uint8_t> raw);

}  // namespace ariadne

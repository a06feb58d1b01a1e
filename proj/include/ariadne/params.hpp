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

#include <cstddef>
#include <cstdint>

namespace ariadne {

// Deployment-wide sizing. All nodes of a deployment must agree on these.
inline constexpr std::size_t kKeyLen = 32;      // symmetric key length
inline constexpr std::size_t kMacLen = 16;      // wire MAC tag length
inline constexpr std::size_t kPatternLen = 3;   // shared pattern length
inline constexpr std::size_t kAddrLen = 16;     // IPv6-sized node address

// One routing element: pattern | next-hop address | slot pointer | MAC.
inline constexpr std::size_t kElementLen =
    kPatternLen + kAddrLen + 1 + kMacLen;  // 36

inline constexpr std::size_t kMaxHops = 5;  // l_pmax
inline constexpr std::size_t kVectorLen = kMaxHops * kElementLen;  // 180

// On-wire frame layout: IPv6 header + extension header + padded payload.
inline constexpr std::size_t kFrameLen = 1500;
inline constexpr std::size_t kIpv6HeaderLen = 40;
inline constexpr std::size_t kCommonHeaderLen = 8;
inline constexpr std::size_t kGroupElementLen = 32;

inline constexpr std::size_t kDataExtLen =
    kCommonHeaderLen + kVectorLen;  // 188
inline constexpr std::size_t kSetupExtLen =
    kCommonHeaderLen + kGroupElementLen + kVectorLen;  // 220

inline constexpr std::size_t kDataPayloadLen =
    kFrameLen - kIpv6HeaderLen - kDataExtLen;  // 1272
inline constexpr std::size_t kSetupPayloadLen =
    kFrameLen - kIpv6HeaderLen - kSetupExtLen;  // 1240

// X = routing vector | padded payload, the MACed and layer-encrypted region.
inline constexpr std::size_t kDataBodyLen = kVectorLen + kDataPayloadLen;
inline constexpr std::size_t kSetupBodyLen = kVectorLen + kSetupPayloadLen;

// IPv6 next-header value for the experimental routing extension.
inline constexpr std::uint8_t kNextHeaderExperimental = 253;

inline constexpr std::size_t kDefaultWindow = 32;
inline constexpr std::size_t kMaxWindow = 1024;

}  // namespace ariadne

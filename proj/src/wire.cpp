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

#include "ariadne/wire.hpp"

#include <cstring>

namespace ariadne {

namespace {

constexpr std::size_t kIpPayloadLen = kFrameLen - kIpv6HeaderLen;  // 1460

void write_ipv6_header(Frame& f, const Address& src, const Address& dst) {
  f[0] = 0x60;  // version 6, traffic class / flow label zero
  f[1] = f[2] = f[3] = 0;
  f[4] = static_cast<std::uint8_t>(kIpPayloadLen >> 8);
  f[5] = static_cast<std::uint8_t>(kIpPayloadLen & 0xff);
  f[6] = kNextHeaderExperimental;
  f[7] = 64;  // hop limit
  std::memcpy(f.data() + 8, src.data(), kAddrLen);
  std::memcpy(f.data() + 24, dst.data(), kAddrLen);
}

void write_common_header(Frame& f, std::size_t off, const CommonHeader& h) {
  f[off + 0] = h.next_header;
  f[off + 1] = h.hdr_ext_len;
  f[off + 2] = h.routing_type;
  f[off + 3] = h.segments_left;
  f[off + 4] = h.pointer;
  std::memcpy(f.data() + off + 5, h.reserved.data(), 3);
}

CommonHeader read_common_header(std::span<const std::uint8_t> raw,
                                std::size_t off) {
  CommonHeader h;
  h.next_header = raw[off + 0];
  h.hdr_ext_len = raw[off + 1];
  h.routing_type = raw[off + 2];
  h.segments_left = raw[off + 3];
  h.pointer = raw[off + 4];
  std::memcpy(h.reserved.data(), raw.data() + off + 5, 3);
  return h;
}

}  // namespace

Frame encode(const Address& src, const Address& dst, const CommonHeader& header,
             const AriadnePacketBody& body) {
  Frame f{};
  write_ipv6_header(f, src, dst);
  write_common_header(f, kIpv6HeaderLen, header);
  std::size_t off = kIpv6HeaderLen + kCommonHeaderLen;
  std::memcpy(f.data() + off, body.vec.bytes.data(), kVectorLen);
  off += kVectorLen;
  std::memcpy(f.data() + off, body.payload.data(), kDataPayloadLen);
  return f;
}

Frame encode(const Address& src, const Address& dst, const CommonHeader& header,
             const SetupPacketBody& body) {
  Frame f{};
  write_ipv6_header(f, src, dst);
  write_common_header(f, kIpv6HeaderLen, header);
  std::size_t off = kIpv6HeaderLen + kCommonHeaderLen;
  std::memcpy(f.data() + off, body.alpha.bytes.data(), kGroupElementLen);
  off += kGroupElementLen;
  std::memcpy(f.data() + off, body.vec.bytes.data(), kVectorLen);
  off += kVectorLen;
  std::memcpy(f.data() + off, body.payload.data(), kSetupPayloadLen);
  return f;
}

DecodedFrame decode(std::span<const std::uint8_t> raw) {
  if (raw.size() != kFrameLen) {
    throw WireError("frame must be exactly 1500 bytes");
  }
  if ((raw[0] >> 4) != 6) {
    throw WireError("not an IPv6 frame");
  }
  if (raw[6] != kNextHeaderExperimental) {
    throw WireError("unexpected next-header value");
  }
  if (((std::size_t{raw[4]} << 8) | raw[5]) != kIpPayloadLen) {
    throw WireError("bad IPv6 payload length");
  }
  DecodedFrame out;
  std::memcpy(out.src.data(), raw.data() + 8, kAddrLen);
  std::memcpy(out.dst.data(), raw.data() + 24, kAddrLen);
  out.header = read_common_header(raw, kIpv6HeaderLen);

  std::size_t off = kIpv6HeaderLen + kCommonHeaderLen;
  switch (out.header.routing_type) {
    case 1: {
      if (out.header.hdr_ext_len != (kDataExtLen - 8) / 4) {
        throw WireError("bad extension length for a data packet");
      }
      out.kind = PacketKind::data;
      AriadnePacketBody body;
      std::memcpy(body.vec.bytes.data(), raw.data() + off, kVectorLen);
      off += kVectorLen;
      std::memcpy(body.payload.data(), raw.data() + off, kDataPayloadLen);
      out.body = body;
      break;
    }
    case 2: {
      if (out.header.hdr_ext_len != (kSetupExtLen - 8) / 4) {
        throw WireError("bad extension length for a setup packet");
      }
      out.kind = PacketKind::setup;
      SetupPacketBody body;
      std::memcpy(body.alpha.bytes.data(), raw.data() + off, kGroupElementLen);
      off += kGroupElementLen;
      std::memcpy(body.vec.bytes.data(), raw.data() + off, kVectorLen);
      off += kVectorLen;
      std::memcpy(body.payload.data(), raw.data() + off, kSetupPayloadLen);
      out.body = std::move(body);
      break;
    }
    default:
      throw WireError("unknown routing type");
  }
  return out;
}

}  // namespace ariadne

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

#include "ariadne/data_protocol.hpp"

#include <cstring>

namespace ariadne {

const char* drop_reason_name(DropReason reason) {
  switch (reason) {
    case DropReason::bad_pattern:
      return "bad-pattern";
    case DropReason::bad_mac:
      return "bad-mac";
    case DropReason::replay:
      return "replay";
    case DropReason::malformed:
      return "malformed";
  }
  return "unknown";
}

std::vector<std::uint8_t> pad_payload(std::span<const std::uint8_t> data,
                                      std::size_t padded_len, Rng& rng) {
  if (data.size() > padded_len - 2) {
    throw ProtocolError("payload too long for fixed packet size");
  }
  std::vector<std::uint8_t> out(padded_len);
  out[0] = static_cast<std::uint8_t>(data.size() >> 8);
  out[1] = static_cast<std::uint8_t>(data.size() & 0xff);
  std::memcpy(out.data() + 2, data.data(), data.size());
  rng.fill(std::span<std::uint8_t>(out).subspan(2 + data.size()));
  return out;
}

std::optional<std::vector<std::uint8_t>> unpad_payload(
    std::span<const std::uint8_t> padded) {
  if (padded.size() < 2) return std::nullopt;
  std::size_t len = (std::size_t{padded[0]} << 8) | padded[1];
  if (len > padded.size() - 2) return std::nullopt;
  return std::vector<std::uint8_t>(padded.begin() + 2,
                                   padded.begin() + 2 + len);
}

namespace {

CommonHeader make_data_header(std::uint8_t pointer, Rng& rng) {
  CommonHeader h;
  h.next_header = 59;
  h.hdr_ext_len = static_cast<std::uint8_t>((kDataExtLen - 8) / 4);
  h.routing_type = 1;
  h.segments_left = 0;
  h.pointer = pointer;
  rng.fill(h.reserved);
  return h;
}

void body_to_buffer(const AriadnePacketBody& body,
                    std::span<std::uint8_t, kDataBodyLen> out) {
  std::memcpy(out.data(), body.vec.bytes.data(), kVectorLen);
  std::memcpy(out.data() + kVectorLen, body.payload.data(), kDataPayloadLen);
}

AriadnePacketBody buffer_to_body(std::span<const std::uint8_t, kDataBodyLen> x) {
  AriadnePacketBody body;
  std::memcpy(body.vec.bytes.data(), x.data(), kVectorLen);
  std::memcpy(body.payload.data(), x.data() + kVectorLen, kDataPayloadLen);
  return body;
}

}  // namespace

CreatedPacket create_packet(std::span<const PathHop> path, std::uint64_t t,
                            const Pattern& pattern,
                            std::span<const std::uint8_t> payload, Rng& rng) {
  const std::size_t hops = path.size();
  if (hops < 1 || hops > kMaxHops) {
    throw ProtocolError("path length exceeds routing vector capacity");
  }

  std::vector<TempKeyPair> keys(hops);
  std::vector<Address> addrs(hops);
  for (std::size_t i = 0; i < hops; ++i) {
    keys[i] = derive_temp_keys(path[i].key, t);
    addrs[i] = path[i].addr;
  }

  SlotAssignment assignment = sample_slot_assignment(hops, kMaxHops, rng);
  RoutingVector filler = build_filler(assignment, addrs, keys, pattern, rng);

  std::array<std::uint8_t, kDataBodyLen> x;
  std::memcpy(x.data(), filler.bytes.data(), kVectorLen);
  std::vector<std::uint8_t> padded = pad_payload(payload, kDataPayloadLen, rng);
  std::memcpy(x.data() + kVectorLen, padded.data(), kDataPayloadLen);

  // Backward pass, destination first.
  for (std::size_t idx = hops; idx-- > 0;) {
    keystream_xor(keys[idx].enc, kElementLen, x);  // rho_{i,t,Packet}
    MacTag gamma = mac(keys[idx].mac, x);
    const bool last = (idx + 1 == hops);
    RoutingElement r;
    r.pattern = pattern;
    r.next_addr = last ? addrs[idx] : addrs[idx + 1];
    r.next_slot = last ? assignment[idx] : assignment[idx + 1];
    r.mac = gamma;
    std::array<std::uint8_t, kElementLen> enc_elem = r.serialize();
    keystream_xor(keys[idx].enc, 0, enc_elem);  // rho_{i,t,r}
    std::memcpy(x.data() + assignment[idx] * kElementLen, enc_elem.data(),
                kElementLen);
  }

  CreatedPacket out;
  out.first_hop = path[0].addr;
  out.header = make_data_header(assignment[0], rng);
  out.body = buffer_to_body(x);
  out.assignment = assignment;
  return out;
}

ProcessOutcome process_packet(NodeContext& node, const CommonHeader& header,
                              const AriadnePacketBody& body) {
  if (node.table == nullptr || node.rng == nullptr) {
    throw ProtocolError("node context missing table or rng");
  }
  node.last_match = {};
  if (header.pointer >= kMaxHops) {
    return Drop{DropReason::malformed};
  }
  const std::size_t slot_off = header.pointer * kElementLen;

  EncryptedPrefix prefix;
  std::memcpy(prefix.data(), body.vec.bytes.data() + slot_off, kPatternLen);

  std::vector<PatternTable::Candidate> candidates = node.table->lookup(prefix);
  if (candidates.empty()) {
    if (node.table->is_consumed_prefix(prefix)) {
      return Drop{DropReason::replay};
    }
    return Drop{DropReason::bad_pattern};
  }

  std::array<std::uint8_t, kDataBodyLen> x;
  body_to_buffer(body, x);

  std::array<std::uint8_t, kElementLen> enc_slot;
  std::memcpy(enc_slot.data(), x.data() + slot_off, kElementLen);

  // Prefix collisions across sessions are disambiguated by MAC trial.
  const PatternTable::Candidate* winner = nullptr;
  RoutingElement element;
  for (const auto& cand : candidates) {
    std::array<std::uint8_t, kElementLen> slot = enc_slot;
    keystream_xor(cand.keys.enc, 0, slot);  // rho_{i,t,r}
    RoutingElement r = RoutingElement::parse(slot);
    std::memcpy(x.data() + slot_off, r.starred().serialize().data(),
                kElementLen);
    MacTag expected = mac(cand.keys.mac, x);
    if (mac_equal(expected, r.mac)) {
      winner = &cand;
      element = r;
      break;
    }
    std::memcpy(x.data() + slot_off, enc_slot.data(), kElementLen);
  }
  if (winner == nullptr) {
    return Drop{DropReason::bad_mac};
  }
  node.last_match = {winner->session, winner->t, true};

  try {
    node.table->consume(winner->session, winner->t);
  } catch (const ReplayError&) {
    return Drop{DropReason::replay};
  }

  // Decrypt one layer; this blinds the consumed routing element in place.
  keystream_xor(winner->keys.enc, kElementLen, x);

  if (element.next_addr == node.self) {
    auto payload = unpad_payload(
        std::span<const std::uint8_t>(x.data() + kVectorLen, kDataPayloadLen));
    if (!payload) {
      return Drop{DropReason::malformed};
    }
    return Deliver{std::move(*payload)};
  }

  Forward fwd;
  fwd.next_addr = element.next_addr;
  fwd.header = make_data_header(element.next_slot, *node.rng);
  fwd.body = buffer_to_body(x);
  return fwd;
}

}  // namespace ariadne

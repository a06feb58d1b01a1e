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

#include "ariadne/setup_protocol.hpp"

#include <cstring>

namespace ariadne {

std::array<std::uint8_t, kElementLen> SetupRoutingElement::serialize() const {
  std::array<std::uint8_t, kElementLen> out;
  std::size_t off = 0;
  std::memcpy(out.data() + off, next_addr.data(), kAddrLen);
  off += kAddrLen;
  out[off++] = next_slot;
  std::memcpy(out.data() + off, pad.data(), pad.size());
  off += pad.size();
  std::memcpy(out.data() + off, mac.bytes.data(), kMacLen);
  return out;
}

SetupRoutingElement SetupRoutingElement::parse(
    std::span<const std::uint8_t, kElementLen> raw) {
  SetupRoutingElement e;
  std::size_t off = 0;
  std::memcpy(e.next_addr.data(), raw.data() + off, kAddrLen);
  off += kAddrLen;
  e.next_slot = raw[off++];
  std::memcpy(e.pad.data(), raw.data() + off, e.pad.size());
  off += e.pad.size();
  std::memcpy(e.mac.bytes.data(), raw.data() + off, kMacLen);
  return e;
}

SetupRoutingElement SetupRoutingElement::starred() const {
  SetupRoutingElement e = *this;
  e.mac.bytes.fill(0);
  return e;
}

SetupChain setup_keygen(std::span<const GroupElement> pubkeys, Rng& rng) {
  const std::size_t hops = pubkeys.size();
  if (hops < 1 || hops > kMaxHops) {
    throw ProtocolError("setup path length exceeds routing vector capacity");
  }
  SetupChain chain;
  rng.fill(chain.eph_sk.bytes);
  chain.eph_pk = blind_base(chain.eph_sk);
  chain.hops.resize(hops);

  GroupElement alpha = chain.eph_pk;  // alpha_1 = g^x_t
  for (std::size_t i = 0; i < hops; ++i) {
    SetupHopSecrets& hop = chain.hops[i];
    hop.alpha = alpha;
    // k_i = y_i ^ (x_t b_1 ... b_{i-1}), computed by sequential
    // exponentiation since each scalar is clamped at use.
    GroupElement acc = blind(pubkeys[i], chain.eph_sk);
    for (std::size_t j = 0; j + 1 < i; ++j) {
      acc = blind(acc, chain.hops[j].blind);
    }
    hop.master = (i == 0) ? key_from_element(acc)
                          : dh_shared(acc, chain.hops[i - 1].blind);
    hop.blind = blind_factor(alpha, hop.master);
    hop.keys = derive_temp_keys(hop.master, 0);  // setup always uses t = 0
    alpha = blind(alpha, hop.blind);
  }
  return chain;
}

std::vector<std::uint8_t> SetupPayload::serialize() const {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), pattern.bytes.begin(), pattern.bytes.end());
  out.push_back(static_cast<std::uint8_t>(window >> 8));
  out.push_back(static_cast<std::uint8_t>(window & 0xff));
  out.insert(out.end(), nonce.begin(), nonce.end());
  out.insert(out.end(), user_data.begin(), user_data.end());
  return out;
}

std::optional<SetupPayload> SetupPayload::parse(
    std::span<const std::uint8_t> raw) {
  if (raw.size() < kPatternLen + 2 + 16) return std::nullopt;
  SetupPayload p;
  std::size_t off = 0;
  std::memcpy(p.pattern.bytes.data(), raw.data() + off, kPatternLen);
  off += kPatternLen;
  p.window = static_cast<std::uint16_t>((raw[off] << 8) | raw[off + 1]);
  off += 2;
  std::memcpy(p.nonce.data(), raw.data() + off, p.nonce.size());
  off += p.nonce.size();
  p.user_data.assign(raw.begin() + off, raw.end());
  return p;
}

namespace {

CommonHeader make_setup_header(std::uint8_t pointer, Rng& rng) {
  CommonHeader h;
  h.next_header = 59;
  h.hdr_ext_len = static_cast<std::uint8_t>((kSetupExtLen - 8) / 4);
  h.routing_type = 2;
  h.segments_left = 0;
  h.pointer = pointer;
  rng.fill(h.reserved);
  return h;
}

}  // namespace

CreatedSetupPacket create_setup_packet(std::span<const SetupHop> path,
                                       std::span<const std::uint8_t> user_data,
                                       const Pattern& pattern,
                                       std::size_t window, Rng& rng) {
  const std::size_t hops = path.size();
  if (hops < 1 || hops > kMaxHops) {
    throw ProtocolError("setup path length exceeds routing vector capacity");
  }
  if (window < 1 || window > kMaxWindow) {
    throw ProtocolError("window size out of range");
  }

  std::vector<GroupElement> pubkeys(hops);
  for (std::size_t i = 0; i < hops; ++i) pubkeys[i] = path[i].pubkey;
  SetupChain chain = setup_keygen(pubkeys, rng);

  SlotAssignment assignment = sample_slot_assignment(hops, kMaxHops, rng);

  // Filler pass, in path order.
  RoutingVector vec;
  rng.fill(vec.bytes);
  for (std::size_t i = 0; i < hops; ++i) {
    const bool last = (i + 1 == hops);
    SetupRoutingElement e;
    e.next_addr = last ? path[i].addr : path[i + 1].addr;
    e.next_slot = last ? assignment[i] : assignment[i + 1];
    splice_slot(vec, assignment[i], e.serialize());
    keystream_xor(chain.hops[i].keys.enc, kElementLen, vec.bytes);
  }

  SetupPayload params;
  params.pattern = pattern;
  params.window = static_cast<std::uint16_t>(window);
  rng.fill(params.nonce);
  params.user_data.assign(user_data.begin(), user_data.end());

  std::array<std::uint8_t, kSetupBodyLen> x;
  std::memcpy(x.data(), vec.bytes.data(), kVectorLen);
  std::vector<std::uint8_t> padded =
      pad_payload(params.serialize(), kSetupPayloadLen, rng);
  std::memcpy(x.data() + kVectorLen, padded.data(), kSetupPayloadLen);

  // Backward pass, destination first.
  for (std::size_t idx = hops; idx-- > 0;) {
    keystream_xor(chain.hops[idx].keys.enc, kElementLen, x);
    MacTag gamma = mac(chain.hops[idx].keys.mac, x);
    const bool last = (idx + 1 == hops);
    SetupRoutingElement r;
    r.next_addr = last ? path[idx].addr : path[idx + 1].addr;
    r.next_slot = last ? assignment[idx] : assignment[idx + 1];
    r.mac = gamma;
    std::array<std::uint8_t, kElementLen> enc_elem = r.serialize();
    keystream_xor(chain.hops[idx].keys.enc, 0, enc_elem);
    std::memcpy(x.data() + assignment[idx] * kElementLen, enc_elem.data(),
                kElementLen);
  }

  CreatedSetupPacket out;
  out.first_hop = path[0].addr;
  out.header = make_setup_header(assignment[0], rng);
  out.body.alpha = chain.hops[0].alpha;
  std::memcpy(out.body.vec.bytes.data(), x.data(), kVectorLen);
  std::memcpy(out.body.payload.data(), x.data() + kVectorLen,
              kSetupPayloadLen);
  out.assignment = assignment;
  out.chain = std::move(chain);
  return out;
}

SetupResult process_setup_packet(SetupNodeContext& node,
                                 const CommonHeader& header,
                                 const SetupPacketBody& body) {
  if (node.table == nullptr || node.rng == nullptr) {
    throw ProtocolError("node context missing table or rng");
  }
  if (header.pointer >= kMaxHops) {
    return {Drop{DropReason::malformed}, std::nullopt, std::nullopt};
  }

  MasterKey k;
  try {
    k = dh_shared(body.alpha, node.keypair.sk);
  } catch (const CryptoError&) {
    return {Drop{DropReason::malformed}, std::nullopt, std::nullopt};
  }
  TempKeyPair keys = derive_temp_keys(k, 0);

  std::array<std::uint8_t, kSetupBodyLen> x;
  std::memcpy(x.data(), body.vec.bytes.data(), kVectorLen);
  std::memcpy(x.data() + kVectorLen, body.payload.data(), kSetupPayloadLen);

  const std::size_t slot_off = header.pointer * kElementLen;
  std::array<std::uint8_t, kElementLen> slot;
  std::memcpy(slot.data(), x.data() + slot_off, kElementLen);
  keystream_xor(keys.enc, 0, slot);
  SetupRoutingElement r = SetupRoutingElement::parse(slot);

  std::memcpy(x.data() + slot_off, r.starred().serialize().data(),
              kElementLen);
  MacTag expected = mac(keys.mac, x);
  if (!mac_equal(expected, r.mac)) {
    return {Drop{DropReason::bad_mac}, std::nullopt, std::nullopt};
  }

  keystream_xor(keys.enc, kElementLen, x);

  // Master key agreed; register the data session for future packets.
  std::uint64_t session =
      node.table->register_session(k, node.pattern, node.window);

  if (r.next_addr == node.self) {
    auto payload = unpad_payload(std::span<const std::uint8_t>(
        x.data() + kVectorLen, kSetupPayloadLen));
    if (!payload) {
      return {Drop{DropReason::malformed}, k, session};
    }
    return {Deliver{std::move(*payload)}, k, session};
  }

  GroupScalar b = blind_factor(body.alpha, k);
  SetupForward fwd;
  fwd.next_addr = r.next_addr;
  fwd.header = make_setup_header(r.next_slot, *node.rng);
  fwd.body.alpha = blind(body.alpha, b);
  std::memcpy(fwd.body.vec.bytes.data(), x.data(), kVectorLen);
  std::memcpy(fwd.body.payload.data(), x.data() + kVectorLen,
              kSetupPayloadLen);
  return {std::move(fwd), k, session};
}

}  // namespace ariadne

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

#include "ariadne/simnet.hpp"

#include <cmath>
#include <cstring>

namespace ariadne {

namespace {

// Frame offsets of the fields the games observe.
constexpr std::size_t kPointerOff = kIpv6HeaderLen + 4;
constexpr std::size_t kBodyOff = kIpv6HeaderLen + kCommonHeaderLen;

constexpr std::size_t kMaxDeliverySteps = 16;

}  // namespace

SimNetwork::SimNetwork(std::uint64_t seed, Pattern pattern, std::size_t window)
    : rng_(seed), pattern_(pattern), window_(window) {}

SimNetwork::Node& SimNetwork::add_node(const Address& addr) {
  auto [it, inserted] = nodes_.try_emplace(addr);
  if (inserted) {
    it->second.addr = addr;
    it->second.dh = dh_keygen(rng_);
  }
  return it->second;
}

SimNetwork::Node& SimNetwork::node(const Address& addr) {
  auto it = nodes_.find(addr);
  if (it == nodes_.end()) throw SimError("unknown node address");
  return it->second;
}

bool SimNetwork::has_node(const Address& addr) const {
  return nodes_.count(addr) != 0;
}

void SimNetwork::set_corrupted(const Address& addr, bool corrupted) {
  node(addr).corrupted = corrupted;
}

std::uint64_t SimNetwork::provision(const Address& addr,
                                    const MasterKey& master) {
  return node(addr).table.register_session(master, pattern_, window_);
}

RunResult SimNetwork::deliver(const Address& src, const Frame& frame) {
  RunResult result;
  Frame cur = frame;
  Address from = src;

  for (std::size_t step = 0; step < kMaxDeliverySteps; ++step) {
    if (tamper_) tamper_(step, cur);

    DecodedFrame dec = decode(cur);
    if (!has_node(dec.dst)) throw SimError("unknown node address");
    Node& n = nodes_.at(dec.dst);

    if (taps_enabled_) taps_.push_back({from, dec.dst, cur});

    HopOutcome hop;
    hop.node = dec.dst;

    if (dec.kind == PacketKind::data) {
      NodeContext ctx{n.addr, &n.table, &rng_, {}};
      ProcessOutcome outcome = process_packet(
          ctx, dec.header, std::get<AriadnePacketBody>(dec.body));

      ProcessTrace trace;
      trace.session = ctx.last_match.session;
      trace.t = ctx.last_match.t;

      if (auto* fwd = std::get_if<Forward>(&outcome)) {
        trace.forwarded = true;
        hop.kind = "forward";
        hop.next = fwd->next_addr;
        n.traces.push_back(trace);
        result.hops.push_back(hop);
        cur = encode(n.addr, fwd->next_addr, fwd->header, fwd->body);
        from = n.addr;
        continue;
      }
      if (auto* del = std::get_if<Deliver>(&outcome)) {
        trace.delivered = true;
        hop.kind = "deliver";
        n.traces.push_back(trace);
        result.hops.push_back(hop);
        result.delivered = std::move(del->payload);
        return result;
      }
      DropReason reason = std::get<Drop>(outcome).reason;
      trace.drop = reason;
      hop.kind = "drop";
      hop.drop = reason;
      n.traces.push_back(trace);
      result.hops.push_back(hop);
      return result;
    }

    // Setup packet.
    SetupNodeContext ctx{n.addr, n.dh, &n.table, pattern_, window_, &rng_};
    SetupResult res = process_setup_packet(ctx, dec.header,
                                           std::get<SetupPacketBody>(dec.body));
    if (res.session) n.installed_sessions.push_back(*res.session);

    if (auto* fwd = std::get_if<SetupForward>(&res.outcome)) {
      hop.kind = "forward";
      hop.next = fwd->next_addr;
      result.hops.push_back(hop);
      cur = encode(n.addr, fwd->next_addr, fwd->header, fwd->body);
      from = n.addr;
      continue;
    }
    if (auto* del = std::get_if<Deliver>(&res.outcome)) {
      hop.kind = "deliver";
      result.hops.push_back(hop);
      result.delivered = std::move(del->payload);
      return result;
    }
    DropReason reason = std::get<Drop>(res.outcome).reason;
    hop.kind = "drop";
    hop.drop = reason;
    result.hops.push_back(hop);
    return result;
  }
  throw SimError("delivery did not terminate");
}

std::vector<RunResult> SimNetwork::run_path(
    std::span<const PathHop> path,
    std::span<const std::vector<std::uint8_t>> payloads,
    std::uint64_t start_t) {
  for (const auto& hop : path) {
    if (!has_node(hop.addr)) throw SimError("unknown node address");
  }
  Address source{};  // the source is not itself a relay
  std::vector<RunResult> results;
  results.reserve(payloads.size());
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    CreatedPacket pkt =
        create_packet(path, start_t + i, pattern_, payloads[i], rng_);
    Frame frame = encode(source, pkt.first_hop, pkt.header, pkt.body);
    results.push_back(deliver(source, frame));
  }
  return results;
}

SimNetwork::SetupRunResult SimNetwork::run_setup(
    std::span<const SetupHop> path, std::span<const std::uint8_t> user_data) {
  for (const auto& hop : path) {
    if (!has_node(hop.addr)) throw SimError("unknown node address");
  }
  CreatedSetupPacket pkt =
      create_setup_packet(path, user_data, pattern_, window_, rng_);
  Address source{};
  Frame frame = encode(source, pkt.first_hop, pkt.header, pkt.body);
  SetupRunResult out;
  out.run = deliver(source, frame);
  out.chain = std::move(pkt.chain);
  return out;
}

// --- Games ---

namespace {

struct TrialSetup {
  GameObservation obs;
  int b = 0;
};

Address random_addr(Rng& rng) {
  Address a;
  rng.fill(a);
  return a;
}

MasterKey random_key(Rng& rng) {
  MasterKey k;
  rng.fill(k.bytes);
  return k;
}

std::vector<std::uint8_t> random_payload(Rng& rng, std::size_t len = 64) {
  std::vector<std::uint8_t> p(len);
  rng.fill(p);
  return p;
}

// Sends one packet and extracts the frames arriving at and leaving the
// honest node.
void observe_at(SimNetwork& net, std::span<const PathHop> path, std::uint64_t t,
                const Address& honest, Frame& in, Frame& out) {
  net.clear_taps();
  std::vector<std::vector<std::uint8_t>> payloads{random_payload(net.rng())};
  std::vector<RunResult> res = net.run_path(path, payloads, t);
  if (!res[0].delivered) throw SimError("challenge packet was dropped");
  bool got_in = false, got_out = false;
  for (const TapRecord& tap : net.taps()) {
    if (tap.to == honest) {
      in = tap.frame;
      got_in = true;
    }
    if (tap.from == honest) {
      out = tap.frame;
      got_out = true;
    }
  }
  if (!got_in || !got_out) throw SimError("honest node not on delivery path");
}

TrialSetup run_trial(const GameConfig& cfg, Rng& rng, bool source_game) {
  const std::size_t len = cfg.path_len;
  const std::size_t h = cfg.honest_index;
  if (len < 2 || len > kMaxHops || h + 1 >= len) {
    throw SimError("game requires an honest node with a successor");
  }

  SimNetwork net(rng.u64(), Pattern{{0x41, 0x52, 0x49}}, cfg.window);

  std::vector<PathHop> p(len);
  for (std::size_t i = 0; i < len; ++i) {
    p[i].addr = random_addr(rng);
    p[i].key = random_key(rng);
    net.add_node(p[i].addr);
    net.provision(p[i].addr, p[i].key);
  }

  std::vector<PathHop> p_alt;
  if (source_game) {
    // Same nodes, different source: fresh master keys everywhere.
    p_alt = p;
    for (auto& hop : p_alt) {
      hop.key = random_key(rng);
      net.provision(hop.addr, hop.key);
    }
  } else {
    // Fresh prefix of random length before the honest node; shared suffix
    // keeps its sessions.
    const std::size_t max_prefix = kMaxHops - (len - h);
    const std::size_t prefix =
        1 + rng.uniform(static_cast<std::uint32_t>(max_prefix));
    for (std::size_t i = 0; i < prefix; ++i) {
      PathHop hop;
      hop.addr = random_addr(rng);
      hop.key = random_key(rng);
      net.add_node(hop.addr);
      net.provision(hop.addr, hop.key);
      p_alt.push_back(hop);
    }
    p_alt.insert(p_alt.end(), p.begin() + h, p.end());
  }

  TrialSetup trial;
  trial.obs.pattern = net.pattern();
  trial.obs.window = cfg.window;
  if (cfg.cls == AdversaryClass::a2) {
    trial.obs.has_keys = true;
    trial.obs.succ_key = p[h + 1].key;
  }

  const Address honest = p[h].addr;
  observe_at(net, p, 0, honest, trial.obs.pkt1_in, trial.obs.pkt1_out);

  trial.b = static_cast<int>(rng.uniform(2));
  if (trial.b == 0) {
    observe_at(net, p, 1, honest, trial.obs.pkt2_in, trial.obs.pkt2_out);
  } else {
    observe_at(net, p_alt, 1, honest, trial.obs.pkt2_in, trial.obs.pkt2_out);
  }
  return trial;
}

AdvantageEstimate run_game(const GameConfig& cfg, const Adversary& adversary,
                           bool source_game) {
  if (cfg.trials < 1) throw SimError("trial count must be positive");
  Rng rng(cfg.seed);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    TrialSetup trial = run_trial(cfg, rng, source_game);
    int guess = adversary(trial.obs, rng);
    if (guess == trial.b) ++correct;
  }
  AdvantageEstimate est;
  est.trials = cfg.trials;
  est.p_correct = static_cast<double>(correct) / cfg.trials;
  est.advantage = std::abs(est.p_correct - 0.5);
  est.std_error =
      std::sqrt(est.p_correct * (1.0 - est.p_correct) / cfg.trials);
  return est;
}

}  // namespace

AdvantageEstimate path_session_game(const GameConfig& cfg,
                                    const Adversary& adversary) {
  return run_game(cfg, adversary, /*source_game=*/false);
}

AdvantageEstimate source_session_game(const GameConfig& cfg,
                                      const Adversary& adversary) {
  return run_game(cfg, adversary, /*source_game=*/true);
}

Adversary adversary_null() {
  return [](const GameObservation&, Rng& rng) {
    return static_cast<int>(rng.uniform(2));
  };
}

Adversary adversary_byte_equality() {
  return [](const GameObservation& obs, Rng&) {
    // Guess "same path" when any byte of pointer | vector | payload of the
    // forwarded frames matches.
    if (obs.pkt1_out[kPointerOff] == obs.pkt2_out[kPointerOff]) return 0;
    for (std::size_t i = kBodyOff; i < kFrameLen; ++i) {
      if (obs.pkt1_out[i] == obs.pkt2_out[i]) return 0;
    }
    return 1;
  };
}

Adversary adversary_pointer_equality() {
  return [](const GameObservation& obs, Rng&) {
    return obs.pkt1_out[kPointerOff] == obs.pkt2_out[kPointerOff] ? 0 : 1;
  };
}

Adversary adversary_key_reuse() {
  return [](const GameObservation& obs, Rng& rng) {
    if (!obs.has_keys) return static_cast<int>(rng.uniform(2));
    // With the successor's master key, test whether the forwarded frame's
    // pointed slot matches a pattern encrypted under that session's keys.
    DecodedFrame dec = decode(obs.pkt2_out);
    const auto& body = std::get<AriadnePacketBody>(dec.body);
    if (dec.header.pointer >= kMaxHops) return 1;
    EncryptedPrefix prefix;
    std::memcpy(prefix.data(),
                body.vec.bytes.data() + dec.header.pointer * kElementLen,
                kPatternLen);
    for (std::uint64_t t = 0; t < 2 * obs.window; ++t) {
      TempKeyPair keys = derive_temp_keys(obs.succ_key, t);
      if (encrypt_pattern(keys.enc, obs.pattern) == prefix) return 0;
    }
    return 1;
  };
}

}  // namespace ariadne

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

// Acceptance suite: one criterion per function, one PASS/FAIL line each.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ariadne/bench.hpp"
#include "ariadne/simnet.hpp"

using namespace ariadne;

namespace {

const Pattern kPi{{0x41, 0x52, 0x49}};

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<std::uint8_t> random_payload(Rng& rng, std::size_t len) {
  std::vector<std::uint8_t> p(len);
  rng.fill(p);
  return p;
}

// 1. End-to-end onion correctness for every path length.
Check onion_correctness() {
  Check c;
  Rng seed_rng(101);
  for (std::size_t hops = 1; hops <= kMaxHops; ++hops) {
    SimNetwork net(seed_rng.u64(), kPi, 128);
    std::vector<PathHop> path(hops);
    for (auto& hop : path) {
      net.rng().fill(hop.addr);
      net.rng().fill(hop.key.bytes);
      net.add_node(hop.addr);
      net.provision(hop.addr, hop.key);
    }
    std::vector<std::vector<std::uint8_t>> msgs(100);
    for (auto& m : msgs) m = random_payload(net.rng(), 64);
    auto results = net.run_path(path, msgs, 0);
    for (std::size_t i = 0; i < msgs.size(); ++i) {
      c.expect(results[i].delivered && *results[i].delivered == msgs[i],
               "payload mismatch at " + std::to_string(hops) + " hops");
      c.expect(results[i].hops.size() == hops, "wrong hop count");
      for (std::size_t j = 0; j + 1 < hops; ++j) {
        c.expect(results[i].hops[j].kind == "forward" &&
                     results[i].hops[j].next == path[j + 1].addr,
                 "wrong successor at hop " + std::to_string(j));
      }
    }
  }
  return c;
}

// 2. Any post-hop bit flip is dropped at the next honest hop.
Check per_hop_integrity() {
  Check c;
  Rng rng(202);
  const std::size_t hops = kMaxHops;
  std::vector<PathHop> path(hops);
  std::vector<PatternTable> tables(hops);
  std::vector<NodeContext> ctxs;
  for (std::size_t i = 0; i < hops; ++i) {
    rng.fill(path[i].addr);
    rng.fill(path[i].key.bytes);
    tables[i].register_session(path[i].key, kPi, 64);
    ctxs.push_back({path[i].addr, &tables[i], &rng, {}});
  }

  std::uint64_t t = 0;
  for (std::size_t hop = 0; hop < hops; ++hop) {
    CreatedPacket pkt =
        create_packet(path, t++, kPi, random_payload(rng, 64), rng);
    CommonHeader header = pkt.header;
    AriadnePacketBody body = pkt.body;
    for (std::size_t i = 0; i < hop; ++i) {
      ProcessOutcome out = process_packet(ctxs[i], header, body);
      if (!std::holds_alternative<Forward>(out)) {
        c.expect(false, "clean packet dropped early");
        return c;
      }
      header = std::get<Forward>(out).header;
      body = std::get<Forward>(out).body;
    }
    for (int region = 0; region < 2; ++region) {
      for (int trial = 0; trial < 128; ++trial) {
        AriadnePacketBody tampered = body;
        if (region == 0) {
          std::size_t bit = rng.uniform(kVectorLen * 8);
          tampered.vec.bytes[bit / 8] ^=
              static_cast<std::uint8_t>(1u << (bit % 8));
        } else {
          std::size_t bit = rng.uniform(kDataPayloadLen * 8);
          tampered.payload[bit / 8] ^=
              static_cast<std::uint8_t>(1u << (bit % 8));
        }
        ProcessOutcome out = process_packet(ctxs[hop], header, tampered);
        c.expect(std::holds_alternative<Drop>(out),
                 "tampered packet not dropped at hop " + std::to_string(hop));
      }
    }
  }
  return c;
}

// 3. Setup key agreement and the blinding-chain identity.
Check setup_key_agreement() {
  Check c;
  Rng rng(303);
  for (int run = 0; run < 100; ++run) {
    std::vector<DhKeypair> nodes(kMaxHops);
    std::vector<GroupElement> pubs(kMaxHops);
    for (std::size_t i = 0; i < kMaxHops; ++i) {
      nodes[i] = dh_keygen(rng);
      pubs[i] = nodes[i].pk;
    }
    SetupChain chain = setup_keygen(pubs, rng);
    for (std::size_t i = 0; i < kMaxHops; ++i) {
      MasterKey node_k = dh_shared(chain.hops[i].alpha, nodes[i].sk);
      c.expect(node_k == chain.hops[i].master,
               "key disagreement at hop " + std::to_string(i));
      if (i + 1 < kMaxHops) {
        c.expect(chain.hops[i + 1].alpha ==
                     blind(chain.hops[i].alpha, chain.hops[i].blind),
                 "blinding chain broken at hop " + std::to_string(i));
      }
    }
  }
  return c;
}

// 4. Structural unlinkability: byte statistics and A1 game advantages.
Check structural_unlinkability() {
  Check c;
  Rng rng(404);
  std::vector<PathHop> path(3);
  for (std::size_t i = 0; i < 3; ++i) {
    rng.fill(path[i].addr);
    rng.fill(path[i].key.bytes);
  }

  std::size_t equal = 0, total = 0;
  for (std::uint64_t pair = 0; pair < 5000; ++pair) {
    auto payload = random_payload(rng, 64);
    CreatedPacket a = create_packet(path, 2 * pair, kPi, payload, rng);
    CreatedPacket b = create_packet(path, 2 * pair + 1, kPi, payload, rng);
    total += 1;
    if (a.header.pointer == b.header.pointer) equal += 1;
    for (std::size_t i = 0; i < kVectorLen; ++i) {
      total += 1;
      if (a.body.vec.bytes[i] == b.body.vec.bytes[i]) equal += 1;
    }
    for (std::size_t i = 0; i < kDataPayloadLen; ++i) {
      total += 1;
      if (a.body.payload[i] == b.body.payload[i]) equal += 1;
    }
  }
  // Pointer bytes collide at 1/l_pmax; they are 1 byte out of 1453, so the
  // pooled rate stays within the 1/256 + 4 sigma budget.
  const double p = 1.0 / 256.0 +
                   (1.0 / kMaxHops) / (1.0 + kVectorLen + kDataPayloadLen);
  const double sigma = std::sqrt(total * p * (1 - p));
  c.expect(std::abs(static_cast<double>(equal) - total * p) <= 4 * sigma,
           "byte equality rate off: " + std::to_string(equal) + "/" +
               std::to_string(total));

  GameConfig cfg;
  cfg.trials = 5000;
  cfg.seed = 405;
  const double bound = 3 * std::sqrt(0.25 / cfg.trials);
  struct Row {
    const char* name;
    AdvantageEstimate est;
  };
  Row rows[] = {
      {"path/byte", path_session_game(cfg, adversary_byte_equality())},
      {"path/pointer", path_session_game(cfg, adversary_pointer_equality())},
      {"source/byte", source_session_game(cfg, adversary_byte_equality())},
      {"source/pointer",
       source_session_game(cfg, adversary_pointer_equality())},
  };
  for (const Row& row : rows) {
    c.expect(row.est.advantage <= bound,
             std::string(row.name) + " advantage " +
                 std::to_string(row.est.advantage));
  }
  return c;
}

// 5. A2 behavior: path-session unlinkable, source-session leaks.
Check a2_behavior() {
  Check c;
  GameConfig cfg;
  cfg.trials = 3000;
  cfg.seed = 505;
  cfg.cls = AdversaryClass::a2;
  const double bound = 3 * std::sqrt(0.25 / cfg.trials);
  AdvantageEstimate path_est = path_session_game(cfg, adversary_key_reuse());
  c.expect(path_est.advantage <= bound,
           "a2 path advantage " + std::to_string(path_est.advantage));
  AdvantageEstimate src_est = source_session_game(cfg, adversary_key_reuse());
  c.expect(src_est.advantage >= 0.45,
           "key-reuse advantage only " + std::to_string(src_est.advantage));
  return c;
}

// 6. Replay and window semantics over 1000-packet runs.
Check replay_and_window() {
  Check c;
  Rng rng(606);
  std::vector<PathHop> path(2);
  std::vector<PatternTable> tables(2);
  std::vector<NodeContext> ctxs;
  for (std::size_t i = 0; i < 2; ++i) {
    rng.fill(path[i].addr);
    rng.fill(path[i].key.bytes);
    tables[i].register_session(path[i].key, kPi, 32);
    ctxs.push_back({path[i].addr, &tables[i], &rng, {}});
  }

  auto send = [&](std::uint64_t t) -> ProcessOutcome {
    CreatedPacket pkt =
        create_packet(path, t, kPi, random_payload(rng, 32), rng);
    ProcessOutcome out = process_packet(ctxs[0], pkt.header, pkt.body);
    if (!std::holds_alternative<Forward>(out)) return out;
    Forward& fwd = std::get<Forward>(out);
    return process_packet(ctxs[1], fwd.header, fwd.body);
  };

  // Shuffled order with displacement < 32 (the window size).
  std::vector<std::uint64_t> order(1000);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t base = 0; base + 32 <= order.size(); base += 32) {
    for (std::size_t i = 31; i > 0; --i) {
      std::size_t j = rng.uniform(static_cast<std::uint32_t>(i + 1));
      std::swap(order[base + i], order[base + j]);
    }
  }
  for (std::uint64_t t : order) {
    ProcessOutcome out = send(t);
    c.expect(std::holds_alternative<Deliver>(out),
             "in-window packet t=" + std::to_string(t) + " not delivered");
  }

  // Duplicate: replay the same frame at the first hop.
  CreatedPacket pkt =
      create_packet(path, 1000, kPi, random_payload(rng, 32), rng);
  ProcessOutcome first = process_packet(ctxs[0], pkt.header, pkt.body);
  c.expect(std::holds_alternative<Forward>(first), "fresh packet dropped");
  ProcessOutcome second = process_packet(ctxs[0], pkt.header, pkt.body);
  c.expect(std::holds_alternative<Drop>(second) &&
               std::get<Drop>(second).reason == DropReason::replay,
           "duplicate not flagged as replay");

  // Far outside the window.
  ProcessOutcome late = send(500000);
  c.expect(std::holds_alternative<Drop>(late) &&
               std::get<Drop>(late).reason == DropReason::bad_pattern,
           "out-of-window packet not dropped");
  return c;
}

// 7. Performance shape: flat data processing, growing setup creation,
// ratio and throughput floors.
Check performance_shape() {
  Check c;
  BenchOptions opts;
  opts.warmup_seconds = 1.0;
  opts.samples = 100;
  opts.seed = 707;

  opts.batch = 256;
  double dmin = 1e18, dmax = 0.0, d3 = 0.0;
  for (std::size_t hops = 1; hops <= kMaxHops; ++hops) {
    BenchCell cell =
        run_bench(BenchKind::data, BenchRole::process, hops, opts);
    dmin = std::min(dmin, cell.mean_us);
    dmax = std::max(dmax, cell.mean_us);
    if (hops == 3) d3 = cell.gbps;
    std::printf("  %s\n", format_cell(cell).c_str());
  }
  c.expect(dmax / dmin <= 1.5, "data processing not flat: " +
                                   std::to_string(dmax / dmin));
  c.expect(d3 >= 1.0, "throughput below 1 Gbps: " + std::to_string(d3));

  opts.batch = 8;
  BenchCell create2 =
      run_bench(BenchKind::setup, BenchRole::create, 2, opts);
  BenchCell create5 =
      run_bench(BenchKind::setup, BenchRole::create, 5, opts);
  std::printf("  %s\n", format_cell(create2).c_str());
  std::printf("  %s\n", format_cell(create5).c_str());
  c.expect(create5.mean_us > create2.mean_us,
           "setup creation not growing with hops");

  opts.batch = 16;
  BenchCell sproc = run_bench(BenchKind::setup, BenchRole::process, 3, opts);
  std::printf("  %s\n", format_cell(sproc).c_str());
  c.expect(sproc.mean_us / ((dmin + dmax) / 2) >= 10.0,
           "data/setup processing ratio under 10x");
  return c;
}

// 8. Wire-format round-trip fuzz and fixed sizes.
Check wire_format() {
  Check c;
  Rng rng(808);
  for (int i = 0; i < 100000; ++i) {
    Address src, dst;
    rng.fill(src);
    rng.fill(dst);
    CommonHeader h;
    h.next_header = 59;
    h.routing_type = static_cast<std::uint8_t>(1 + rng.uniform(2));
    h.pointer = static_cast<std::uint8_t>(rng.uniform(kMaxHops));
    rng.fill(h.reserved);
    Frame f;
    if (h.routing_type == 1) {
      h.hdr_ext_len = (kDataExtLen - 8) / 4;
      AriadnePacketBody body;
      rng.fill(body.vec.bytes);
      rng.fill(body.payload);
      f = encode(src, dst, h, body);
    } else {
      h.hdr_ext_len = (kSetupExtLen - 8) / 4;
      SetupPacketBody body;
      rng.fill(body.alpha.bytes);
      rng.fill(body.vec.bytes);
      rng.fill(body.payload);
      f = encode(src, dst, h, body);
    }
    c.expect(f.size() == 1500, "frame size");
    DecodedFrame d;
    try {
      d = decode(f);
    } catch (const WireError&) {
      c.expect(false, "round-trip decode failed");
      return c;
    }
    Frame f2 = d.kind == PacketKind::data
                   ? encode(d.src, d.dst, d.header,
                            std::get<AriadnePacketBody>(d.body))
                   : encode(d.src, d.dst, d.header,
                            std::get<SetupPacketBody>(d.body));
    if (f2 != f) {
      c.expect(false, "round-trip not byte-identical");
      return c;
    }
  }
  c.expect(kDataExtLen == 188 && kSetupExtLen == 220, "extension sizes");
  return c;
}

}  // namespace

int main() {
  crypto_init();
  struct Criterion {
    const char* name;
    std::function<Check()> fn;
  };
  const Criterion criteria[] = {
      {"onion correctness", onion_correctness},
      {"per-hop integrity", per_hop_integrity},
      {"setup key agreement", setup_key_agreement},
      {"structural session unlinkability", structural_unlinkability},
      {"A2 behavior", a2_behavior},
      {"replay and window", replay_and_window},
      {"performance shape", performance_shape},
      {"wire format", wire_format},
  };

  bool all_ok = true;
  int idx = 1;
  for (const Criterion& crit : criteria) {
    Check c = crit.fn();
    std::printf("%s criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", idx,
                crit.name, c.ok ? "" : " - ", c.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && c.ok;
    ++idx;
  }
  return all_ok ? 0 : 1;
}

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

#include "ariadne/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace ariadne {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct BenchState {
  Pattern pattern{{0x41, 0x52, 0x49}};
  Rng rng;
  std::vector<PathHop> path;            // data path (addr + master key)
  std::vector<SetupHop> setup_path;     // setup path (addr + pubkey)
  std::vector<DhKeypair> setup_keys;

  // Relay-side state for processing benches.
  PatternTable table{1 << 20};
  Address relay{};
  std::uint64_t next_t = 0;

  explicit BenchState(std::size_t hops, std::uint64_t seed) : rng(seed) {
    path.resize(hops);
    setup_path.resize(hops);
    setup_keys.resize(hops);
    for (std::size_t i = 0; i < hops; ++i) {
      rng.fill(path[i].addr);
      rng.fill(path[i].key.bytes);
      setup_keys[i] = dh_keygen(rng);
      setup_path[i].addr = path[i].addr;
      setup_path[i].pubkey = setup_keys[i].pk;
    }
    relay = path[0].addr;
  }
};

// Data packets for the relay at hop 0, consecutive t; the table window
// slides as they are consumed, so any count can be processed.
std::vector<CreatedPacket> make_data_batch(BenchState& st, std::size_t count) {
  std::vector<CreatedPacket> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::array<std::uint8_t, 512> payload;
    st.rng.fill(payload);
    out.push_back(
        create_packet(st.path, st.next_t++, st.pattern, payload, st.rng));
  }
  return out;
}

std::vector<CreatedSetupPacket> make_setup_batch(BenchState& st,
                                                 std::size_t count) {
  std::vector<CreatedSetupPacket> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(create_setup_packet(st.setup_path, {}, st.pattern,
                                      /*window=*/1, st.rng));
  }
  return out;
}

}  // namespace

BenchCell run_bench(BenchKind kind, BenchRole role, std::size_t hops,
                    const BenchOptions& opts) {
  if (hops < 1 || hops > kMaxHops) {
    throw ProtocolError("bench hop count out of range");
  }
  BenchState st(hops, opts.seed);

  const bool is_data = (kind == BenchKind::data);
  const bool is_create = (role == BenchRole::create);

  if (is_data && !is_create) {
    st.table.register_session(st.path[0].key, st.pattern, kMaxWindow);
  }

  std::array<std::uint8_t, 512> payload;
  st.rng.fill(payload);

  NodeContext data_ctx{st.relay, &st.table, &st.rng, {}};
  SetupNodeContext setup_ctx{st.relay, st.setup_keys[0], &st.table,
                             st.pattern, /*window=*/1, &st.rng};

  // One batch of `batch` iterations; returns elapsed seconds. Processing
  // inputs are pre-built outside the timed region.
  auto run_batch = [&](std::size_t batch) -> double {
    if (is_create) {
      Clock::time_point start = Clock::now();
      for (std::size_t i = 0; i < batch; ++i) {
        if (is_data) {
          CreatedPacket pkt =
              create_packet(st.path, st.next_t++, st.pattern, payload, st.rng);
          (void)pkt;
        } else {
          CreatedSetupPacket pkt = create_setup_packet(
              st.setup_path, {}, st.pattern, /*window=*/1, st.rng);
          (void)pkt;
        }
      }
      return seconds_since(start);
    }
    if (is_data) {
      std::vector<CreatedPacket> pkts = make_data_batch(st, batch);
      Clock::time_point start = Clock::now();
      for (auto& pkt : pkts) {
        ProcessOutcome out = process_packet(data_ctx, pkt.header, pkt.body);
        if (std::holds_alternative<Drop>(out)) {
          throw ProtocolError("bench packet unexpectedly dropped");
        }
      }
      return seconds_since(start);
    }
    std::vector<CreatedSetupPacket> pkts = make_setup_batch(st, batch);
    Clock::time_point start = Clock::now();
    for (auto& pkt : pkts) {
      SetupResult out = process_setup_packet(setup_ctx, pkt.header, pkt.body);
      if (std::holds_alternative<Drop>(out.outcome)) {
        throw ProtocolError("bench setup packet unexpectedly dropped");
      }
    }
    return seconds_since(start);
  };

  // Warmup.
  Clock::time_point warm_start = Clock::now();
  while (seconds_since(warm_start) < opts.warmup_seconds) {
    run_batch(opts.batch);
  }

  std::vector<double> per_op_us(opts.samples);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    per_op_us[s] = run_batch(opts.batch) * 1e6 / opts.batch;
  }

  // Trimmed mean over the middle 80% of batch samples; scheduler
  // preemption makes the raw mean useless on shared machines.
  std::sort(per_op_us.begin(), per_op_us.end());
  std::size_t trim = per_op_us.size() / 10;
  std::size_t kept = per_op_us.size() - 2 * trim;
  double mean = 0.0;
  for (std::size_t i = trim; i < trim + kept; ++i) mean += per_op_us[i];
  mean /= kept;
  double var = 0.0;
  for (std::size_t i = trim; i < trim + kept; ++i) {
    var += (per_op_us[i] - mean) * (per_op_us[i] - mean);
  }
  var /= kept;

  BenchCell cell;
  cell.kind = kind;
  cell.role = role;
  cell.hops = hops;
  cell.samples = opts.samples;
  cell.batch = opts.batch;
  cell.mean_us = mean;
  cell.sd_us = std::sqrt(var);
  cell.pkts_per_s = 1e6 / mean;
  cell.gbps = cell.pkts_per_s * kFrameLen * 8 / 1e9;
  return cell;
}

std::string format_cell(const BenchCell& cell) {
  std::ostringstream os;
  os << "kind=" << (cell.kind == BenchKind::data ? "data" : "setup")
     << " role=" << (cell.role == BenchRole::create ? "create" : "process")
     << " hops=" << cell.hops << " samples=" << cell.samples
     << " batch=" << cell.batch << " mean_us=" << cell.mean_us
     << " sd_us=" << cell.sd_us << " pps=" << cell.pkts_per_s
     << " gbps=" << cell.gbps;
  return os.str();
}

}  // namespace ariadne

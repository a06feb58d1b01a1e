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

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ariadne/wire.hpp"

namespace ariadne {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TapRecord {
  Address from{};
  Address to{};
  Frame frame{};
};

/// Per-packet processing trace kept by a node; part of an A2 view.
struct ProcessTrace {
  std::uint64_t session = 0;
  std::uint64_t t = 0;
  bool forwarded = false;
  bool delivered = false;
  std::optional<DropReason> drop;
};

struct HopOutcome {
  Address node{};
  std::string kind;  // "forward" | "deliver" | "drop"
  std::optional<DropReason> drop;
  Address next{};
};

struct RunResult {
  std::vector<HopOutcome> hops;
  std::optional<std::vector<std::uint8_t>> delivered;
};

/// In-process topology. Delivery is synchronous and lossless; taps record
/// every frame byte-identically. Single-threaded by contract.
class SimNetwork {
 public:
  struct Node {
    Address addr{};
    DhKeypair dh;
    PatternTable table;
    bool corrupted = false;
    std::vector<ProcessTrace> traces;
    std::vector<std::uint64_t> installed_sessions;  // via setup packets
  };

  explicit SimNetwork(std::uint64_t seed, Pattern pattern = Pattern{},
                      std::size_t window = kDefaultWindow);

  Node& add_node(const Address& addr);
  Node& node(const Address& addr);
  bool has_node(const Address& addr) const;

  void set_corrupted(const Address& addr, bool corrupted);
  void set_taps_enabled(bool enabled) { taps_enabled_ = enabled; }

  /// Tamper hook, called before each frame is handed to its receiver.
  /// Hop index 0 is the source-to-first-hop link.
  using TamperHook = std::function<void(std::size_t hop_index, Frame&)>;
  void set_tamper_hook(TamperHook hook) { tamper_ = std::move(hook); }

  /// Registers a data session at a node directly (without setup packets).
  std::uint64_t provision(const Address& addr, const MasterKey& master);

  /// Injects a frame at `src` and steps it hop by hop to completion.
  RunResult deliver(const Address& src, const Frame& frame);

  /// Creates and delivers data packets for each payload, using counters
  /// start_t, start_t+1, ...
  std::vector<RunResult> run_path(std::span<const PathHop> path,
                                  std::span<const std::vector<std::uint8_t>>
                                      payloads,
                                  std::uint64_t start_t);

  struct SetupRunResult {
    RunResult run;
    SetupChain chain;  // the source's view of the negotiated keys
  };

  /// Runs a setup packet along the path; nodes install master keys.
  SetupRunResult run_setup(std::span<const SetupHop> path,
                           std::span<const std::uint8_t> user_data);

  const std::vector<TapRecord>& taps() const { return taps_; }
  void clear_taps() { taps_.clear(); }

  Pattern pattern() const { return pattern_; }
  std::size_t window() const { return window_; }
  Rng& rng() { return rng_; }

 private:
  Rng rng_;
  Pattern pattern_;
  std::size_t window_;
  bool taps_enabled_ = true;
  TamperHook tamper_;
  std::map<Address, Node> nodes_;
  std::vector<TapRecord> taps_;
};

// --- Unlinkability games ---

enum class AdversaryClass { a1, a2 };

/// What one game trial exposes to the adversary: the two challenge packets
/// as frames arriving at and leaving the honest node, plus (for A2) the
/// key material of every non-honest node that matters for the decision.
struct GameObservation {
  Frame pkt1_in{}, pkt1_out{};
  Frame pkt2_in{}, pkt2_out{};
  bool has_keys = false;   // A2 only
  MasterKey succ_key;      // P's source <-> honest node's successor
  Pattern pattern;
  std::size_t window = 0;
};

/// Returns the guess b'.
using Adversary = std::function<int(const GameObservation&, Rng&)>;

struct GameConfig {
  std::size_t trials = 1000;
  std::size_t path_len = 4;      // hops in P, 2..kMaxHops
  std::size_t honest_index = 1;  // 0-based, needs a successor
  std::size_t window = 8;
  AdversaryClass cls = AdversaryClass::a1;
  std::uint64_t seed = 0;
};

struct AdvantageEstimate {
  double p_correct = 0.0;
  double advantage = 0.0;  // |p_correct - 0.5|
  double std_error = 0.0;  // binomial sigma of p_correct
  std::size_t trials = 0;
};

/// Challenge paths differ in the nodes before the honest hop.
AdvantageEstimate path_session_game(const GameConfig& cfg,
                                    const Adversary& adversary);

/// Challenge paths differ only in the source.
AdvantageEstimate source_session_game(const GameConfig& cfg,
                                      const Adversary& adversary);

Adversary adversary_null();
Adversary adversary_byte_equality();
Adversary adversary_pointer_equality();
Adversary adversary_key_reuse();

}  // namespace ariadne

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

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ariadne/bench.hpp"
#include "ariadne/config.hpp"
#include "ariadne/vectors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

std::uint64_t effective_seed(std::uint64_t config_seed) {
  if (const char* env = std::getenv("ARIADNE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return config_seed;
}

std::string short_hex(const ariadne::Address& addr) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(digits[addr[i] >> 4]);
    out.push_back(digits[addr[i] & 0xf]);
  }
  return out;
}

int cmd_run(const std::string& config_path) {
  ariadne::RunConfig cfg;
  try {
    cfg = ariadne::load_run_config(config_path);
  } catch (const ariadne::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }

  ariadne::SimNetwork net(effective_seed(cfg.seed), cfg.pattern, cfg.window);
  std::map<std::string, ariadne::Address> addrs;
  for (const auto& name : cfg.nodes) {
    addrs[name] = ariadne::address_for_name(name);
    net.add_node(addrs[name]);
  }

  // Setup phase: negotiate master keys along the path.
  std::vector<ariadne::SetupHop> setup_path;
  for (const auto& name : cfg.path) {
    setup_path.push_back({addrs[name], net.node(addrs[name]).dh.pk});
  }
  ariadne::SimNetwork::SetupRunResult setup = net.run_setup(setup_path, {});
  for (const auto& hop : setup.run.hops) {
    std::cout << "setup node=" << short_hex(hop.node) << " outcome="
              << hop.kind
              << (hop.drop ? std::string(" reason=") +
                                 ariadne::drop_reason_name(*hop.drop)
                           : "")
              << "\n";
  }
  if (!setup.run.delivered) {
    std::cerr << "setup phase failed\n";
    return kExitAssertion;
  }

  // Data phase over the negotiated keys.
  std::vector<ariadne::PathHop> path(cfg.path.size());
  for (std::size_t i = 0; i < cfg.path.size(); ++i) {
    path[i] = {addrs[cfg.path[i]], setup.chain.hops[i].master};
  }
  std::vector<std::vector<std::uint8_t>> payloads(cfg.payloads);
  for (auto& p : payloads) {
    p.resize(cfg.payload_len);
    net.rng().fill(p);
  }

  std::vector<ariadne::RunResult> results = net.run_path(path, payloads, 0);
  std::size_t delivered = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& last = results[i].hops.back();
    if (results[i].delivered && *results[i].delivered == payloads[i]) {
      ++delivered;
    } else {
      std::cout << "packet " << i << " failed at node="
                << short_hex(last.node) << " outcome=" << last.kind
                << (last.drop ? std::string(" reason=") +
                                    ariadne::drop_reason_name(*last.drop)
                              : "")
                << "\n";
    }
  }
  for (const auto& name : cfg.path) {
    ariadne::TableStats s = net.node(addrs[name]).table.stats();
    std::cout << "table node=" << short_hex(addrs[name])
              << " sessions=" << s.sessions << " entries=" << s.entries
              << " lookups=" << s.lookups << " misses=" << s.misses
              << " collisions=" << s.collisions << " consumed=" << s.consumed
              << "\n";
  }
  std::cout << "delivered " << delivered << "/" << payloads.size()
            << " payloads over " << cfg.path.size() << " hops\n";
  return delivered == payloads.size() ? kExitOk : kExitAssertion;
}

int cmd_games(const std::string& config_path, std::size_t trials_override) {
  ariadne::GamesConfig cfg;
  try {
    cfg = ariadne::load_games_config(config_path);
  } catch (const ariadne::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (trials_override > 0) cfg.trials = trials_override;
  if (cfg.trials == 0) {
    std::cerr << "trial count must be positive\n";
    return kExitUsage;
  }

  ariadne::GameConfig game;
  game.trials = cfg.trials;
  game.path_len = cfg.path_len;
  game.honest_index = cfg.honest_index;
  game.window = cfg.window;
  game.seed = effective_seed(cfg.seed);

  struct Row {
    const char* game;
    const char* adversary;
    ariadne::AdversaryClass cls;
    bool expect_high;  // the documented A2 source-session limitation
  };
  const Row rows[] = {
      {"path-session", "null", ariadne::AdversaryClass::a1, false},
      {"path-session", "byte-equality", ariadne::AdversaryClass::a1, false},
      {"path-session", "pointer-equality", ariadne::AdversaryClass::a1, false},
      {"source-session", "byte-equality", ariadne::AdversaryClass::a1, false},
      {"source-session", "pointer-equality", ariadne::AdversaryClass::a1,
       false},
      {"path-session", "key-reuse", ariadne::AdversaryClass::a2, false},
      {"source-session", "key-reuse", ariadne::AdversaryClass::a2, true},
  };

  const double bound = 3.0 * std::sqrt(0.25 / cfg.trials);
  bool violation = false;
  for (const Row& row : rows) {
    ariadne::Adversary adv;
    if (std::string(row.adversary) == "null") {
      adv = ariadne::adversary_null();
    } else if (std::string(row.adversary) == "byte-equality") {
      adv = ariadne::adversary_byte_equality();
    } else if (std::string(row.adversary) == "pointer-equality") {
      adv = ariadne::adversary_pointer_equality();
    } else {
      adv = ariadne::adversary_key_reuse();
    }
    game.cls = row.cls;
    game.seed += 1;  // independent streams per row
    ariadne::AdvantageEstimate est =
        std::string(row.game) == "path-session"
            ? ariadne::path_session_game(game, adv)
            : ariadne::source_session_game(game, adv);

    std::string status;
    if (row.expect_high) {
      status = est.advantage >= 0.45 ? "expected-limitation" : "violation";
    } else {
      status = est.advantage <= bound ? "ok" : "violation";
    }
    if (status == "violation") violation = true;
    std::cout << "game=" << row.game << " adversary=" << row.adversary
              << " class=" << (row.cls == ariadne::AdversaryClass::a1 ? "A1"
                                                                      : "A2")
              << " trials=" << est.trials << " advantage=" << est.advantage
              << " sigma=" << est.std_error << " bound=" << bound
              << " status=" << status << "\n";
  }
  return violation ? kExitAssertion : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ariadne privacy-preserving source-routed onion protocol"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a simulated setup + data phase");
  run->add_option("config", config_path, "JSON config file")->required();

  std::string games_config;
  std::size_t trials = 0;
  auto* games = app.add_subcommand("games", "Run the unlinkability games");
  games->add_option("config", games_config, "JSON config file")->required();
  games->add_option("--trials", trials, "Override the trial count");

  std::string kind = "data";
  std::string role = "process";
  std::size_t hops = 3;
  ariadne::BenchOptions opts;
  auto* bench = app.add_subcommand("bench", "Measure packet operations");
  bench->add_option("--kind", kind, "data|setup")
      ->check(CLI::IsMember({"data", "setup"}));
  bench->add_option("--role", role, "create|process")
      ->check(CLI::IsMember({"create", "process"}));
  bench->add_option("--hops", hops, "Path length 1..5")
      ->check(CLI::Range(1, 5));
  bench->add_option("--warmup", opts.warmup_seconds, "Warmup seconds");
  bench->add_option("--samples", opts.samples, "Sample count");
  bench->add_option("--batch", opts.batch, "Iterations per sample");
  bench->add_option("--seed", opts.seed, "RNG seed");

  auto* vectors =
      app.add_subcommand("vectors", "Emit golden crypto test vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(config_path);
    if (games->parsed()) return cmd_games(games_config, trials);
    if (vectors->parsed()) {
      std::cout << ariadne::golden_test_vectors();
      return kExitOk;
    }
    // bench
    ariadne::BenchCell cell = ariadne::run_bench(
        kind == "data" ? ariadne::BenchKind::data : ariadne::BenchKind::setup,
        role == "create" ? ariadne::BenchRole::create
                         : ariadne::BenchRole::process,
        hops, opts);
    std::cout << ariadne::format_cell(cell) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
}

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

#include "ariadne/config.hpp"

#include <sodium.h>

#include <algorithm>
#include <fstream>

#include "json.hpp"

namespace ariadne {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return j;
}

Pattern parse_pattern(const std::string& hex) {
  if (hex.size() != 2 * kPatternLen) {
    throw ConfigError("pattern must be 3 bytes of hex");
  }
  Pattern p;
  if (sodium_hex2bin(p.bytes.data(), p.bytes.size(), hex.c_str(), hex.size(),
                     nullptr, nullptr, nullptr) != 0) {
    throw ConfigError("pattern is not valid hex");
  }
  return p;
}

}  // namespace

Address address_for_name(const std::string& name) {
  Address addr;
  crypto_generichash(addr.data(), addr.size(),
                     reinterpret_cast<const unsigned char*>(name.data()),
                     name.size(), nullptr, 0);
  addr[0] = 0xfd;
  return addr;
}

RunConfig load_run_config(const std::string& path) {
  json j = load_json(path);
  RunConfig cfg;
  try {
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("pattern"))
      cfg.pattern = parse_pattern(j["pattern"].get<std::string>());
    if (j.contains("window")) cfg.window = j["window"].get<std::size_t>();
    cfg.nodes = j.at("nodes").get<std::vector<std::string>>();
    cfg.path = j.at("path").get<std::vector<std::string>>();
    if (j.contains("payloads"))
      cfg.payloads = j["payloads"].get<std::size_t>();
    if (j.contains("payload_len"))
      cfg.payload_len = j["payload_len"].get<std::size_t>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad run config: ") + e.what());
  }
  if (cfg.nodes.empty()) throw ConfigError("node list is empty");
  if (cfg.path.empty()) throw ConfigError("path is empty");
  if (cfg.path.size() > kMaxHops) {
    throw ConfigError("path is longer than the routing vector capacity");
  }
  for (const auto& name : cfg.path) {
    if (std::find(cfg.nodes.begin(), cfg.nodes.end(), name) ==
        cfg.nodes.end()) {
      throw ConfigError("path references unknown node: " + name);
    }
  }
  if (cfg.window < 1 || cfg.window > kMaxWindow) {
    throw ConfigError("window size out of range");
  }
  if (cfg.payload_len > kDataPayloadLen - 2) {
    throw ConfigError("payload length exceeds fixed packet capacity");
  }
  return cfg;
}

GamesConfig load_games_config(const std::string& path) {
  json j = load_json(path);
  GamesConfig cfg;
  try {
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<std::size_t>();
    if (j.contains("path_len"))
      cfg.path_len = j["path_len"].get<std::size_t>();
    if (j.contains("honest_index"))
      cfg.honest_index = j["honest_index"].get<std::size_t>();
    if (j.contains("window")) cfg.window = j["window"].get<std::size_t>();
    if (j.contains("honest")) cfg.honest = j["honest"].get<std::string>();
    if (j.contains("corrupted"))
      cfg.corrupted = j["corrupted"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad games config: ") + e.what());
  }
  if (!cfg.honest.empty() &&
      std::find(cfg.corrupted.begin(), cfg.corrupted.end(), cfg.honest) !=
          cfg.corrupted.end()) {
    throw ConfigError("honest node appears in the corrupted set");
  }
  if (cfg.path_len < 2 || cfg.path_len > kMaxHops) {
    throw ConfigError("path_len out of range");
  }
  if (cfg.honest_index + 1 >= cfg.path_len) {
    throw ConfigError("honest node needs a successor on the path");
  }
  return cfg;
}

}  // namespace ariadne

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

#include <string>
#include <vector>

#include "ariadne/simnet.hpp"

namespace ariadne {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Declarative simulation run: node list, one path, payload batch.
struct RunConfig {
  std::uint64_t seed = 0;
  Pattern pattern{{0x41, 0x52, 0x49}};
  std::size_t window = kDefaultWindow;
  std::vector<std::string> nodes;
  std::vector<std::string> path;  // node names, source-side order
  std::size_t payloads = 100;
  std::size_t payload_len = 64;
};

/// Game harness configuration.
struct GamesConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t path_len = 4;
  std::size_t honest_index = 1;
  std::size_t window = 8;
  std::string honest;                  // optional node name
  std::vector<std::string> corrupted;  // must not contain `honest`
};

RunConfig load_run_config(const std::string& path);
GamesConfig load_games_config(const std::string& path);

/// Stable address for a named node: hash of the name with the fd00::/8
/// prefix byte forced.
Address address_for_name(const std::string& name);

}  // namespace ariadne

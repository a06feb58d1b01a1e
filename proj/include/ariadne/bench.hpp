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

#include "ariadne/simnet.hpp"

namespace ariadne {

enum class BenchKind { data, setup };
enum class BenchRole { create, process };

/// One measurement cell: per-operation latency statistics plus derived
/// throughput at 1500-byte frames.
struct BenchCell {
  BenchKind kind;
  BenchRole role;
  std::size_t hops = 0;
  std::size_t samples = 0;
  std::size_t batch = 0;
  double mean_us = 0.0;
  double sd_us = 0.0;
  double pkts_per_s = 0.0;
  double gbps = 0.0;
};

struct BenchOptions {
  double warmup_seconds = 3.0;
  std::size_t samples = 100;
  std::size_t batch = 64;
  std::uint64_t seed = 1;
};

/// Single-threaded timed loop: warmup, then `samples` batches of `batch`
/// iterations on a monotonic clock. Reported statistics are a 10%-trimmed
/// mean and sd, which discard scheduler-preemption outliers.
BenchCell run_bench(BenchKind kind, BenchRole role, std::size_t hops,
                    const BenchOptions& opts);

/// One machine-readable record: `key=value` pairs separated by spaces.
std::string format_cell(const BenchCell& cell);

}  // namespace ariadne

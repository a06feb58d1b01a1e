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

#include <algorithm>
#include <cmath>

#include "ariadne/key_reference.hpp"
#include "doctest.h"

using namespace ariadne;

namespace {

const Pattern kPi{{0x41, 0x52, 0x49}};

MasterKey random_master(Rng& rng) {
  MasterKey k;
  rng.fill(k.bytes);
  return k;
}

EncryptedPrefix prefix_for(const MasterKey& k, std::uint64_t t) {
  return encrypt_pattern(derive_temp_keys(k, t).enc, kPi);
}

}  // namespace

TEST_CASE("single-entry window matches the derived prefix") {
  Rng rng(1);
  MasterKey k = random_master(rng);
  PatternTable table;
  std::uint64_t sid = table.register_session(k, kPi, 1);

  auto hits = table.lookup(prefix_for(k, 0));
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].session == sid);
  CHECK(hits[0].t == 0);
  CHECK(hits[0].keys.enc == derive_temp_keys(k, 0).enc);
  CHECK(table.stats().entries == 1);
}

TEST_CASE("window of 32 precomputes 32 entries") {
  Rng rng(2);
  MasterKey k = random_master(rng);
  PatternTable table;
  std::uint64_t sid = table.register_session(k, kPi, 32);
  CHECK(table.stats().entries == 32);
  for (std::uint64_t t = 0; t < 32; ++t) {
    auto hits = table.lookup(prefix_for(k, t));
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].session == sid);
    CHECK(hits[0].t == t);
  }
  CHECK(table.lookup(prefix_for(k, 32)).empty());
}

TEST_CASE("registering one key twice yields bucket collisions") {
  Rng rng(3);
  MasterKey k = random_master(rng);
  PatternTable table;
  std::uint64_t s1 = table.register_session(k, kPi, 4);
  std::uint64_t s2 = table.register_session(k, kPi, 4);
  CHECK(s1 != s2);
  auto hits = table.lookup(prefix_for(k, 2));
  CHECK(hits.size() == 2);
}

TEST_CASE("unknown prefix misses") {
  PatternTable table;
  CHECK(table.lookup(EncryptedPrefix{9, 9, 9}).empty());
  CHECK(table.stats().misses == 1);
}

TEST_CASE("consume slides the window and blocks replay") {
  Rng rng(4);
  MasterKey k = random_master(rng);
  PatternTable table;
  std::uint64_t sid = table.register_session(k, kPi, 32);

  REQUIRE_FALSE(table.lookup(prefix_for(k, 3)).empty());
  table.consume(sid, 3);
  CHECK(table.lookup(prefix_for(k, 3)).empty());
  CHECK(table.is_consumed_prefix(prefix_for(k, 3)));

  // Each consume admits the next counter, so t=32 is already live and
  // consuming t=0 admits t=33. The live set stays at the window size.
  CHECK(table.lookup(prefix_for(k, 32)).size() == 1);
  CHECK(table.lookup(prefix_for(k, 33)).empty());
  table.consume(sid, 0);
  CHECK(table.lookup(prefix_for(k, 33)).size() == 1);
  CHECK(table.stats().entries == 32);

  CHECK_THROWS_AS(table.consume(sid, 3), ReplayError);
  CHECK_THROWS_AS(table.consume(sid + 17, 0), TableError);
}

TEST_CASE("any order within the window consumes each t exactly once") {
  Rng rng(5);
  MasterKey k = random_master(rng);
  PatternTable table;
  std::uint64_t sid = table.register_session(k, kPi, 32);

  // 1000 counters in a locally shuffled order with displacement < 32.
  std::vector<std::uint64_t> order(1000);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t base = 0; base + 32 <= order.size(); base += 32) {
    for (std::size_t i = 31; i > 0; --i) {
      std::size_t j = rng.uniform(static_cast<std::uint32_t>(i + 1));
      std::swap(order[base + i], order[base + j]);
    }
  }

  for (std::uint64_t t : order) {
    auto hits = table.lookup(prefix_for(k, t));
    REQUIRE(hits.size() == 1);
    CHECK_NOTHROW(table.consume(sid, t));
    CHECK_THROWS_AS(table.consume(sid, t), ReplayError);
  }
  CHECK(table.stats().consumed == 1000);
  CHECK(table.stats().entries == 32);
}

TEST_CASE("random prefixes match at roughly the birthday rate") {
  Rng rng(6);
  PatternTable table;
  for (int i = 0; i < 8; ++i) {
    table.register_session(random_master(rng), kPi, 512);
  }
  const double entries = 8 * 512;

  const int probes = 200000;
  int hits = 0;
  for (int i = 0; i < probes; ++i) {
    EncryptedPrefix p;
    rng.fill(p);
    if (!table.lookup(p).empty()) ++hits;
  }
  const double p_hit = entries / std::pow(2.0, 24.0);
  const double expected = probes * p_hit;
  const double sigma = std::sqrt(probes * p_hit * (1 - p_hit));
  CHECK(std::abs(hits - expected) <= 5 * sigma + 1);
}

TEST_CASE("window bounds and capacity are enforced") {
  Rng rng(7);
  PatternTable table(2);
  CHECK_THROWS_AS(table.register_session(random_master(rng), kPi, 0),
                  TableError);
  CHECK_THROWS_AS(table.register_session(random_master(rng), kPi, 1025),
                  TableError);
  table.register_session(random_master(rng), kPi, 1);
  table.register_session(random_master(rng), kPi, 1);
  CHECK_THROWS_AS(table.register_session(random_master(rng), kPi, 1),
                  TableError);
}

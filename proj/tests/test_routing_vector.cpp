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
#include <map>
#include <set>

#include "ariadne/routing_vector.hpp"
#include "doctest.h"

using namespace ariadne;

TEST_CASE("routing element layout and round-trip") {
  Rng rng(1);
  RoutingElement e;
  e.pattern = Pattern{{0x01, 0x02, 0x03}};
  rng.fill(e.next_addr);
  e.next_slot = 4;
  rng.fill(e.mac.bytes);

  auto raw = e.serialize();
  static_assert(raw.size() == 36);
  // pattern | addr | pointer | mac, in that byte order.
  CHECK(raw[0] == 0x01);
  CHECK(raw[1] == 0x02);
  CHECK(raw[2] == 0x03);
  CHECK(std::equal(e.next_addr.begin(), e.next_addr.end(), raw.begin() + 3));
  CHECK(raw[19] == 4);
  CHECK(std::equal(e.mac.bytes.begin(), e.mac.bytes.end(), raw.begin() + 20));

  RoutingElement back = RoutingElement::parse(raw);
  CHECK(back.serialize() == raw);

  auto starred = e.starred().serialize();
  CHECK(std::equal(raw.begin(), raw.begin() + 20, starred.begin()));
  for (std::size_t i = 20; i < 36; ++i) CHECK(starred[i] == 0);
}

TEST_CASE("slot assignment is an injection") {
  Rng rng(2);

  SlotAssignment full = sample_slot_assignment(5, 5, rng);
  std::set<std::uint8_t> seen(full.begin(), full.end());
  CHECK(full.size() == 5);
  CHECK(seen == std::set<std::uint8_t>{0, 1, 2, 3, 4});

  SlotAssignment single = sample_slot_assignment(1, 5, rng);
  CHECK(single.size() == 1);
  CHECK(single[0] < 5);

  CHECK_THROWS_AS(sample_slot_assignment(6, 5, rng), RoutingError);
  CHECK_THROWS_AS(sample_slot_assignment(0, 5, rng), RoutingError);
}

TEST_CASE("slot assignment pairs are uniform") {
  Rng rng(3);
  const int draws = 10000;
  std::map<std::pair<int, int>, int> counts;
  for (int i = 0; i < draws; ++i) {
    SlotAssignment a = sample_slot_assignment(2, 5, rng);
    ++counts[{a[0], a[1]}];
  }
  // 20 ordered pairs, each with p = 1/20.
  CHECK(counts.size() == 20);
  const double p = 1.0 / 20.0;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (const auto& [pair, n] : counts) {
    CHECK(std::abs(n - draws * p) <= 3 * sigma);
  }
}

TEST_CASE("read and splice slots") {
  Rng rng(4);
  RoutingVector vec;
  rng.fill(vec.bytes);
  RoutingVector orig = vec;

  std::array<std::uint8_t, kElementLen> b;
  rng.fill(b);
  splice_slot(vec, 2, b);
  CHECK(read_slot(vec, 2) == b);

  std::array<std::uint8_t, kElementLen> c;
  rng.fill(c);
  splice_slot(vec, 2, c);
  CHECK(read_slot(vec, 2) == c);

  // Boundary slot: everything before byte 144 untouched.
  vec = orig;
  splice_slot(vec, 4, b);
  CHECK(std::equal(vec.bytes.begin(), vec.bytes.begin() + 144,
                   orig.bytes.begin()));
  CHECK(read_slot(vec, 4) == b);

  CHECK_THROWS_AS(read_slot(vec, 5), RoutingError);
  CHECK_THROWS_AS(splice_slot(vec, 5, b), RoutingError);
}

TEST_CASE("filler leaves the terminal element one XOR deep") {
  Rng rng(5);
  for (std::size_t hops = 1; hops <= 5; ++hops) {
    std::vector<Address> addrs(hops);
    std::vector<TempKeyPair> keys(hops);
    for (std::size_t i = 0; i < hops; ++i) {
      rng.fill(addrs[i]);
      MasterKey mk;
      rng.fill(mk.bytes);
      keys[i] = derive_temp_keys(mk, 0);
    }
    SlotAssignment assignment = sample_slot_assignment(hops, kMaxHops, rng);
    Pattern pi{{0x41, 0x52, 0x49}};
    RoutingVector filler = build_filler(assignment, addrs, keys, pi, rng);

    // The last hop's slot was written after every earlier XOR pass, so
    // undoing only the last header keystream slice exposes r*.
    std::size_t slot = assignment[hops - 1];
    auto got = read_slot(filler, slot);
    auto stream = keystream(keys[hops - 1].enc, kElementLen + kVectorLen);
    for (std::size_t i = 0; i < kElementLen; ++i) {
      got[i] ^= stream[kElementLen + slot * kElementLen + i];
    }
    RoutingElement r = RoutingElement::parse(got);
    CHECK(r.pattern == pi);
    CHECK(r.next_addr == addrs[hops - 1]);  // terminal element, self address
    CHECK(r.next_slot == slot);
    for (auto b : r.mac.bytes) CHECK(b == 0);
  }
}

TEST_CASE("unassigned filler slots stay computationally random") {
  Rng rng(6);
  std::size_t equal = 0, total = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Address> addrs(2);
    std::vector<TempKeyPair> keys(2);
    for (std::size_t i = 0; i < 2; ++i) {
      rng.fill(addrs[i]);
      MasterKey mk;
      rng.fill(mk.bytes);
      keys[i] = derive_temp_keys(mk, 0);
    }
    SlotAssignment assignment = sample_slot_assignment(2, kMaxHops, rng);
    Pattern pi{{0x41, 0x52, 0x49}};
    RoutingVector filler = build_filler(assignment, addrs, keys, pi, rng);

    std::array<std::uint8_t, kVectorLen> fresh;
    rng.fill(fresh);
    for (std::size_t slot = 0; slot < kMaxHops; ++slot) {
      if (slot == assignment[0] || slot == assignment[1]) continue;
      for (std::size_t i = 0; i < kElementLen; ++i) {
        total += 1;
        if (filler.bytes[slot * kElementLen + i] ==
            fresh[slot * kElementLen + i]) {
          equal += 1;
        }
      }
    }
  }
  const double p = 1.0 / 256.0;
  const double sigma = std::sqrt(total * p * (1 - p));
  CHECK(std::abs(static_cast<double>(equal) - total * p) <= 4 * sigma);
}

TEST_CASE("filler length mismatches are rejected") {
  Rng rng(7);
  std::vector<Address> addrs(2);
  std::vector<TempKeyPair> keys(3);
  SlotAssignment assignment = sample_slot_assignment(2, kMaxHops, rng);
  Pattern pi{};
  CHECK_THROWS_AS(build_filler(assignment, addrs, keys, pi, rng),
                  RoutingError);
}

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

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "ariadne/crypto.hpp"
#include "ariadne/params.hpp"

namespace ariadne {

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by consume() when the (session, t) entry was already used.
struct ReplayError : TableError {
  using TableError::TableError;
};

using EncryptedPrefix = std::array<std::uint8_t, kPatternLen>;

struct TableStats {
  std::size_t sessions = 0;
  std::size_t entries = 0;
  std::size_t lookups = 0;
  std::size_t misses = 0;
  std::size_t collisions = 0;  // buckets holding more than one candidate
  std::size_t consumed = 0;
};

/// Relay-side matching table from encrypted pattern prefix to the
/// temporary keys of a live (session, t) window entry.
///
/// lookup() is concurrent-read safe, consume() is atomic check-and-remove,
/// register_session() is exclusive; one mutex serializes all three.
class PatternTable {
 public:
  struct Candidate {
    std::uint64_t session = 0;
    std::uint64_t t = 0;
    TempKeyPair keys;
  };

  explicit PatternTable(std::size_t max_sessions = 1 << 16)
      : max_sessions_(max_sessions) {}

  /// Precomputes entries for t = 0..window-1. Returns the session handle.
  std::uint64_t register_session(const MasterKey& master,
                                 const Pattern& pattern, std::size_t window);

  std::vector<Candidate> lookup(const EncryptedPrefix& prefix) const;

  /// Consumes (session, t), sliding the window forward by one entry.
  /// Throws ReplayError if the entry was already consumed.
  void consume(std::uint64_t session, std::uint64_t t);

  /// True if the prefix matches a consumed entry (replay diagnostic).
  bool is_consumed_prefix(const EncryptedPrefix& prefix) const;

  TableStats stats() const;

 private:
  struct SessionRecord {
    MasterKey master;
    Pattern pattern;
    std::uint64_t next_t = 0;  // next t to precompute when sliding
    std::map<std::uint64_t, EncryptedPrefix> live;  // t -> bucket prefix
  };

  void insert_entry(std::uint64_t session, SessionRecord& rec,
                    std::uint64_t t);

  std::size_t max_sessions_;
  mutable std::mutex mu_;
  std::map<std::uint64_t, SessionRecord> sessions_;
  std::map<EncryptedPrefix, std::vector<Candidate>> buckets_;
  std::set<EncryptedPrefix> consumed_prefixes_;
  std::uint64_t next_session_ = 1;
  mutable TableStats stats_;
};

}  // namespace ariadne

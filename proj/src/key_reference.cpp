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

#include "ariadne/key_reference.hpp"

#include <sodium.h>

#include <algorithm>

namespace ariadne {

void PatternTable::insert_entry(std::uint64_t session, SessionRecord& rec,
                                std::uint64_t t) {
  Candidate c;
  c.session = session;
  c.t = t;
  c.keys = derive_temp_keys(rec.master, t);
  EncryptedPrefix prefix = encrypt_pattern(c.keys.enc, rec.pattern);
  buckets_[prefix].push_back(c);
  rec.live.emplace(t, prefix);
  ++stats_.entries;
}

std::uint64_t PatternTable::register_session(const MasterKey& master,
                                             const Pattern& pattern,
                                             std::size_t window) {
  if (window < 1 || window > kMaxWindow) {
    throw TableError("window size out of range");
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (sessions_.size() >= max_sessions_) {
    throw TableError("table capacity exceeded");
  }
  std::uint64_t id = next_session_++;
  SessionRecord& rec = sessions_[id];
  rec.master = master;
  rec.pattern = pattern;
  for (std::uint64_t t = 0; t < window; ++t) {
    insert_entry(id, rec, t);
  }
  rec.next_t = window;
  ++stats_.sessions;
  return id;
}

std::vector<PatternTable::Candidate> PatternTable::lookup(
    const EncryptedPrefix& prefix) const {
  std::lock_guard<std::mutex> lock(mu_);
  ++stats_.lookups;
  auto it = buckets_.find(prefix);
  if (it == buckets_.end()) {
    ++stats_.misses;
    return {};
  }
  if (it->second.size() > 1) ++stats_.collisions;
  return it->second;
}

void PatternTable::consume(std::uint64_t session, std::uint64_t t) {
  std::lock_guard<std::mutex> lock(mu_);
  auto sit = sessions_.find(session);
  if (sit == sessions_.end()) {
    throw TableError("unknown session");
  }
  SessionRecord& rec = sit->second;
  auto lit = rec.live.find(t);
  if (lit == rec.live.end()) {
    throw ReplayError("entry already consumed");
  }
  EncryptedPrefix prefix = lit->second;
  rec.live.erase(lit);
  // Locate the bucket entry and erase the keys.
  auto bit = buckets_.find(prefix);
  if (bit != buckets_.end()) {
    auto& vec = bit->second;
    for (auto cit = vec.begin(); cit != vec.end(); ++cit) {
      if (cit->session == session && cit->t == t) {
        sodium_memzero(cit->keys.enc.data(), cit->keys.enc.size());
        sodium_memzero(cit->keys.mac.data(), cit->keys.mac.size());
        vec.erase(cit);
        break;
      }
    }
    if (vec.empty()) buckets_.erase(bit);
  }
  consumed_prefixes_.insert(prefix);
  --stats_.entries;
  ++stats_.consumed;
  // Slide the window forward.
  insert_entry(session, rec, rec.next_t++);
}

bool PatternTable::is_consumed_prefix(const EncryptedPrefix& prefix) const {
  std::lock_guard<std::mutex> lock(mu_);
  return consumed_prefixes_.count(prefix) != 0;
}

TableStats PatternTable::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

}  // namespace ariadne

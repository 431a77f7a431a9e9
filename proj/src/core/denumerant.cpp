/*
Copyright 2026 The partrel Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "partrel/denumerant.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "partrel/error.hpp"

namespace partrel {

GeneratorVector::GeneratorVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "generator vector must not be empty");
  }
  for (const auto d : entries_) {
    if (d < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "generators must be positive, got " + std::to_string(d));
    }
  }
}

Integer GeneratorVector::sigma(unsigned r) const {
  Integer acc = 0;
  for (const auto d : entries_) {
    acc += ipow(d, r);
  }
  return acc;
}

Integer GeneratorVector::product() const {
  Integer acc = 1;
  for (const auto d : entries_) {
    acc *= static_cast<long>(d);
  }
  return acc;
}

std::vector<std::int64_t> GeneratorVector::sorted() const {
  auto out = entries_;
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorVector GeneratorVector::without(std::size_t i) const {
  if (entries_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "cannot drop the only generator");
  }
  auto out = entries_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return GeneratorVector(std::move(out));
}

std::vector<Integer> denumerant_table(const GeneratorVector& d, std::int64_t s_max) {
  if (s_max < 0) {
    throw Error(ErrorCode::InvalidArgument, "s_max must be nonnegative");
  }
  std::vector<Integer> table(static_cast<std::size_t>(s_max) + 1);
  table[0] = 1;
  for (const auto g : d.entries()) {
    const auto step = static_cast<std::size_t>(g);
    for (std::size_t s = step; s < table.size(); ++s) {
      table[s] += table[s - step];
    }
  }
  return table;
}

namespace {

// Tables only ever grow; a reader holding the shared lock sees a completed
// table because replacements are published under the exclusive lock.
class TableCache {
 public:
  Integer lookup(std::int64_t s, const GeneratorVector& d) {
    const auto key = d.sorted();
    {
      std::shared_lock lock(mutex_);
      const auto it = tables_.find(key);
      if (it != tables_.end() && static_cast<std::int64_t>(it->second->size()) > s) {
        return (*it->second)[static_cast<std::size_t>(s)];
      }
    }
    std::int64_t want = std::max<std::int64_t>(s, 256);
    {
      std::shared_lock lock(mutex_);
      const auto it = tables_.find(key);
      if (it != tables_.end()) {
        want = std::max<std::int64_t>(want, 2 * static_cast<std::int64_t>(it->second->size()));
      }
    }
    auto table = std::make_shared<const std::vector<Integer>>(denumerant_table(d, want));
    std::unique_lock lock(mutex_);
    auto& slot = tables_[key];
    if (!slot || slot->size() < table->size()) {
      slot = table;
    }
    return (*slot)[static_cast<std::size_t>(s)];
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::vector<std::int64_t>, std::shared_ptr<const std::vector<Integer>>> tables_;
};

TableCache& cache() {
  static TableCache instance;
  return instance;
}

void enumerate(std::int64_t remaining, std::span<const std::int64_t> d, Integer& count) {
  if (d.size() == 1) {
    if (remaining % d[0] == 0) {
      ++count;
    }
    return;
  }
  for (std::int64_t used = 0; used <= remaining; used += d[0]) {
    enumerate(remaining - used, d.subspan(1), count);
  }
}

}  // namespace

Integer denumerant(std::int64_t s, const GeneratorVector& d) {
  if (s < 0) {
    return 0;
  }
  return cache().lookup(s, d);
}

Integer brute_force_count(std::int64_t s, const GeneratorVector& d) {
  if (s < 0) {
    throw Error(ErrorCode::InvalidArgument, "brute_force_count needs s >= 0");
  }
  Integer count = 0;
  enumerate(s, d.entries(), count);
  return count;
}

SignedTerm normalize_signed(std::span<const std::int64_t> raw, std::int64_t delta) {
  if (raw.empty()) {
    throw Error(ErrorCode::InvalidArgument, "signed term needs at least one generator");
  }
  if (delta < 1) {
    throw Error(ErrorCode::InvalidArgument, "s-multiplier must be positive");
  }
  int sign = 1;
  std::int64_t shift = 0;
  std::vector<std::int64_t> abs_entries;
  abs_entries.reserve(raw.size());
  for (const auto g : raw) {
    if (g == 0) {
      throw Error(ErrorCode::InvalidArgument, "zero generator in signed term");
    }
    if (g < 0) {
      sign = -sign;
      shift += g;
    }
    abs_entries.push_back(g < 0 ? -g : g);
  }
  return SignedTerm(std::vector<std::int64_t>(raw.begin(), raw.end()), delta, sign, shift,
                    GeneratorVector(std::move(abs_entries)));
}

Integer eval_signed_term(std::int64_t s, const SignedTerm& term) {
  if (s < 0) {
    throw Error(ErrorCode::InvalidArgument, "eval_signed_term needs s >= 0");
  }
  const Integer w = denumerant(s * term.s_multiplier() + term.shift(), term.abs_generators());
  return term.sign() < 0 ? Integer(-w) : w;
}

}  // namespace partrel

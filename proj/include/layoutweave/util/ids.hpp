// Copyright 2026 The layoutweave Authors.
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
#include <optional>
#include <random>
#include <string>

#include <boost/uuid/random_generator.hpp>
#include <boost/uuid/uuid_io.hpp>

namespace layoutweave {

// Version-4 UUID strings. Unseeded generators draw from the system entropy
// source; seeded ones are reproducible, which the CLI exposes for tests and
// diffable runs.
class IdGenerator {
 public:
  IdGenerator() = default;
  explicit IdGenerator(std::uint64_t seed) : engine_(std::in_place, seed) {}

  std::string next() {
    if (engine_) {
      boost::uuids::basic_random_generator<std::mt19937_64> gen(*engine_);
      return boost::uuids::to_string(gen());
    }
    return boost::uuids::to_string(random_());
  }

 private:
  std::optional<std::mt19937_64> engine_;
  boost::uuids::random_generator random_;
};

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace layoutweave

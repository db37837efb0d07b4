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

#include <atomic>
#include <iostream>
#include <mutex>
#include <string_view>

namespace layoutweave::log {

inline std::atomic<bool>& quiet() {
  static std::atomic<bool> flag{false};
  return flag;
}

inline std::atomic<int>& warning_count() {
  static std::atomic<int> n{0};
  return n;
}

inline void warn(std::string_view msg) {
  ++warning_count();
  if (quiet()) return;
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::cerr << "warning: " << msg << '\n';
}

}  // namespace layoutweave::log

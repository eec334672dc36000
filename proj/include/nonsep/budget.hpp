// Copyright 2026 The nonsep Authors
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
#include <chrono>
#include <cstdint>
#include <limits>

namespace nonsep {

/// Wall-clock and step budget shared by every enumeration loop. Cheap to
/// poll: the clock is read once per 256 polls.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  static Budget unlimited() { return {}; }
  static Budget for_duration(std::chrono::milliseconds limit) {
    Budget b;
    b.deadline_ = Clock::now() + limit;
    b.timed_ = true;
    return b;
  }
  Budget& with_node_limit(std::uint64_t nodes) {
    node_limit_ = nodes;
    return *this;
  }
  Budget& with_cancel_flag(const std::atomic<bool>* flag) {
    cancel_ = flag;
    return *this;
  }

  /// Counts one step; true once the budget is gone (and stays gone).
  bool tick() {
    if (exhausted_) return true;
    ++nodes_;
    if (nodes_ > node_limit_) return exhausted_ = true;
    if ((nodes_ & 255U) == 0) {
      if (cancel_ && cancel_->load(std::memory_order_relaxed)) return exhausted_ = true;
      if (timed_ && Clock::now() > deadline_) return exhausted_ = true;
    }
    return false;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Clock::time_point deadline_{};
  bool timed_ = false;
  std::uint64_t node_limit_ = std::numeric_limits<std::uint64_t>::max();
  const std::atomic<bool>* cancel_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace nonsep

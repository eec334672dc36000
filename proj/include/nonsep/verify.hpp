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

#include <string>

#include "nonsep/certificate.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

struct Verification {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Re-checks a certificate from scratch against g using graph primitives
/// only. Reasons name the first failed condition, e.g. "avoidance violated"
/// or "bound: ...".
Verification verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace nonsep

// Copyright 2026 The cdes Authors
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

#ifndef CDES_RENDER_HPP
#define CDES_RENDER_HPP

#include <string>

#include "cdes/matching.hpp"

namespace cdes {

// Dot diagrams: index i sits at horizontal slot i, row 1 on top. Matchings
// with uplines are still drawn, with `warning` set.

struct Diagram {
  std::string document;
  bool warning = false;  // input is not a Callan matching
};

Diagram render_svg(const PerfectMatching& m);
Diagram render_text(const PerfectMatching& m);

}  // namespace cdes

#endif  // CDES_RENDER_HPP

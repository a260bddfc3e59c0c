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

#ifndef CDES_VERIFICATION_HPP
#define CDES_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cdes {

// Exhaustive verification suites. Each suite has a size cap; asking a
// single suite for more than its cap is refused, while "all" clamps each
// member suite to its own cap.
//
//   theorem-p    closed forms at y = -1 against brute force       n <= 8
//   theorem-b    b_n recurrences and y = 2 counts                  n <= 8
//   lemmas       P_{n,i} recurrences; polynomial ring axioms       n <= 8
//   identities   the signed and derangement identities             n <= 8
//   involutions  psi and varphi: involution, exc, cdes, fixed sets n <= 8
//   bijections   counts, gamma/theta round trips and statistics    n <= 7
//                (image-set equality up to n = 6)

struct VerificationFailure {
  std::string check;
  int n = 0;
  std::string witness;
};

struct VerificationSummary {
  std::string suite;
  int n_lo = 1;
  int n_hi = 0;
  std::int64_t checks_run = 0;
  std::vector<VerificationFailure> failures;
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }
};

struct VerificationOptions {
  int jobs = 1;
  std::uint64_t seed = 20260101;
};

inline constexpr int kBijectionImageMaxN = 6;

const std::vector<std::string>& suite_names();  // without "all"

/// Cap for a suite name, including "all" (the largest member cap).
/// Throws std::invalid_argument for an unknown suite.
int suite_cap(std::string_view suite);

/// Throws std::invalid_argument for an unknown suite and std::out_of_range
/// when n_max < 1 or n_max exceeds the suite's cap.
VerificationSummary run_verification(std::string_view suite, int n_max,
                                     const VerificationOptions& options = {});

nlohmann::json summary_to_json(const VerificationSummary& s);
std::string summary_to_text(const VerificationSummary& s);

}  // namespace cdes

#endif  // CDES_VERIFICATION_HPP

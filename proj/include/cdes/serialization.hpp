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

#ifndef CDES_SERIALIZATION_HPP
#define CDES_SERIALIZATION_HPP

#include <optional>
#include <string>
#include <string_view>

#include "cdes/bijections.hpp"
#include "cdes/matching.hpp"
#include "cdes/permutation.hpp"
#include "json.hpp"

namespace cdes {

using Json = nlohmann::json;

/// {"support":[...],"edges":[[[i,row],[j,row]],...]} in canonical order.
Json matching_to_json(const PerfectMatching& m);

/// Throws ParseError on shape errors and std::invalid_argument on an
/// invalid matching.
PerfectMatching matching_from_json(const Json& j);

/// {"n":..,"one_line":[...],"neg":[...]}
Json signed_to_json(const SignedPermutation& sp);
SignedPermutation signed_from_json(const Json& j);

/// Parses "(1+ 6- 3+ 4+)(2+ 8- 7+)(5+)"; an omitted sign means +.
/// Points absent from the text become positive fixed points up to `size`.
SignedPermutation parse_signed_cycles(std::string_view text,
                                      std::optional<int> size = std::nullopt);

/// Standard cycle form with every sign written, e.g. "(1+ 6- 3+ 4+)(5+)".
std::string format_signed_cycles(const SignedPermutation& sp);

Json stats_to_json(const Permutation& pi);

}  // namespace cdes

#endif  // CDES_SERIALIZATION_HPP

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

#ifndef CDES_TABLES_HPP
#define CDES_TABLES_HPP

#include <optional>
#include <string>
#include <string_view>

namespace cdes {

// Involution tables, one '|'-separated row per line.
//
// psi:    pi|weight|hat|q|image          (i = 1)
//         pi|weight|hat|q|m|image        (i >= 2; m blank off the Psi branch)
// varphi: i|pi|image|fixed-marker
//
// Rows: fixed points first in lexicographic one-line order, then each pair
// with its even-cdes member first, pairs ordered by that member.

inline constexpr int kTableMaxN = 8;

enum class TableKind { psi, varphi };

std::optional<TableKind> table_kind_from_string(std::string_view name);

/// psi requires 2 <= n <= 8 and 1 <= i <= n. varphi requires 2 <= n <= 8;
/// without i every 2 <= i <= n is emitted. Throws std::out_of_range.
std::string emit_table(TableKind kind, int n, std::optional<int> i);

/// Drops lines starting with '#', for comparing against annotated goldens.
std::string strip_comment_lines(std::string_view text);

}  // namespace cdes

#endif  // CDES_TABLES_HPP

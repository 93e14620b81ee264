// Copyright 2026 The rpq Authors
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

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rpq {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;
using EdgeId = std::uint32_t;
using StateId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class Direction : std::uint8_t { kForward = 0, kInverse = 1 };

inline const char* to_string(Direction d) {
  return d == Direction::kForward ? "fwd" : "inv";
}

// One letter of the automaton alphabet: a label name plus the direction the
// edge is traversed in. `knows` and `^knows` are distinct symbols.
struct Symbol {
  std::string label;
  Direction direction = Direction::kForward;

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

inline std::string to_string(const Symbol& s) {
  return (s.direction == Direction::kInverse ? "^" : "") + s.label;
}

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rpq

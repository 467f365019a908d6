// Copyright 2026 The AWE Authors.
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
#include "awe/types.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace awe {

std::string_view to_string(Badge b) noexcept {
  switch (b) {
    case Badge::Green:
      return "Green";
    case Badge::Yellow:
      return "Yellow";
    case Badge::Red:
      return "Red";
  }
  return "Red";
}

std::optional<Badge> parse_badge(std::string_view text) noexcept {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "green") return Badge::Green;
  if (lower == "yellow") return Badge::Yellow;
  if (lower == "red") return Badge::Red;
  return std::nullopt;
}

}  // namespace awe

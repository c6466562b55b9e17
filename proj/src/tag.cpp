// Copyright 2026 The uzpos Authors
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

#include "uzpos/tag.hpp"

namespace uzpos {
namespace {

constexpr std::array<std::string_view, kTagCount> kTagNames = {
    "NOUN", "VERB", "ADJ",  "NUM", "ADV",  "PRON", "AUX",
    "CONJ", "PART", "MOD",  "IMIT", "INTJ", "PUNCT",
};

}  // namespace

std::string_view to_string(Tag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<Tag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

}  // namespace uzpos

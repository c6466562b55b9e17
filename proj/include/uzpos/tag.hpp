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

#ifndef UZPOS_TAG_HPP_
#define UZPOS_TAG_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace uzpos {

// Word-class tags: six open classes, three closed classes, three
// intermediate classes, plus PUNCT for punctuation tokens.
enum class Tag : std::uint8_t {
  kNoun,
  kVerb,
  kAdj,
  kNum,
  kAdv,
  kPron,
  kAux,
  kConj,
  kPart,
  kMod,
  kImit,
  kIntj,
  kPunct,
};

inline constexpr std::size_t kTagCount = 13;
inline constexpr std::size_t kWordTagCount = 12;

inline constexpr std::array<Tag, kTagCount> kAllTags = {
    Tag::kNoun, Tag::kVerb, Tag::kAdj,  Tag::kNum,  Tag::kAdv,
    Tag::kPron, Tag::kAux,  Tag::kConj, Tag::kPart, Tag::kMod,
    Tag::kImit, Tag::kIntj, Tag::kPunct,
};

// Every tag a word token may carry (everything but PUNCT).
inline constexpr std::array<Tag, kWordTagCount> kWordTags = {
    Tag::kNoun, Tag::kVerb, Tag::kAdj,  Tag::kNum, Tag::kAdv,  Tag::kPron,
    Tag::kAux,  Tag::kConj, Tag::kPart, Tag::kMod, Tag::kImit, Tag::kIntj,
};

constexpr bool is_word_tag(Tag tag) { return tag != Tag::kPunct; }

// Canonical upper-case identifier ("NOUN", "VERB", ...).
std::string_view to_string(Tag tag);

// Inverse of to_string; empty optional for anything outside the closed set.
std::optional<Tag> parse_tag(std::string_view name);

}  // namespace uzpos

#endif  // UZPOS_TAG_HPP_

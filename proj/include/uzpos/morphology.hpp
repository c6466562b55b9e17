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

#ifndef UZPOS_MORPHOLOGY_HPP_
#define UZPOS_MORPHOLOGY_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uzpos/lexicon.hpp"
#include "uzpos/tag.hpp"

namespace uzpos {

// Search bound: no analysis carries more than this many suffixes.
inline constexpr std::size_t kMaxSuffixes = 5;

// One decomposition of a surface form: stem + suffix chain, innermost
// suffix first, so that stem ++ chain forms == surface exactly.
struct MorphAnalysis {
  std::string stem;
  std::vector<SuffixEntry> chain;
  // Tag of the outermost suffix, or the stem tag for an empty chain.
  Tag final_tag = Tag::kNoun;

  friend bool operator==(const MorphAnalysis&, const MorphAnalysis&) = default;
};

// Returns every decomposition of `surface` into a lexicon stem plus a
// type-compatible chain of at most kMaxSuffixes suffixes, longest stem
// first. The surface is case-folded and normalized before the search.
// Empty result means unanalyzable.
std::vector<MorphAnalysis> analyze(const Lexicon& lexicon,
                                   const SuffixTable& suffixes,
                                   std::string_view surface);

// Duplicate-free final tags in analysis order.
std::vector<Tag> candidate_tags(std::span<const MorphAnalysis> analyses);

}  // namespace uzpos

#endif  // UZPOS_MORPHOLOGY_HPP_

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

#ifndef UZPOS_TAGGER_HPP_
#define UZPOS_TAGGER_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uzpos/lexicon.hpp"
#include "uzpos/rules.hpp"
#include "uzpos/tag.hpp"
#include "uzpos/tokenizer.hpp"

namespace uzpos {

// How a token's tag was decided.
struct TagSource {
  enum class Kind { kLexicon, kSuffix, kRule, kFallback, kPunct };

  Kind kind = Kind::kFallback;
  std::string rule_id;  // set for kRule

  friend bool operator==(const TagSource&, const TagSource&) = default;
};

// "lexicon" | "suffix" | "rule:<id>" | "fallback" | "punct"
std::string to_string(const TagSource& source);

struct TaggedToken {
  Token token;
  Tag tag = Tag::kNoun;
  TagSource source;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

// Assigns exactly one tag to every token:
//   1. punctuation tokens -> PUNCT;
//   2. stems with a unique lexicon tag -> that tag;
//   3. suffix analysis narrowing to a unique tag -> that tag;
//   4. ordered contextual rules over the remaining tokens, each carrying
//      its candidate set (lexicon tags then morphology tags);
//   5. fallback: first candidate, or NOUN for unknown words.
// Resources are immutable after construction; tagging is pure and the
// same tagger may serve concurrent callers.
class Tagger {
 public:
  Tagger(Lexicon lexicon, SuffixTable suffixes, RuleSet rules);

  std::vector<TaggedToken> tag_sentence(std::span<const Token> tokens) const;

  // normalize -> split_sentences -> tokenize -> tag_sentence, one result
  // per sentence. Rule windows never cross sentence boundaries.
  std::vector<std::vector<TaggedToken>> tag_text(std::string_view raw) const;

  const Lexicon& lexicon() const { return lexicon_; }
  const SuffixTable& suffixes() const { return suffixes_; }
  const RuleSet& rules() const { return rules_; }

 private:
  Lexicon lexicon_;
  SuffixTable suffixes_;
  RuleSet rules_;
};

}  // namespace uzpos

#endif  // UZPOS_TAGGER_HPP_

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

#include "uzpos/tagger.hpp"

#include <algorithm>
#include <optional>

#include "uzpos/morphology.hpp"
#include "uzpos/normalizer.hpp"
#include "uzpos/unicode.hpp"

namespace uzpos {

std::string to_string(const TagSource& source) {
  switch (source.kind) {
    case TagSource::Kind::kLexicon:
      return "lexicon";
    case TagSource::Kind::kSuffix:
      return "suffix";
    case TagSource::Kind::kRule:
      return "rule:" + source.rule_id;
    case TagSource::Kind::kFallback:
      return "fallback";
    case TagSource::Kind::kPunct:
      return "punct";
  }
  return "fallback";
}

Tagger::Tagger(Lexicon lexicon, SuffixTable suffixes, RuleSet rules)
    : lexicon_(std::move(lexicon)),
      suffixes_(std::move(suffixes)),
      rules_(std::move(rules)) {}

std::vector<TaggedToken> Tagger::tag_sentence(
    std::span<const Token> tokens) const {
  const std::size_t n = tokens.size();
  std::vector<RuleToken> states(n);
  std::vector<std::optional<TagSource>> sources(n);

  for (std::size_t i = 0; i < n; ++i) {
    const Token& token = tokens[i];
    RuleToken& state = states[i];
    state.folded_surface = uni::fold_case(normalize_text(token.surface));

    if (token.kind == TokenKind::kPunct) {
      state.tag = Tag::kPunct;
      sources[i] = TagSource{TagSource::Kind::kPunct, {}};
      continue;
    }

    const std::span<const Tag> lexical = lexicon_.lookup(token.surface);
    const std::vector<MorphAnalysis> analyses =
        analyze(lexicon_, suffixes_, token.surface);

    if (lexical.size() == 1) {
      state.tag = lexical[0];
      sources[i] = TagSource{TagSource::Kind::kLexicon, {}};
    } else {
      const std::vector<Tag> morph_tags = candidate_tags(analyses);
      if (lexical.empty() && morph_tags.size() == 1) {
        state.tag = morph_tags[0];
        sources[i] = TagSource{TagSource::Kind::kSuffix, {}};
      } else {
        // Candidate set: lexicon tags in priority order, then
        // morphology tags.
        state.candidates.assign(lexical.begin(), lexical.end());
        for (Tag tag : morph_tags) {
          if (std::find(state.candidates.begin(), state.candidates.end(),
                        tag) == state.candidates.end()) {
            state.candidates.push_back(tag);
          }
        }
      }
    }

    // Suffix classes seen by the rule predicates; once the token is
    // resolved, only tag-consistent analyses count.
    for (const MorphAnalysis& analysis : analyses) {
      if (state.tag && analysis.final_tag != *state.tag) continue;
      for (const SuffixEntry& entry : analysis.chain) {
        if (std::find(state.suffix_classes.begin(),
                      state.suffix_classes.end(),
                      entry.class_label) == state.suffix_classes.end()) {
          state.suffix_classes.push_back(entry.class_label);
        }
      }
    }
  }

  apply_rules(states, rules_);

  std::vector<TaggedToken> tagged;
  tagged.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RuleToken& state = states[i];
    TaggedToken out;
    out.token = tokens[i];
    if (state.tag) {
      out.tag = *state.tag;
      if (sources[i]) {
        out.source = *sources[i];
      } else {
        out.source = TagSource{TagSource::Kind::kRule, state.assigned_by};
      }
    } else if (!state.candidates.empty()) {
      out.tag = state.candidates.front();
      out.source = TagSource{TagSource::Kind::kFallback, {}};
    } else {
      out.tag = Tag::kNoun;
      out.source = TagSource{TagSource::Kind::kFallback, {}};
    }
    tagged.push_back(std::move(out));
  }
  return tagged;
}

std::vector<std::vector<TaggedToken>> Tagger::tag_text(
    std::string_view raw) const {
  const std::string normalized = normalize_text(raw);
  std::vector<std::vector<TaggedToken>> result;
  for (const Sentence& sentence : split_sentences(normalized)) {
    const std::vector<Token> tokens = tokenize(sentence.text);
    result.push_back(tag_sentence(tokens));
  }
  return result;
}

}  // namespace uzpos

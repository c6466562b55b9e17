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

#ifndef UZPOS_CORPUS_HPP_
#define UZPOS_CORPUS_HPP_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "uzpos/tag.hpp"
#include "uzpos/tagger.hpp"

namespace uzpos {

struct GoldToken {
  std::string surface;
  Tag tag = Tag::kNoun;

  friend bool operator==(const GoldToken&, const GoldToken&) = default;
};

using CorpusSentence = std::vector<GoldToken>;

struct CorpusCategory {
  std::string name;
  std::vector<CorpusSentence> sentences;

  std::size_t word_count() const;

  friend bool operator==(const CorpusCategory&, const CorpusCategory&) =
      default;
};

// Category-partitioned gold corpus.
//
// File format (UTF-8, LF): each category block starts with a
// `# category: <name>` header; a sentence is a run of `surface<TAB>TAG`
// lines closed by a blank line.
struct AnnotatedCorpus {
  std::vector<CorpusCategory> categories;

  std::size_t word_count() const;
  std::size_t sentence_count() const;

  friend bool operator==(const AnnotatedCorpus&, const AnnotatedCorpus&) =
      default;
};

// Surfaces are normalized on load. Errors carry the 1-based line number.
AnnotatedCorpus read_corpus(std::istream& source);

// Canonical form: every sentence is followed by one blank line; categories
// in stored order. read_corpus(write_corpus(c)) == c.
void write_corpus(const AnnotatedCorpus& corpus, std::ostream& sink);

// Space-separated "surface/TAG" items in token order.
std::string format_slash(std::span<const TaggedToken> sentence);

}  // namespace uzpos

#endif  // UZPOS_CORPUS_HPP_

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

#include "uzpos/morphology.hpp"

#include <algorithm>

#include "uzpos/normalizer.hpp"
#include "uzpos/unicode.hpp"

namespace uzpos {
namespace {

bool ends_with(std::string_view word, std::string_view form) {
  return word.size() > form.size() &&
         word.substr(word.size() - form.size()) == form;
}

// Strips suffixes right to left, longest form first. `stripped` holds the
// suffixes removed so far, outermost first.
class Analyzer {
 public:
  Analyzer(const Lexicon& lexicon, const SuffixTable& suffixes,
           std::string word)
      : lexicon_(lexicon), suffixes_(suffixes), word_(std::move(word)) {}

  std::vector<MorphAnalysis> run() {
    descend(word_);
    std::stable_sort(results_.begin(), results_.end(),
                     [](const MorphAnalysis& a, const MorphAnalysis& b) {
                       return uni::codepoint_count(a.stem) >
                              uni::codepoint_count(b.stem);
                     });
    return std::move(results_);
  }

 private:
  void descend(std::string_view prefix) {
    try_stem(prefix);
    if (stripped_.size() >= kMaxSuffixes) return;
    for (const std::string& form : suffixes_.forms_longest_first()) {
      if (!ends_with(prefix, form)) continue;
      const std::string_view rest = prefix.substr(0, prefix.size() - form.size());
      for (std::size_t index : suffixes_.entries_with_form(form)) {
        stripped_.push_back(&suffixes_.entries()[index]);
        descend(rest);
        stripped_.pop_back();
      }
    }
  }

  void try_stem(std::string_view stem) {
    for (Tag stem_tag : lexicon_.lookup(stem)) {
      // Flow the tag from the stem outwards; every link must accept the
      // incoming tag.
      Tag flow = stem_tag;
      bool compatible = true;
      for (auto it = stripped_.rbegin(); it != stripped_.rend(); ++it) {
        if (!(*it)->attaches(flow)) {
          compatible = false;
          break;
        }
        flow = (*it)->yields;
      }
      if (!compatible) continue;

      MorphAnalysis analysis;
      analysis.stem = std::string(stem);
      analysis.chain.reserve(stripped_.size());
      for (auto it = stripped_.rbegin(); it != stripped_.rend(); ++it) {
        analysis.chain.push_back(**it);
      }
      analysis.final_tag = flow;
      if (std::find(results_.begin(), results_.end(), analysis) ==
          results_.end()) {
        results_.push_back(std::move(analysis));
      }
    }
  }

  const Lexicon& lexicon_;
  const SuffixTable& suffixes_;
  std::string word_;
  std::vector<const SuffixEntry*> stripped_;
  std::vector<MorphAnalysis> results_;
};

}  // namespace

std::vector<MorphAnalysis> analyze(const Lexicon& lexicon,
                                   const SuffixTable& suffixes,
                                   std::string_view surface) {
  const std::string word = uni::fold_case(normalize_text(surface));
  if (word.empty()) return {};
  return Analyzer(lexicon, suffixes, word).run();
}

std::vector<Tag> candidate_tags(std::span<const MorphAnalysis> analyses) {
  std::vector<Tag> tags;
  for (const MorphAnalysis& analysis : analyses) {
    if (std::find(tags.begin(), tags.end(), analysis.final_tag) ==
        tags.end()) {
      tags.push_back(analysis.final_tag);
    }
  }
  return tags;
}

}  // namespace uzpos

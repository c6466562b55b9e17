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

#include "uzpos/corpus.hpp"

#include <algorithm>

#include "uzpos/errors.hpp"
#include "uzpos/normalizer.hpp"

namespace uzpos {
namespace {

constexpr std::string_view kCategoryPrefix = "# category:";

std::string trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return std::string(text.substr(begin, end - begin + 1));
}

bool has_forbidden_char(std::string_view text) {
  return text.find_first_of(" \t\n\r\v\f") != std::string_view::npos;
}

}  // namespace

std::size_t CorpusCategory::word_count() const {
  std::size_t n = 0;
  for (const CorpusSentence& sentence : sentences) n += sentence.size();
  return n;
}

std::size_t AnnotatedCorpus::word_count() const {
  std::size_t n = 0;
  for (const CorpusCategory& category : categories) n += category.word_count();
  return n;
}

std::size_t AnnotatedCorpus::sentence_count() const {
  std::size_t n = 0;
  for (const CorpusCategory& category : categories) {
    n += category.sentences.size();
  }
  return n;
}

AnnotatedCorpus read_corpus(std::istream& source) {
  AnnotatedCorpus corpus;
  CorpusSentence sentence;
  std::string line;
  std::size_t line_no = 0;

  const auto close_sentence = [&] {
    if (sentence.empty()) return;
    corpus.categories.back().sentences.push_back(std::move(sentence));
    sentence.clear();
  };

  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (line.rfind(kCategoryPrefix, 0) == 0) {
      if (!corpus.categories.empty()) close_sentence();
      const std::string name = trim(line.substr(kCategoryPrefix.size()));
      if (name.empty()) {
        throw ParseError("category header without a name", line_no);
      }
      for (const CorpusCategory& existing : corpus.categories) {
        if (existing.name == name) {
          throw ParseError("duplicate category \"" + name + "\"", line_no);
        }
      }
      corpus.categories.push_back(CorpusCategory{name, {}});
      continue;
    }

    if (trim(line).empty()) {
      if (!corpus.categories.empty()) close_sentence();
      continue;
    }

    const auto first_tab = line.find('\t');
    if (first_tab == std::string::npos ||
        line.find('\t', first_tab + 1) != std::string::npos) {
      throw ParseError("expected exactly two tab-separated fields", line_no);
    }
    if (corpus.categories.empty()) {
      throw ParseError("token line before any category header", line_no);
    }

    const std::string surface = line.substr(0, first_tab);
    const std::string tag_name = line.substr(first_tab + 1);
    if (surface.empty()) throw ParseError("empty surface", line_no);
    const auto tag = parse_tag(tag_name);
    if (!tag) {
      throw ParseError("unknown tag \"" + tag_name + "\"", line_no);
    }
    sentence.push_back(GoldToken{normalize_text(surface), *tag});
  }
  if (!corpus.categories.empty()) close_sentence();
  return corpus;
}

void write_corpus(const AnnotatedCorpus& corpus, std::ostream& sink) {
  for (const CorpusCategory& category : corpus.categories) {
    if (category.name.empty() || category.name != trim(category.name) ||
        category.name.find_first_of("\t\n\r") != std::string::npos) {
      throw ValidationError("category name \"" + category.name +
                            "\" does not round-trip");
    }
    sink << kCategoryPrefix << ' ' << category.name << '\n';
    for (const CorpusSentence& sentence : category.sentences) {
      if (sentence.empty()) {
        throw ValidationError("empty sentence in category \"" +
                              category.name + "\"");
      }
      for (const GoldToken& token : sentence) {
        if (token.surface.empty() || has_forbidden_char(token.surface)) {
          throw ValidationError("surface \"" + token.surface +
                                "\" does not round-trip");
        }
        if (!is_normalized(token.surface)) {
          throw ValidationError("surface \"" + token.surface +
                                "\" is not normalized");
        }
        sink << token.surface << '\t' << to_string(token.tag) << '\n';
      }
      sink << '\n';
    }
  }
  if (!sink) throw std::runtime_error("corpus write failed");
}

std::string format_slash(std::span<const TaggedToken> sentence) {
  std::string out;
  for (const TaggedToken& tagged : sentence) {
    if (!out.empty()) out.push_back(' ');
    out += tagged.token.surface;
    out.push_back('/');
    out += to_string(tagged.tag);
  }
  return out;
}

}  // namespace uzpos

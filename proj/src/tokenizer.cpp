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

#include "uzpos/tokenizer.hpp"

#include "uzpos/unicode.hpp"

namespace uzpos {

std::vector<Sentence> split_sentences(std::string_view text) {
  const std::u32string codepoints = uni::decode_utf8(text);
  std::vector<Sentence> sentences;

  std::size_t i = 0;
  while (i < codepoints.size()) {
    while (i < codepoints.size() && uni::is_space(codepoints[i])) ++i;
    if (i >= codepoints.size()) break;

    const std::size_t start = i;
    while (i < codepoints.size() &&
           !uni::is_sentence_terminator(codepoints[i])) {
      ++i;
    }
    if (i < codepoints.size()) ++i;  // include the terminator

    // Trailing whitespace belongs to the gap, not the sentence.
    std::size_t end = i;
    while (end > start && uni::is_space(codepoints[end - 1])) --end;

    sentences.push_back(Sentence{
        uni::encode_utf8(
            std::u32string_view(codepoints).substr(start, end - start)),
        start,
    });
  }
  return sentences;
}

std::vector<Token> tokenize(std::string_view sentence) {
  const std::u32string codepoints = uni::decode_utf8(sentence);
  std::vector<Token> tokens;

  const auto flush = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    tokens.push_back(Token{
        uni::encode_utf8(
            std::u32string_view(codepoints).substr(begin, end - begin)),
        begin,
        end,
        kind,
    });
  };

  std::size_t i = 0;
  while (i < codepoints.size()) {
    const char32_t cp = codepoints[i];
    if (uni::is_space(cp)) {
      ++i;
      continue;
    }
    if (uni::is_splitting_punct(cp)) {
      flush(i, i + 1, TokenKind::kPunct);
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < codepoints.size() && !uni::is_space(codepoints[i]) &&
           !uni::is_splitting_punct(codepoints[i])) {
      ++i;
    }
    flush(start, i, TokenKind::kWord);
  }
  return tokens;
}

}  // namespace uzpos

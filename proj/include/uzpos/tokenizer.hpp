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

#ifndef UZPOS_TOKENIZER_HPP_
#define UZPOS_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace uzpos {

enum class TokenKind { kWord, kPunct };

struct Token {
  std::string surface;
  // Codepoint offsets of the surface within the tokenized text,
  // half-open [begin, end).
  std::size_t begin = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string text;
  // Codepoint offset of the sentence within the source text.
  std::size_t offset = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Splits normalized text into sentences. A sentence runs from the first
// non-whitespace character to the next terminator (included) or to the end
// of text; whitespace between sentences belongs to no sentence.
std::vector<Sentence> split_sentences(std::string_view text);

// Splits one normalized sentence into tokens. Tokens split on whitespace;
// each splitting-punctuation codepoint becomes its own PUNCT token. The
// modifier signs U+02BB/U+02BC and hyphens are word-internal.
std::vector<Token> tokenize(std::string_view sentence);

}  // namespace uzpos

#endif  // UZPOS_TOKENIZER_HPP_

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

#include "uzpos/normalizer.hpp"

#include "uzpos/unicode.hpp"

namespace uzpos {
namespace {

bool follows_o_or_g(char32_t prev) {
  return prev == U'o' || prev == U'O' || prev == U'g' || prev == U'G';
}

}  // namespace

bool is_apostrophe_variant(char32_t cp) {
  switch (cp) {
    case U'\'':        // U+0027 APOSTROPHE
    case U'`':         // U+0060 GRAVE ACCENT
    case U'‘':    // LEFT SINGLE QUOTATION MARK
    case U'’':    // RIGHT SINGLE QUOTATION MARK
    case kTurnedComma:
    case kModifierApostrophe:
      return true;
    default:
      return false;
  }
}

std::string normalize_text(std::string_view raw) {
  std::u32string codepoints = uni::decode_utf8(raw);
  // A variant never rewrites to o/g, so reading the preceding codepoint
  // from the input is the same as reading it from the output.
  for (std::size_t i = 0; i < codepoints.size(); ++i) {
    if (!is_apostrophe_variant(codepoints[i])) continue;
    if (i > 0 && follows_o_or_g(codepoints[i - 1])) {
      codepoints[i] = kTurnedComma;
    } else {
      codepoints[i] = kModifierApostrophe;
    }
  }
  return uni::encode_utf8(codepoints);
}

bool is_normalized(std::string_view text) {
  return normalize_text(text) == text;
}

}  // namespace uzpos

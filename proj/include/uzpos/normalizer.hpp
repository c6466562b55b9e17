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

#ifndef UZPOS_NORMALIZER_HPP_
#define UZPOS_NORMALIZER_HPP_

#include <string>
#include <string_view>

namespace uzpos {

// Canonical targets for the two apostrophe-like signs of Uzbek Latin text.
// U+02BB (turned comma, the "6"-shaped sign) forms the letters oʻ and gʻ;
// U+02BC (modifier apostrophe, the "9"-shaped sign) is the tutuq belgisi.
inline constexpr char32_t kTurnedComma = U'ʻ';
inline constexpr char32_t kModifierApostrophe = U'ʼ';

// The apostrophe lookalikes the normalizer rewrites:
// U+0027 ' U+0060 ` U+2018 ' U+2019 ' U+02BB ʻ U+02BC ʼ
// Other lookalikes (e.g. U+00B4) intentionally pass through.
bool is_apostrophe_variant(char32_t cp);

// Rewrites every apostrophe variant that immediately follows o/O/g/G to
// U+02BB and every other occurrence to U+02BC. All other characters pass
// through unchanged; the codepoint count is preserved. Idempotent.
std::string normalize_text(std::string_view raw);

// True iff normalize_text(text) == text.
bool is_normalized(std::string_view text);

}  // namespace uzpos

#endif  // UZPOS_NORMALIZER_HPP_

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

#ifndef UZPOS_RESOURCES_HPP_
#define UZPOS_RESOURCES_HPP_

#include <filesystem>
#include <string_view>

#include "uzpos/lexicon.hpp"
#include "uzpos/rules.hpp"

namespace uzpos {

struct TaggerResources {
  Lexicon lexicon;
  SuffixTable suffixes;
  RuleSet rules;
};

// The bundled defaults (data/lexicon.xml, data/suffixes.xml,
// data/rules.txt), embedded at build time.
std::string_view default_lexicon_xml();
std::string_view default_suffixes_xml();
std::string_view default_rules_text();

TaggerResources load_default_resources();

// Loads lexicon.xml, suffixes.xml and rules.txt from a directory.
// Throws ValidationError when a file is missing, ParseError/ValidationError
// when one fails to load.
TaggerResources load_resources_dir(const std::filesystem::path& dir);

}  // namespace uzpos

#endif  // UZPOS_RESOURCES_HPP_

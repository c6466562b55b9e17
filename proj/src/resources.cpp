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

#include "uzpos/resources.hpp"

#include <fstream>

#include "uzpos/errors.hpp"

namespace uzpos {

namespace detail {
extern const unsigned char default_lexicon_data[];
extern const std::size_t default_lexicon_size;
extern const unsigned char default_suffixes_data[];
extern const std::size_t default_suffixes_size;
extern const unsigned char default_rules_data[];
extern const std::size_t default_rules_size;
}  // namespace detail

std::string_view default_lexicon_xml() {
  return {reinterpret_cast<const char*>(detail::default_lexicon_data),
          detail::default_lexicon_size};
}

std::string_view default_suffixes_xml() {
  return {reinterpret_cast<const char*>(detail::default_suffixes_data),
          detail::default_suffixes_size};
}

std::string_view default_rules_text() {
  return {reinterpret_cast<const char*>(detail::default_rules_data),
          detail::default_rules_size};
}

TaggerResources load_default_resources() {
  return TaggerResources{
      Lexicon::parse(default_lexicon_xml()),
      SuffixTable::parse(default_suffixes_xml()),
      RuleSet::parse(default_rules_text()),
  };
}

namespace {

std::ifstream open_resource(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ValidationError("missing resource file " + path.string());
  }
  return stream;
}

}  // namespace

TaggerResources load_resources_dir(const std::filesystem::path& dir) {
  TaggerResources resources;
  {
    std::ifstream stream = open_resource(dir / "lexicon.xml");
    resources.lexicon = Lexicon::load(stream);
  }
  {
    std::ifstream stream = open_resource(dir / "suffixes.xml");
    resources.suffixes = SuffixTable::load(stream);
  }
  {
    std::ifstream stream = open_resource(dir / "rules.txt");
    resources.rules = RuleSet::load(stream);
  }
  return resources;
}

}  // namespace uzpos

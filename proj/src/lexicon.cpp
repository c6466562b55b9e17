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

#include "uzpos/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "uzpos/errors.hpp"
#include "uzpos/normalizer.hpp"
#include "uzpos/unicode.hpp"

namespace uzpos {
namespace {

namespace pt = boost::property_tree;

pt::ptree parse_xml(std::istream& source) {
  pt::ptree tree;
  try {
    pt::read_xml(source, tree,
                 pt::xml_parser::trim_whitespace | pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& err) {
    throw ParseError(err.message(), err.line());
  }
  return tree;
}

void check_version(const pt::ptree& root, const char* element) {
  const auto version = root.get_optional<std::string>("<xmlattr>.version");
  if (version && *version != "1") {
    throw ValidationError("unsupported <" + std::string(element) +
                          "> version \"" + *version + "\"");
  }
}

std::string canonical_form(std::string_view raw) {
  return uni::fold_case(normalize_text(raw));
}

// A lexical tag: any word class; PUNCT is rejected.
Tag parse_word_tag(const std::string& name, const char* context) {
  const auto tag = parse_tag(name);
  if (!tag || !is_word_tag(*tag)) {
    throw ValidationError(std::string(context) + ": unknown tag \"" + name +
                          "\"");
  }
  return *tag;
}

}  // namespace

Lexicon Lexicon::load(std::istream& source) {
  const pt::ptree tree = parse_xml(source);
  const auto root = tree.get_child_optional("lexicon");
  if (!root) throw ValidationError("expected a <lexicon> root element");
  check_version(*root, "lexicon");

  Lexicon lexicon;
  for (const auto& [key, node] : *root) {
    if (key == "<xmlattr>") continue;
    if (key != "entry") {
      throw ValidationError("unexpected element <" + key + "> in <lexicon>");
    }
    const auto stem_attr = node.get_optional<std::string>("<xmlattr>.stem");
    if (!stem_attr || stem_attr->empty()) {
      throw ValidationError("<entry> without a stem attribute");
    }
    const std::string stem = canonical_form(*stem_attr);

    std::vector<Tag> tags;
    for (const auto& [child_key, child] : node) {
      if (child_key == "<xmlattr>") continue;
      if (child_key != "pos") {
        throw ValidationError("unexpected element <" + child_key +
                              "> in entry \"" + *stem_attr + "\"");
      }
      tags.push_back(parse_word_tag(child.get_value<std::string>(),
                                    "entry \"" + *stem_attr + "\""));
    }
    if (tags.empty()) {
      throw ValidationError("entry \"" + *stem_attr + "\" has no <pos>");
    }

    // Duplicate stems merge in document order; tag lists stay
    // duplicate-free.
    auto& merged = lexicon.entries_[stem];
    for (Tag tag : tags) {
      if (std::find(merged.begin(), merged.end(), tag) == merged.end()) {
        merged.push_back(tag);
      }
    }
  }
  return lexicon;
}

Lexicon Lexicon::parse(std::string_view xml) {
  std::istringstream stream{std::string(xml)};
  return load(stream);
}

std::span<const Tag> Lexicon::lookup(std::string_view surface) const {
  const auto it = entries_.find(canonical_form(surface));
  if (it == entries_.end()) return {};
  return it->second;
}

bool Lexicon::contains(std::string_view surface) const {
  return !lookup(surface).empty();
}

bool SuffixEntry::attaches(Tag tag) const {
  return std::find(attaches_to.begin(), attaches_to.end(), tag) !=
         attaches_to.end();
}

SuffixTable SuffixTable::load(std::istream& source) {
  const pt::ptree tree = parse_xml(source);
  const auto root = tree.get_child_optional("suffixes");
  if (!root) throw ValidationError("expected a <suffixes> root element");
  check_version(*root, "suffixes");

  SuffixTable table;
  for (const auto& [key, node] : *root) {
    if (key == "<xmlattr>") continue;
    if (key != "suffix") {
      throw ValidationError("unexpected element <" + key + "> in <suffixes>");
    }

    const auto attr = [&](const char* name) -> std::string {
      const auto value =
          node.get_optional<std::string>(std::string("<xmlattr>.") + name);
      if (!value || value->empty()) {
        throw ValidationError(std::string("<suffix> without a ") + name +
                              " attribute");
      }
      return *value;
    };

    SuffixEntry entry;
    entry.form = canonical_form(attr("form"));
    entry.class_label = attr("class");
    entry.yields = parse_word_tag(attr("yields"),
                                  "suffix \"" + entry.form + "\" yields");

    std::string attaches = attr("attaches");
    std::istringstream items(attaches);
    std::string item;
    while (std::getline(items, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (item.empty()) continue;
      const Tag tag = parse_word_tag(
          item, "suffix \"" + entry.form + "\" attaches");
      if (!entry.attaches(tag)) entry.attaches_to.push_back(tag);
    }
    if (entry.attaches_to.empty()) {
      throw ValidationError("suffix \"" + entry.form +
                            "\" attaches to nothing");
    }

    // (form, attaches, yields) identifies a suffix; an exact repeat is a
    // data error. attaches compares as a set.
    const auto sorted_tags = [](std::vector<Tag> tags) {
      std::sort(tags.begin(), tags.end());
      return tags;
    };
    for (const SuffixEntry& existing : table.entries_) {
      if (existing.form == entry.form && existing.yields == entry.yields &&
          sorted_tags(existing.attaches_to) ==
              sorted_tags(entry.attaches_to)) {
        throw ValidationError("duplicate suffix \"" + entry.form + "\"");
      }
    }
    table.entries_.push_back(std::move(entry));
  }

  table.build_index();
  return table;
}

SuffixTable SuffixTable::parse(std::string_view xml) {
  std::istringstream stream{std::string(xml)};
  return load(stream);
}

void SuffixTable::build_index() {
  by_form_.clear();
  forms_longest_first_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& indices = by_form_[entries_[i].form];
    if (indices.empty()) forms_longest_first_.push_back(entries_[i].form);
    indices.push_back(i);
  }
  std::sort(forms_longest_first_.begin(), forms_longest_first_.end(),
            [](const std::string& a, const std::string& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
}

std::span<const std::size_t> SuffixTable::entries_with_form(
    std::string_view form) const {
  const auto it = by_form_.find(std::string(form));
  if (it == by_form_.end()) return {};
  return it->second;
}

}  // namespace uzpos

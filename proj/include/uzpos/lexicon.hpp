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

#ifndef UZPOS_LEXICON_HPP_
#define UZPOS_LEXICON_HPP_

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "uzpos/tag.hpp"

namespace uzpos {

// Stem dictionary. Entries map a normalized, case-folded stem to its word
// classes in priority order (first = preferred reading). Immutable after
// load and safe to share across threads.
//
// XML schema:
//   <lexicon version="1">
//     <entry stem="ish"><pos>NOUN</pos><pos>VERB</pos></entry>
//   </lexicon>
//
// Duplicate stems merge in document order; PUNCT is not a lexical tag.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(std::istream& source);
  static Lexicon parse(std::string_view xml);

  // Tag list for a surface form (case-folded and normalized before the
  // lookup); empty span when absent.
  std::span<const Tag> lookup(std::string_view surface) const;

  bool contains(std::string_view surface) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Tag>> entries_;
};

struct SuffixEntry {
  std::string form;               // normalized, lowercase, non-empty
  std::vector<Tag> attaches_to;   // word classes the suffix may follow
  Tag yields = Tag::kNoun;        // word class of the suffixed word
  std::string class_label;        // e.g. "egalik", "plural", "verb_suffix"

  bool attaches(Tag tag) const;

  friend bool operator==(const SuffixEntry&, const SuffixEntry&) = default;
};

// Suffix inventory, ordered as in the document and indexable by form for
// longest-match search. Immutable after load.
//
// XML schema:
//   <suffixes version="1">
//     <suffix form="lar" attaches="NOUN" yields="NOUN" class="plural"/>
//   </suffixes>
class SuffixTable {
 public:
  SuffixTable() = default;

  static SuffixTable load(std::istream& source);
  static SuffixTable parse(std::string_view xml);

  std::span<const SuffixEntry> entries() const { return entries_; }

  std::size_t size() const { return entries_.size(); }

  // Distinct forms, longest first (ties alphabetical); drives the
  // longest-suffix-first search order of the analyzer.
  std::span<const std::string> forms_longest_first() const {
    return forms_longest_first_;
  }

  // Indices into entries() of every entry with the given form, in document
  // order; empty when the form is absent.
  std::span<const std::size_t> entries_with_form(std::string_view form) const;

 private:
  void build_index();

  std::vector<SuffixEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_form_;
  std::vector<std::string> forms_longest_first_;
};

}  // namespace uzpos

#endif  // UZPOS_LEXICON_HPP_

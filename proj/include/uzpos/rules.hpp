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

#ifndef UZPOS_RULES_HPP_
#define UZPOS_RULES_HPP_

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "uzpos/tag.hpp"

namespace uzpos {

// One premise over a 3-token window. `tag` is set for the *Tag kinds,
// `label` holds the suffix class or word-list name for the others.
struct RulePredicate {
  enum class Kind {
    kPrevTag,       // prev.tag=T
    kNextTag,       // next.tag=T
    kPrevSufClass,  // prev.sufclass=L
    kCurSufClass,   // cur.sufclass=L
    kNextSufClass,  // next.sufclass=L
    kCurInList,     // cur.in=LIST
    kNextInList,    // next.in=LIST
  };

  Kind kind = Kind::kCurSufClass;
  Tag tag = Tag::kNoun;
  std::string label;

  friend bool operator==(const RulePredicate&, const RulePredicate&) = default;
};

struct RuleAction {
  enum class Kind {
    kSetCurrent,         // cur=T
    kSetCurrentAndNext,  // cur,next=T
    kCopyAcross,         // copy_across
  };

  Kind kind = Kind::kSetCurrent;
  Tag tag = Tag::kNoun;  // one of the 12 word classes; unused for kCopyAcross

  friend bool operator==(const RuleAction&, const RuleAction&) = default;
};

struct ContextRule {
  std::string id;
  int priority = 0;  // lower fires first; ties broken by id
  std::vector<RulePredicate> premise;  // non-empty conjunction
  RuleAction action;
};

// An ordered rule collection plus named word lists.
//
// Text format, one item per line ('#' starts a comment line):
//   rule <id> priority=<n>: IF <pred> [AND <pred>...] THEN <action>
//   list <name>: w1, w2, ...
// predicates: prev.tag=T | next.tag=T | prev.sufclass=L | cur.sufclass=L |
//             next.sufclass=L | cur.in=LIST | next.in=LIST
// actions:    cur=T | cur,next=T | copy_across
class RuleSet {
 public:
  RuleSet() = default;

  static RuleSet load(std::istream& source);
  static RuleSet parse(std::string_view text);

  // Rules sorted by (priority, id).
  std::span<const ContextRule> rules() const { return rules_; }

  std::size_t size() const { return rules_.size(); }

  bool has_list(std::string_view name) const;

  // Membership test against a case-folded, normalized surface.
  bool in_list(std::string_view name, std::string_view folded_surface) const;

  int max_passes() const { return max_passes_; }
  void set_max_passes(int passes) { max_passes_ = passes; }

 private:
  std::vector<ContextRule> rules_;
  std::unordered_map<std::string, std::unordered_set<std::string>> lists_;
  int max_passes_ = 3;
};

// Working state of one token during rule application. Punctuation tokens
// enter resolved to PUNCT; word tokens resolved by lookup or suffix
// analysis enter with `tag` set. suffix_classes holds the class labels of
// the token's morphological analyses (restricted to tag-consistent
// analyses once the token is resolved); it is fixed before the passes run.
struct RuleToken {
  std::optional<Tag> tag;
  std::vector<Tag> candidates;   // empty on a word token = unknown word
  std::vector<std::string> suffix_classes;
  std::string folded_surface;
  std::string assigned_by;       // rule id, set when a rule resolves it
};

// One pass: sweep positions left to right; at each position apply the
// lowest-(priority, id) rule whose premise holds and whose action can
// legally assign at least one tag. Legality: the target is unresolved and
// the tag is in its candidate set (any word-class tag when the set is
// empty); COPY_ACROSS needs both neighbors present with exactly one
// resolved to a word-class tag. Assignments made earlier in the sweep are
// visible to later positions. Returns true if anything was assigned.
bool apply_rule_pass(std::vector<RuleToken>& tokens, const RuleSet& rules);

// Repeats apply_rule_pass until a pass changes nothing or max_passes is
// reached. Resolved tokens are never reassigned.
void apply_rules(std::vector<RuleToken>& tokens, const RuleSet& rules);

}  // namespace uzpos

#endif  // UZPOS_RULES_HPP_

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

#include "uzpos/rules.hpp"

#include <algorithm>
#include <sstream>

#include "uzpos/errors.hpp"
#include "uzpos/normalizer.hpp"
#include "uzpos/unicode.hpp"

namespace uzpos {
namespace {

std::string trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_on(std::string_view text,
                                  std::string_view separator) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(separator, pos);
    if (next == std::string_view::npos) {
      parts.push_back(trim(text.substr(pos)));
      return parts;
    }
    parts.push_back(trim(text.substr(pos, next - pos)));
    pos = next + separator.size();
  }
}

Tag parse_action_tag(const std::string& name) {
  const auto tag = parse_tag(name);
  if (!tag || !is_word_tag(*tag)) {
    throw ValidationError("action tag \"" + name +
                          "\" is not one of the 12 word classes");
  }
  return *tag;
}

RulePredicate parse_predicate(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ValidationError("unknown predicate \"" + text + "\"");
  }
  const std::string head = trim(text.substr(0, eq));
  const std::string value = trim(text.substr(eq + 1));
  if (value.empty()) {
    throw ValidationError("predicate \"" + text + "\" has no value");
  }

  RulePredicate pred;
  if (head == "prev.tag" || head == "next.tag") {
    const auto tag = parse_tag(value);
    if (!tag) {
      throw ValidationError("predicate \"" + text + "\": unknown tag \"" +
                            value + "\"");
    }
    pred.kind = head == "prev.tag" ? RulePredicate::Kind::kPrevTag
                                   : RulePredicate::Kind::kNextTag;
    pred.tag = *tag;
    return pred;
  }
  if (head == "prev.sufclass" || head == "cur.sufclass" ||
      head == "next.sufclass") {
    pred.kind = head == "prev.sufclass" ? RulePredicate::Kind::kPrevSufClass
                : head == "cur.sufclass" ? RulePredicate::Kind::kCurSufClass
                                         : RulePredicate::Kind::kNextSufClass;
    pred.label = value;
    return pred;
  }
  if (head == "cur.in" || head == "next.in") {
    pred.kind = head == "cur.in" ? RulePredicate::Kind::kCurInList
                                 : RulePredicate::Kind::kNextInList;
    pred.label = value;
    return pred;
  }
  throw ValidationError("unknown predicate \"" + head + "\"");
}

RuleAction parse_action(const std::string& text) {
  RuleAction action;
  if (text == "copy_across") {
    action.kind = RuleAction::Kind::kCopyAcross;
    return action;
  }
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ValidationError("unknown action \"" + text + "\"");
  }
  const std::string head = trim(text.substr(0, eq));
  action.tag = parse_action_tag(trim(text.substr(eq + 1)));
  if (head == "cur") {
    action.kind = RuleAction::Kind::kSetCurrent;
  } else if (head == "cur,next") {
    action.kind = RuleAction::Kind::kSetCurrentAndNext;
  } else {
    throw ValidationError("unknown action \"" + head + "\"");
  }
  return action;
}

ContextRule parse_rule_line(const std::string& body, std::size_t line_no) {
  // <id> priority=<n>: IF <pred> [AND <pred>...] THEN <action>
  std::istringstream stream(body);
  ContextRule rule;
  stream >> rule.id;
  if (rule.id.empty()) throw ParseError("rule without an id", line_no);

  std::string priority_part;
  stream >> priority_part;
  const auto colon = priority_part.find(':');
  if (colon != std::string::npos) priority_part.resize(colon);
  if (priority_part.rfind("priority=", 0) != 0) {
    throw ParseError("expected priority=<n> after the rule id", line_no);
  }
  try {
    const std::string digits = priority_part.substr(9);
    std::size_t used = 0;
    rule.priority = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
  } catch (const std::exception&) {
    throw ParseError("bad priority in rule \"" + rule.id + "\"", line_no);
  }

  std::string rest;
  std::getline(stream, rest);
  rest = trim(rest);
  if (colon == std::string::npos) {
    if (rest.empty() || rest[0] != ':') {
      throw ParseError("expected ':' after the priority", line_no);
    }
    rest = trim(rest.substr(1));
  }

  if (rest.rfind("IF ", 0) != 0) {
    throw ParseError("expected IF in rule \"" + rule.id + "\"", line_no);
  }
  rest = rest.substr(3);
  const auto then_pos = rest.find(" THEN ");
  if (then_pos == std::string::npos) {
    throw ParseError("expected THEN in rule \"" + rule.id + "\"", line_no);
  }

  for (const std::string& part :
       split_on(rest.substr(0, then_pos), " AND ")) {
    if (part.empty()) {
      throw ParseError("empty predicate in rule \"" + rule.id + "\"", line_no);
    }
    rule.premise.push_back(parse_predicate(part));
  }
  if (rule.premise.empty()) {
    throw ParseError("rule \"" + rule.id + "\" has no premise", line_no);
  }
  rule.action = parse_action(trim(rest.substr(then_pos + 6)));
  return rule;
}

}  // namespace

RuleSet RuleSet::load(std::istream& source) {
  RuleSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;

    if (text.rfind("rule ", 0) == 0) {
      ContextRule rule = parse_rule_line(text.substr(5), line_no);
      for (const ContextRule& existing : set.rules_) {
        if (existing.id == rule.id) {
          throw ValidationError("duplicate rule id \"" + rule.id + "\"");
        }
      }
      set.rules_.push_back(std::move(rule));
    } else if (text.rfind("list ", 0) == 0) {
      const std::string body = text.substr(5);
      const auto colon = body.find(':');
      if (colon == std::string::npos) {
        throw ParseError("expected ':' after the list name", line_no);
      }
      const std::string name = trim(body.substr(0, colon));
      if (name.empty()) throw ParseError("list without a name", line_no);
      if (set.lists_.count(name)) {
        throw ValidationError("duplicate list \"" + name + "\"");
      }
      auto& members = set.lists_[name];
      for (const std::string& item : split_on(body.substr(colon + 1), ",")) {
        if (item.empty()) continue;
        members.insert(uni::fold_case(normalize_text(item)));
      }
      if (members.empty()) {
        throw ValidationError("list \"" + name + "\" is empty");
      }
    } else {
      throw ParseError("unrecognized line \"" + text + "\"", line_no);
    }
  }

  // Lists may be declared after the rules that use them; resolve at the end.
  for (const ContextRule& rule : set.rules_) {
    for (const RulePredicate& pred : rule.premise) {
      if ((pred.kind == RulePredicate::Kind::kCurInList ||
           pred.kind == RulePredicate::Kind::kNextInList) &&
          !set.has_list(pred.label)) {
        throw ValidationError("rule \"" + rule.id +
                              "\" references unknown list \"" + pred.label +
                              "\"");
      }
    }
  }

  std::sort(set.rules_.begin(), set.rules_.end(),
            [](const ContextRule& a, const ContextRule& b) {
              if (a.priority != b.priority) return a.priority < b.priority;
              return a.id < b.id;
            });
  return set;
}

RuleSet RuleSet::parse(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return load(stream);
}

bool RuleSet::has_list(std::string_view name) const {
  return lists_.count(std::string(name)) > 0;
}

bool RuleSet::in_list(std::string_view name,
                      std::string_view folded_surface) const {
  const auto it = lists_.find(std::string(name));
  if (it == lists_.end()) return false;
  return it->second.count(std::string(folded_surface)) > 0;
}

namespace {

bool has_label(const std::vector<std::string>& labels,
               const std::string& label) {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

bool premise_holds(const ContextRule& rule,
                   const std::vector<RuleToken>& tokens, std::size_t i,
                   const RuleSet& rules) {
  const RuleToken* prev = i > 0 ? &tokens[i - 1] : nullptr;
  const RuleToken* next = i + 1 < tokens.size() ? &tokens[i + 1] : nullptr;

  for (const RulePredicate& pred : rule.premise) {
    switch (pred.kind) {
      case RulePredicate::Kind::kPrevTag:
        if (!prev || prev->tag != pred.tag) return false;
        break;
      case RulePredicate::Kind::kNextTag:
        if (!next || next->tag != pred.tag) return false;
        break;
      case RulePredicate::Kind::kPrevSufClass:
        if (!prev || !has_label(prev->suffix_classes, pred.label)) return false;
        break;
      case RulePredicate::Kind::kCurSufClass:
        if (!has_label(tokens[i].suffix_classes, pred.label)) return false;
        break;
      case RulePredicate::Kind::kNextSufClass:
        if (!next || !has_label(next->suffix_classes, pred.label)) return false;
        break;
      case RulePredicate::Kind::kCurInList:
        if (!rules.in_list(pred.label, tokens[i].folded_surface)) return false;
        break;
      case RulePredicate::Kind::kNextInList:
        if (!next || !rules.in_list(pred.label, next->folded_surface)) {
          return false;
        }
        break;
    }
  }
  return true;
}

// A target can take a tag when it is unresolved and the tag lies in its
// candidate set; an unknown word (empty set) accepts any word-class tag.
bool can_take(const RuleToken& token, Tag tag) {
  if (token.tag.has_value()) return false;
  if (!is_word_tag(tag)) return false;
  if (token.candidates.empty()) return true;
  return std::find(token.candidates.begin(), token.candidates.end(), tag) !=
         token.candidates.end();
}

std::vector<std::pair<std::size_t, Tag>> plan_action(
    const ContextRule& rule, const std::vector<RuleToken>& tokens,
    std::size_t i) {
  std::vector<std::pair<std::size_t, Tag>> plan;
  switch (rule.action.kind) {
    case RuleAction::Kind::kSetCurrent:
      if (can_take(tokens[i], rule.action.tag)) {
        plan.emplace_back(i, rule.action.tag);
      }
      break;
    case RuleAction::Kind::kSetCurrentAndNext:
      if (can_take(tokens[i], rule.action.tag)) {
        plan.emplace_back(i, rule.action.tag);
      }
      if (i + 1 < tokens.size() && can_take(tokens[i + 1], rule.action.tag)) {
        plan.emplace_back(i + 1, rule.action.tag);
      }
      break;
    case RuleAction::Kind::kCopyAcross: {
      if (i == 0 || i + 1 >= tokens.size()) break;
      const RuleToken& prev = tokens[i - 1];
      const RuleToken& next = tokens[i + 1];
      if (prev.tag && is_word_tag(*prev.tag) && !next.tag &&
          can_take(next, *prev.tag)) {
        plan.emplace_back(i + 1, *prev.tag);
      } else if (next.tag && is_word_tag(*next.tag) && !prev.tag &&
                 can_take(prev, *next.tag)) {
        plan.emplace_back(i - 1, *next.tag);
      }
      break;
    }
  }
  return plan;
}

}  // namespace

bool apply_rule_pass(std::vector<RuleToken>& tokens, const RuleSet& rules) {
  bool changed = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const ContextRule& rule : rules.rules()) {
      if (!premise_holds(rule, tokens, i, rules)) continue;
      const auto plan = plan_action(rule, tokens, i);
      if (plan.empty()) continue;
      for (const auto& [index, tag] : plan) {
        tokens[index].tag = tag;
        tokens[index].assigned_by = rule.id;
      }
      changed = true;
      break;  // at most one rule per position per pass
    }
  }
  return changed;
}

void apply_rules(std::vector<RuleToken>& tokens, const RuleSet& rules) {
  for (int pass = 0; pass < rules.max_passes(); ++pass) {
    if (!apply_rule_pass(tokens, rules)) break;
  }
}

}  // namespace uzpos

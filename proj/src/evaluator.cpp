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

#include "uzpos/evaluator.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "uzpos/normalizer.hpp"
#include "uzpos/unicode.hpp"

namespace uzpos {
namespace {

bool all_punct(std::string_view surface) {
  const std::u32string codepoints = uni::decode_utf8(surface);
  if (codepoints.empty()) return false;
  for (char32_t cp : codepoints) {
    if (!uni::is_splitting_punct(cp)) return false;
  }
  return true;
}

}  // namespace

std::string render_percent(Ratio ratio) {
  if (ratio.den <= 0) throw std::invalid_argument("ratio with no denominator");
  // Percentage in basis points, rounded half away from zero.
  const std::int64_t bp =
      (ratio.num * 10000 * 2 + ratio.den) / (2 * ratio.den);
  std::ostringstream out;
  out << bp / 100 << '.' << std::setw(2) << std::setfill('0') << bp % 100
      << '%';
  return out.str();
}

std::int64_t count_mistakes(std::span<const EvalObservation> observations) {
  std::unordered_set<std::string> wrong;
  for (const EvalObservation& obs : observations) {
    if (obs.gold != obs.predicted) {
      wrong.insert(uni::fold_case(normalize_text(obs.surface)));
    }
  }
  return static_cast<std::int64_t>(wrong.size());
}

Ratio accuracy(std::int64_t words, std::int64_t mistakes) {
  if (words <= 0) {
    throw std::invalid_argument("accuracy undefined for a word count of " +
                                std::to_string(words));
  }
  if (mistakes < 0 || mistakes > words) {
    throw std::invalid_argument("mistake count " + std::to_string(mistakes) +
                                " out of range for " + std::to_string(words) +
                                " words");
  }
  return Ratio{words - mistakes, words};
}

Ratio EvalRow::accuracy() const { return uzpos::accuracy(words, mistakes); }

std::int64_t EvaluationReport::total_words() const {
  std::int64_t n = 0;
  for (const EvalRow& row : rows) n += row.words;
  return n;
}

std::int64_t EvaluationReport::total_mistakes() const {
  std::int64_t n = 0;
  for (const EvalRow& row : rows) n += row.mistakes;
  return n;
}

Ratio EvaluationReport::total_accuracy() const {
  return accuracy(total_words(), total_mistakes());
}

EvaluationReport evaluate(const AnnotatedCorpus& gold, const Tagger& tagger) {
  EvaluationReport report;
  for (const CorpusCategory& category : gold.categories) {
    std::vector<EvalObservation> observations;
    observations.reserve(category.word_count());

    for (const CorpusSentence& sentence : category.sentences) {
      // Gold surfaces come pre-tokenized; rebuild the token sequence so
      // the tagger output aligns positionally with the annotation.
      std::vector<Token> tokens;
      tokens.reserve(sentence.size());
      std::size_t offset = 0;
      for (const GoldToken& gold_token : sentence) {
        const std::string surface = normalize_text(gold_token.surface);
        const std::size_t length = uni::codepoint_count(surface);
        tokens.push_back(Token{
            surface,
            offset,
            offset + length,
            all_punct(surface) ? TokenKind::kPunct : TokenKind::kWord,
        });
        offset += length + 1;
      }

      const std::vector<TaggedToken> tagged = tagger.tag_sentence(tokens);
      for (std::size_t i = 0; i < sentence.size(); ++i) {
        observations.push_back(EvalObservation{
            sentence[i].surface,
            sentence[i].tag,
            tagged[i].tag,
        });
      }
    }

    report.rows.push_back(EvalRow{
        category.name,
        static_cast<std::int64_t>(observations.size()),
        count_mistakes(observations),
    });
  }
  return report;
}

namespace {

nlohmann::json accuracy_json(std::int64_t words, std::int64_t mistakes) {
  if (words == 0) return nullptr;
  const Ratio ratio = accuracy(words, mistakes);
  return nlohmann::json{
      {"numerator", ratio.num},
      {"denominator", ratio.den},
      {"percent", render_percent(ratio)},
  };
}

std::string accuracy_text(std::int64_t words, std::int64_t mistakes) {
  if (words == 0) return "n/a";
  return render_percent(accuracy(words, mistakes));
}

}  // namespace

std::string render_report(const EvaluationReport& report,
                          ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::json rows = nlohmann::json::array();
    for (const EvalRow& row : report.rows) {
      rows.push_back({
          {"category", row.category},
          {"words", row.words},
          {"mistakes", row.mistakes},
          {"accuracy", accuracy_json(row.words, row.mistakes)},
      });
    }
    const nlohmann::json doc{
        {"rows", rows},
        {"total",
         {
             {"words", report.total_words()},
             {"mistakes", report.total_mistakes()},
             {"accuracy",
              accuracy_json(report.total_words(), report.total_mistakes())},
         }},
    };
    return doc.dump(2) + "\n";
  }

  std::size_t name_width = 8;
  for (const EvalRow& row : report.rows) {
    name_width = std::max(name_width, uni::codepoint_count(row.category));
  }

  std::ostringstream out;
  const auto pad_name = [&](std::string_view name) {
    out << name;
    // Category names may hold multi-byte letters; pad by codepoints.
    for (std::size_t i = uni::codepoint_count(name); i < name_width + 2; ++i) {
      out << ' ';
    }
  };

  out << std::left << std::setw(4) << "No";
  pad_name("Category");
  out << std::right << std::setw(8) << "Words" << std::setw(10) << "Mistakes"
      << std::setw(10) << "Accuracy" << '\n';

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const EvalRow& row = report.rows[i];
    out << std::left << std::setw(4) << i + 1;
    pad_name(row.category);
    out << std::right << std::setw(8) << row.words << std::setw(10)
        << row.mistakes << std::setw(10)
        << accuracy_text(row.words, row.mistakes) << '\n';
  }

  out << std::left << std::setw(4) << "";
  pad_name("Total:");
  out << std::right << std::setw(8) << report.total_words() << std::setw(10)
      << report.total_mistakes() << std::setw(10)
      << accuracy_text(report.total_words(), report.total_mistakes()) << '\n';
  return out.str();
}

}  // namespace uzpos

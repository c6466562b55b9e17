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

#ifndef UZPOS_EVALUATOR_HPP_
#define UZPOS_EVALUATOR_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uzpos/corpus.hpp"
#include "uzpos/tag.hpp"
#include "uzpos/tagger.hpp"

namespace uzpos {

// Exact ratio; rounding happens only when rendering.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / den; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// Two-decimal percentage, half away from zero: Ratio{873, 999} -> "87.39%".
std::string render_percent(Ratio ratio);

struct EvalObservation {
  std::string surface;
  Tag gold = Tag::kNoun;
  Tag predicted = Tag::kNoun;
};

// Number of distinct case-folded, normalized surface forms mis-tagged at
// least once; repeat offenders count once.
std::int64_t count_mistakes(std::span<const EvalObservation> observations);

// (words - mistakes) / words. Throws std::invalid_argument unless
// words > 0 and 0 <= mistakes <= words.
Ratio accuracy(std::int64_t words, std::int64_t mistakes);

struct EvalRow {
  std::string category;
  std::int64_t words = 0;
  std::int64_t mistakes = 0;

  Ratio accuracy() const;

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

struct EvaluationReport {
  std::vector<EvalRow> rows;

  std::int64_t total_words() const;
  std::int64_t total_mistakes() const;
  Ratio total_accuracy() const;
};

// Re-tags every gold sentence (each gold surface as one pre-tokenized
// token), aligns positionally, and applies the deduplicated mistake count
// per category. Row order follows corpus category order.
EvaluationReport evaluate(const AnnotatedCorpus& gold, const Tagger& tagger);

enum class ReportFormat { kTable, kJson };

// kTable: No | Category | Words | Mistakes | Accuracy plus a totals line.
// kJson: {"rows": [{category, words, mistakes, accuracy}...], "total": {...}}
// with accuracy as an exact {numerator, denominator, percent} object.
std::string render_report(const EvaluationReport& report, ReportFormat format);

}  // namespace uzpos

#endif  // UZPOS_EVALUATOR_HPP_

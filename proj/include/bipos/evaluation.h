// evaluation.h
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
//
// Test-text scoring: log total probability, perplexity and the adjusted
// variants that discount the spelling of unknown words.

#ifndef BIPOS_EVALUATION_H_
#define BIPOS_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipos/bipos_model.h"
#include "bipos/corpus.h"
#include "bipos/generalized_model.h"
#include "bipos/language_model.h"
#include "json.hpp"

namespace bipos {

// Texts up to this length also report the raw product of probabilities.
inline constexpr std::size_t kMaxTotalProbabilityWords = 64;

struct EvalResult {
  std::string model_kind;
  std::string regime;
  std::size_t n = 0;
  std::size_t n_seen = 0;
  std::size_t n_unseen = 0;
  std::size_t s = 0;  // occurrences of unknown words
  std::size_t r = 0;  // distinct unknown words
  double ltp = 0.0;
  double lp = 0.0;
  double pp = 0.0;
  double ltp_known = 0.0;
  double ltp_unseen = 0.0;
  double ltp_unknown = 0.0;
  double altp = 0.0;
  double app = 0.0;
  std::optional<double> tp;
  std::vector<EvalRecord> records;
};

struct Adjusted {
  double altp = 0.0;
  double app = 0.0;
};

// ALTP = LTP - s log2(max(r, 1)); APP = 2^(-ALTP / n). Requires r <= s and
// n > 0.
Adjusted Adjust(double ltp, std::size_t s, std::size_t r, std::size_t n);

// Scores every word of `test` in order. Raises Error if any word gets zero
// probability.
EvalResult Evaluate(const LanguageModel& model, const TaggedCorpus& test);

struct SweepConfig {
  TrainOptions train;
  // Fix the vocabulary on the whole training text instead of each prefix.
  bool fixed_vocab = false;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SweepRow {
  std::size_t size = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t r = 0;
  double ltp = 0.0;
  double ltp_known = 0.0;
  double ltp_unseen = 0.0;
  double ltp_unknown = 0.0;
  double pp = 0.0;
  double altp = 0.0;
  double app = 0.0;
};

// Trains on the first `size` tokens of `train` for each size and scores
// `test`. Rows follow the order of `sizes`.
std::vector<SweepRow> SweepTrainingSize(const TaggedCorpus& train, const TaggedCorpus& test,
                                        std::span<const std::size_t> sizes,
                                        const SweepConfig& config);

// Statistics over the words scored while the variable was not general.
struct SubsetStats {
  std::size_t n = 0;
  double ltp = 0.0;
  double pp = 0.0;
};

SubsetStats SpecificSubset(const EvalResult& result);

struct LambdaSearchResult {
  double lambda = 1.0;
  double ltp = 0.0;
  double base_ltp = 0.0;
  std::vector<std::pair<double, double>> grid;  // (lambda, LTP)
  SubsetStats base_subset;
  SubsetStats best_subset;
  EvalResult best;
};

// 0.1, 0.2, ..., 0.9.
std::vector<double> DefaultLambdaGrid();

// The grid value maximizing LTP on `test`. Values within 1e-9 (relative) of
// the best count as ties and the smallest lambda wins. The base model is
// scored as lambda = 1.
LambdaSearchResult GridSearchLambda(const GeneralizedModel& model, const TaggedCorpus& test,
                                    std::span<const double> grid = {});

nlohmann::json ToJson(const EvalResult& result, bool with_records = false);
nlohmann::json ToJson(const SweepRow& row);
nlohmann::json ToJson(const LambdaSearchResult& result);

}  // namespace bipos

#endif  // BIPOS_EVALUATION_H_

// simple_models.h
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
// Reference word models: uniform and N-gram.

#ifndef BIPOS_SIMPLE_MODELS_H_
#define BIPOS_SIMPLE_MODELS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipos/corpus.h"
#include "bipos/distributions.h"
#include "bipos/language_model.h"

namespace bipos {

// p(w) = 1/|V| for every vocabulary word and 0 otherwise.
class UniformModel : public LanguageModel {
 public:
  explicit UniformModel(Vocabulary vocab);

  std::string kind() const override { return "uniform"; }
  std::unique_ptr<StreamScorer> NewStream(const TaggedCorpus& test) const override;

  const Vocabulary& vocabulary() const { return vocab_; }
  double Prob(std::string_view word) const;

 private:
  Vocabulary vocab_;
};

struct NgramParams {
  int order = 2;
  Vocabulary vocabulary;
  // Histories hold order - 1 word ids; kUnknownWord and kSentenceBegin pad
  // them where no vocabulary word applies.
  FreqTable<std::vector<std::uint32_t>, WordId> counts;
  double d2 = 0.0;  // mass for words outside the vocabulary
  double v1 = 0.0;  // additive smoothing constant
};

// p(w | h) = (1 - d2) * ((1 - |V| v1) f(w | h) + v1) for vocabulary words and
// d2 otherwise. Histories never seen in training fall back to f(w).
class NgramModel : public LanguageModel {
 public:
  static constexpr std::uint32_t kUnknownWord = 0xFFFFFFFEu;
  static constexpr std::uint32_t kSentenceBegin = 0xFFFFFFFFu;

  explicit NgramModel(NgramParams params);

  // d2 is the Turing estimate distinct/total over `train` unless given.
  static NgramModel Train(const TaggedCorpus& train, int order, double v1 = 0.0,
                          std::optional<double> d2 = std::nullopt);

  std::string kind() const override { return order() == 1 ? "unigram" : "ngram"; }
  std::unique_ptr<StreamScorer> NewStream(const TaggedCorpus& test) const override;

  const NgramParams& params() const { return p_; }
  int order() const { return p_.order; }
  const Vocabulary& vocabulary() const { return p_.vocabulary; }

  // Probability of `word` after `history` (oldest first, already padded).
  double Prob(const std::vector<std::uint32_t>& history, std::string_view word) const;
  std::uint32_t Code(std::string_view word) const;

 private:
  NgramParams p_;
  std::vector<double> unigram_;
};

}  // namespace bipos

#endif  // BIPOS_SIMPLE_MODELS_H_

// generalized_model.h
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
// A bi-pos model that also conditions on a context variable X. When X is not
// "general" the word factor becomes
//
//   lambda * f(w | g) + (1 - lambda) * f(w | g, X)
//
// and, optionally, the tag factor is estimated from f(g | X) instead of
// f(g | previous tag).

#ifndef BIPOS_GENERALIZED_MODEL_H_
#define BIPOS_GENERALIZED_MODEL_H_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bipos/bipos_model.h"
#include "bipos/variables.h"

namespace bipos {

struct GeneralizedOptions {
  double lambda = 0.5;
  // Estimate the tag factor from f(g | X) whenever X is not "general".
  bool condition_tags = false;
  // Tags whose word distribution gets a specific estimate; empty means all.
  std::vector<std::string> specific_tags;
};

struct GeneralizedParams {
  VariableSpec variable;
  GeneralizedOptions options;
  FreqTable<std::pair<std::string, TagId>, WordId> specific_words;
  FreqTable<std::string, TagId> specific_tag_counts;
};

class GeneralizedModel : public LanguageModel {
 public:
  GeneralizedModel(std::shared_ptr<const BiposModel> base, GeneralizedParams params);

  // Walks `train` with the variable driven by the gold tags and counts words
  // and tags under every non-general value.
  static GeneralizedModel Train(std::shared_ptr<const BiposModel> base,
                                const TaggedCorpus& train, const VariableSpec& variable,
                                const GeneralizedOptions& options = {});

  std::string kind() const override { return "generalized"; }
  std::unique_ptr<StreamScorer> NewStream(const TaggedCorpus& test) const override;

  const BiposModel& base() const { return *base_; }
  const std::shared_ptr<const BiposModel>& base_ptr() const { return base_; }
  const GeneralizedParams& params() const { return p_; }
  double lambda() const { return p_.options.lambda; }
  void set_lambda(double lambda);
  std::unique_ptr<ContextVariable> MakeVariable() const { return bipos::MakeVariable(p_.variable); }

  double TagFactor(TagId prev, const std::string& value, TagId g) const;
  // The combined word factor; equals the base factor when X is general or
  // the tag has no specific counts under X.
  double WordFactor(WordId w, TagId g, const std::string& value) const;

  WordScore Score(std::string_view word, TagId prev, const std::string& value,
                  const SampleSpace& space = {}) const;
  TagId AssignTag(std::string_view word, TagId prev, const std::string& value) const;
  double CheckNormalization(TagId prev, const std::string& value,
                            const SampleSpace& space = {}) const;

 private:
  std::shared_ptr<const BiposModel> base_;
  GeneralizedParams p_;
};

}  // namespace bipos

#endif  // BIPOS_GENERALIZED_MODEL_H_

// generalized_model.cc
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

#include "bipos/generalized_model.h"

#include <algorithm>
#include <cmath>

namespace bipos {
namespace {

class GeneralizedStream : public StreamScorer {
 public:
  GeneralizedStream(const GeneralizedModel& model, const TaggedCorpus& test)
      : model_(model), variable_(model.MakeVariable()) {
    variable_->Reset();
    if (model.base().regime() == Regime::kM3) {
      for (const auto& tok : test.tokens()) {
        if (!model.base().vocabulary().Contains(tok.surface)) space_.AddUnseen(tok.surface);
      }
    }
  }

  EvalRecord Next(const Token& token, bool sentence_start) override {
    if (sentence_start) {
      prev_ = kBeginTag;
      variable_->StartSentence();
    }
    const std::string value = variable_->value();
    WordScore score = model_.Score(token.surface, prev_, value, space_);
    EvalRecord rec;
    rec.surface = token.surface;
    rec.word_class = score.word_class;
    rec.prev_tag = model_.base().tagset().Name(prev_);
    rec.variable_value = value;
    rec.probability = score.probability;
    rec.terms = std::move(score.terms);
    if (model_.base().regime() == Regime::kM2 && rec.word_class == WordClass::kUnknown) {
      space_.AddUnseen(token.surface);
    }
    prev_ = model_.AssignTag(token.surface, prev_, value);
    rec.assigned_tag = model_.base().tagset().Name(prev_);
    variable_->Observe(token.surface, rec.assigned_tag);
    return rec;
  }

 private:
  const GeneralizedModel& model_;
  std::unique_ptr<ContextVariable> variable_;
  SampleSpace space_;
  TagId prev_ = kBeginTag;
};

}  // namespace

GeneralizedModel::GeneralizedModel(std::shared_ptr<const BiposModel> base,
                                   GeneralizedParams params)
    : base_(std::move(base)), p_(std::move(params)) {
  if (!base_) throw Error("generalized model needs a base model");
  set_lambda(p_.options.lambda);
  for (const auto& t : p_.options.specific_tags) base_->tagset().Id(t);
}

GeneralizedModel GeneralizedModel::Train(std::shared_ptr<const BiposModel> base,
                                         const TaggedCorpus& train,
                                         const VariableSpec& variable,
                                         const GeneralizedOptions& options) {
  GeneralizedParams p;
  p.variable = variable;
  p.options = options;
  const Tagset& tags = base->tagset();
  std::vector<char> allowed(tags.size(), options.specific_tags.empty() ? 1 : 0);
  for (const auto& t : options.specific_tags) allowed[Index(tags.Id(t))] = 1;

  auto x = bipos::MakeVariable(variable);
  x->Reset();
  for (std::size_t i = 0; i < train.size(); ++i) {
    const Token& tok = train[i];
    if (train.IsSentenceStart(i)) x->StartSentence();
    const std::string& tag_name = train.tagset().Name(tok.tag);
    const std::string value = x->value();
    if (value != kGeneral) {
      const TagId g = tags.Id(tag_name);
      const auto w = base->vocabulary().Find(tok.surface);
      if (!w) throw Error("training word '" + tok.surface + "' is not in the vocabulary");
      if (allowed[Index(g)]) p.specific_words.Add({value, g}, *w);
      if (options.condition_tags) p.specific_tag_counts.Add(value, g);
    }
    x->Observe(tok.surface, tag_name);
  }
  return GeneralizedModel(std::move(base), std::move(p));
}

std::unique_ptr<StreamScorer> GeneralizedModel::NewStream(const TaggedCorpus& test) const {
  return std::make_unique<GeneralizedStream>(*this, test);
}

void GeneralizedModel::set_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error("lambda must lie in [0, 1]");
  p_.options.lambda = lambda;
}

double GeneralizedModel::TagFactor(TagId prev, const std::string& value, TagId g) const {
  if (p_.options.condition_tags && value != kGeneral) {
    const std::uint64_t total = p_.specific_tag_counts.Total(value);
    if (total > 0) {
      const double f = static_cast<double>(p_.specific_tag_counts.Count(value, g)) /
                       static_cast<double>(total);
      return base_->c1() * f + base_->c2();
    }
  }
  return base_->TagFactor(prev, g);
}

double GeneralizedModel::WordFactor(WordId w, TagId g, const std::string& value) const {
  const double general = base_->WordFactor(w, g);
  if (value == kGeneral) return general;
  const auto& rows = p_.specific_words.rows();
  const auto it = rows.find({value, g});
  if (it == rows.end() || it->second.total == 0) return general;
  const auto c = it->second.counts.find(w);
  const double specific =
      c == it->second.counts.end()
          ? 0.0
          : static_cast<double>(c->second) / static_cast<double>(it->second.total);
  const double lambda = p_.options.lambda;
  return lambda * general + (1.0 - lambda) * specific;
}

WordScore GeneralizedModel::Score(std::string_view word, TagId prev,
                                  const std::string& value,
                                  const SampleSpace& space) const {
  return base_->ScoreWith(
      word, space, [&](TagId g) { return TagFactor(prev, value, g); },
      [&](WordId w, TagId g) { return WordFactor(w, g, value); });
}

TagId GeneralizedModel::AssignTag(std::string_view word, TagId prev,
                                  const std::string& value) const {
  return base_->AssignTagWith(
      word, [&](TagId g) { return TagFactor(prev, value, g); },
      [&](WordId w, TagId g) { return WordFactor(w, g, value); });
}

double GeneralizedModel::CheckNormalization(TagId prev, const std::string& value,
                                            const SampleSpace& space) const {
  const BiposModel& m = *base_;
  double sum = 0.0;
  for (const auto& word : m.vocabulary().words()) {
    sum += Score(word, prev, value, space).probability;
  }
  sum += static_cast<double>(space.size()) * m.d1();
  if (m.regime() == Regime::kNew) {
    for (std::size_t g = 0; g < m.num_tags(); ++g) {
      sum += m.tag_unknown(TagId(g)) * TagFactor(prev, value, TagId(g));
    }
  } else {
    sum += m.d2();
  }
  return std::abs(sum - 1.0);
}

}  // namespace bipos

// simple_models.cc
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

#include "bipos/simple_models.h"

#include <algorithm>

#include "bipos/bipos_model.h"


namespace bipos {
namespace {

class UniformStream : public StreamScorer {
 public:
  explicit UniformStream(const UniformModel& model) : model_(model) {}

  EvalRecord Next(const Token& token, bool) override {
    EvalRecord rec;
    rec.surface = token.surface;
    rec.probability = model_.Prob(token.surface);
    rec.word_class = rec.probability > 0.0 ? WordClass::kSeen : WordClass::kUnknown;
    if (rec.probability > 0.0) rec.terms.push_back({TagId(0), 1.0, 1.0, rec.probability});
    return rec;
  }

 private:
  const UniformModel& model_;
};

class NgramStream : public StreamScorer {
 public:
  explicit NgramStream(const NgramModel& model) : model_(model) {}

  EvalRecord Next(const Token& token, bool sentence_start) override {
    const std::size_t h = static_cast<std::size_t>(model_.order() - 1);
    if (sentence_start) history_.assign(h, NgramModel::kSentenceBegin);
    EvalRecord rec;
    rec.surface = token.surface;
    rec.probability = model_.Prob(history_, token.surface);
    const bool known = model_.vocabulary().Contains(token.surface);
    rec.word_class = known ? WordClass::kSeen : WordClass::kUnknown;
    if (known) {
      const double scale = 1.0 - model_.params().d2;
      rec.terms.push_back({TagId(0), scale, 1.0, rec.probability / scale});
    }
    if (h > 0) {
      history_.erase(history_.begin());
      history_.push_back(model_.Code(token.surface));
    }
    return rec;
  }

 private:
  const NgramModel& model_;
  std::vector<std::uint32_t> history_;
};

}  // namespace

UniformModel::UniformModel(Vocabulary vocab) : vocab_(std::move(vocab)) {
  if (vocab_.size() == 0) throw Error("uniform model needs a non-empty vocabulary");
}

std::unique_ptr<StreamScorer> UniformModel::NewStream(const TaggedCorpus&) const {
  return std::make_unique<UniformStream>(*this);
}

double UniformModel::Prob(std::string_view word) const {
  return vocab_.Contains(word) ? 1.0 / static_cast<double>(vocab_.size()) : 0.0;
}

NgramModel::NgramModel(NgramParams params) : p_(std::move(params)) {
  if (p_.order < 1) throw Error("n-gram order must be at least 1");
  const double n = static_cast<double>(p_.vocabulary.size());
  if (n == 0) throw Error("n-gram model needs a non-empty vocabulary");
  if (!(p_.v1 >= 0.0) || p_.v1 * n >= 1.0) throw Error("v1 must lie in [0, 1/|V|)");
  if (!(p_.d2 >= 0.0) || p_.d2 >= 1.0) throw Error("d2 must lie in [0, 1)");
  unigram_.assign(p_.vocabulary.size(), 0.0);
  const double total = static_cast<double>(p_.counts.trials());
  if (total == 0) throw Error("n-gram model has no training events");
  for (const auto& [h, row] : p_.counts.rows()) {
    if (h.size() != static_cast<std::size_t>(p_.order - 1)) {
      throw Error("n-gram history has the wrong length");
    }
    for (const auto& [w, c] : row.counts) {
      if (Index(w) >= unigram_.size()) throw Error("n-gram word out of range");
      unigram_[Index(w)] += static_cast<double>(c);
    }
  }
  for (double& u : unigram_) u /= total;
}

NgramModel NgramModel::Train(const TaggedCorpus& train, int order, double v1,
                             std::optional<double> d2) {
  if (order < 1) throw Error("n-gram order must be at least 1");
  NgramParams p;
  p.order = order;
  p.v1 = v1;
  p.vocabulary = BuildVocabulary(train);
  if (train.empty()) throw Error("cannot train on an empty corpus");
  if (d2) {
    p.d2 = *d2;
  } else {
    const double turing =
        static_cast<double>(p.vocabulary.size()) / static_cast<double>(train.size());
    p.d2 = std::min(turing, kMaxUnknownRate);
  }
  std::vector<std::uint32_t> history;
  const std::size_t h = static_cast<std::size_t>(order - 1);
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (train.IsSentenceStart(i)) history.assign(h, kSentenceBegin);
    const WordId w = *p.vocabulary.Find(train[i].surface);
    p.counts.Add(history, w);
    if (h > 0) {
      history.erase(history.begin());
      history.push_back(static_cast<std::uint32_t>(w));
    }
  }
  return NgramModel(std::move(p));
}

std::unique_ptr<StreamScorer> NgramModel::NewStream(const TaggedCorpus&) const {
  return std::make_unique<NgramStream>(*this);
}

std::uint32_t NgramModel::Code(std::string_view word) const {
  const auto w = p_.vocabulary.Find(word);
  return w ? static_cast<std::uint32_t>(*w) : kUnknownWord;
}

double NgramModel::Prob(const std::vector<std::uint32_t>& history,
                        std::string_view word) const {
  const auto w = p_.vocabulary.Find(word);
  if (!w) return p_.d2;
  const double n = static_cast<double>(p_.vocabulary.size());
  const double v2 = 1.0 - n * p_.v1;
  const std::uint64_t total = p_.counts.Total(history);
  const double f = total > 0 ? static_cast<double>(p_.counts.Count(history, *w)) /
                                   static_cast<double>(total)
                             : unigram_[Index(*w)];
  return (1.0 - p_.d2) * (v2 * f + p_.v1);
}

}  // namespace bipos

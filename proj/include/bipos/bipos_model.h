// bipos_model.h
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
// The bi-pos model: the next word is predicted through its tag, and the tag
// through the tag of the previous word.
//
//   p(w | g') = k * sum_g (c1 * f(g | g') + c2) * f(w | g)
//
// where k reserves probability for unseen vocabulary words (d1 each) and for
// words outside the vocabulary.

#ifndef BIPOS_BIPOS_MODEL_H_
#define BIPOS_BIPOS_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bipos/char_model.h"
#include "bipos/corpus.h"
#include "bipos/distributions.h"
#include "bipos/language_model.h"

namespace bipos {

// How a model treats words it has not seen in training.
//   kM1   fixed vocabulary; unknown words get the constant d2.
//   kM2   an unknown word gets d2 once, then joins the vocabulary as unseen.
//   kM3   every word of the test text is added to the vocabulary up front.
//   kM4   like kM1, with d2 spread over spellings by a character model.
//   kNew  per-tag unknown rates d_g replace d2.
enum class Regime { kM1, kM2, kM3, kM4, kNew };

std::string_view RegimeName(Regime r);
Regime ParseRegime(std::string_view name);

// The largest unknown-word rate a model will use, as a fraction of the mass
// left after unseen words. Keeps every seen word's scale positive when a tag
// occurs only once.
inline constexpr double kMaxUnknownRate = 0.95;

struct TrainOptions {
  double c2 = 1e-4;
  double d1 = 1e-6;
  // Replaces the Turing estimate of d2. Zero closes the vocabulary.
  std::optional<double> d2;
  Regime regime = Regime::kM1;
};

// Words added to the vocabulary during evaluation.
class SampleSpace {
 public:
  void AddUnseen(std::string_view word) { added_.emplace(word); }
  bool Contains(std::string_view word) const { return added_.find(word) != added_.end(); }
  std::size_t size() const { return added_.size(); }

 private:
  std::unordered_set<std::string, StringHash, std::equal_to<>> added_;
};

struct TagCount {
  TagId tag{};
  std::uint64_t count = 0;
};

struct WordScore {
  double probability = 0.0;
  WordClass word_class = WordClass::kSeen;
  std::vector<Term> terms;
};

// Everything a trained model persists. Derived tables are rebuilt from it.
struct BiposParams {
  Tagset tagset;
  Vocabulary vocabulary;
  FreqTable<TagId, TagId> transitions;  // context (kBeginTag allowed) -> tag
  FreqTable<TagId, WordId> emissions;   // tag -> word
  double c2 = 1e-4;
  double d1 = 1e-6;
  double d2 = 0.0;
  double d2_turing = 0.0;
  std::vector<double> tag_unknown;  // d_g, indexed by tag
  Regime regime = Regime::kM1;
  CharUnknownModel char_model;
};

class BiposModel : public LanguageModel {
 public:
  explicit BiposModel(BiposParams params);

  // The model's tagset holds the tags that occur in `train`, in the order of
  // the corpus tagset. Every training word must be in `vocab`.
  static BiposModel Train(const TaggedCorpus& train, const Vocabulary& vocab,
                          const TrainOptions& options = {});

  std::string kind() const override { return "bipos"; }
  std::unique_ptr<StreamScorer> NewStream(const TaggedCorpus& test) const override;

  const BiposParams& params() const { return p_; }
  const Tagset& tagset() const { return p_.tagset; }
  const Vocabulary& vocabulary() const { return p_.vocabulary; }
  std::size_t num_tags() const { return p_.tagset.size(); }
  double c1() const { return c1_; }
  double c2() const { return p_.c2; }
  double d1() const { return p_.d1; }
  double d2() const { return p_.d2; }
  double tag_unknown(TagId g) const { return p_.tag_unknown[Index(g)]; }
  std::size_t unseen_count() const { return unseen_; }
  std::size_t training_tokens() const { return p_.emissions.trials(); }
  Regime regime() const { return p_.regime; }
  void set_regime(Regime r) { p_.regime = r; }

  // f(g | prev); a context never followed by a tag in training backs off to
  // the tag unigram distribution.
  double TagFrequency(TagId prev, TagId g) const;
  // c1 * f(g | prev) + c2.
  double TagFactor(TagId prev, TagId g) const;
  // f(w | g).
  double WordFactor(WordId w, TagId g) const;
  std::span<const TagCount> TagsOf(WordId w) const { return word_tags_[Index(w)]; }
  std::uint64_t TagCountOf(TagId g) const { return tag_totals_[Index(g)]; }

  WordClass Classify(std::string_view word, const SampleSpace& space = {}) const;
  // Mass left for seen words that carry tag g.
  double SeenScale(TagId g, const SampleSpace& space = {}) const;

  WordScore Score(std::string_view word, TagId prev,
                  const SampleSpace& space = {}) const;
  double ProbWord(std::string_view word, TagId prev,
                  const SampleSpace& space = {}) const {
    return Score(word, prev, space).probability;
  }

  // Score with replacement factors. `tag_factor(g)` stands in for
  // TagFactor(prev, g) and `word_factor(w, g)` for WordFactor(w, g).
  using TagFactorFn = std::function<double(TagId)>;
  using WordFactorFn = std::function<double(WordId, TagId)>;
  WordScore ScoreWith(std::string_view word, const SampleSpace& space,
                      const TagFactorFn& tag_factor,
                      const WordFactorFn& word_factor) const;

  // The tag for `word` after `prev`: the likeliest tag after prev when the
  // word has no training tags, its only tag when it has one, otherwise the
  // tag contributing most to its probability. Ties go to the earlier tag.
  TagId AssignTag(std::string_view word, TagId prev) const;
  TagId AssignTagWith(std::string_view word, const TagFactorFn& tag_factor,
                      const WordFactorFn& word_factor) const;

  // Total probability given to words outside the vocabulary after prev.
  double UnknownMass(TagId prev, const SampleSpace& space = {}) const;

  // |sum over the sample space of p(. | prev) - 1|, by exhaustive summation.
  double CheckNormalization(TagId prev, const SampleSpace& space = {}) const;

 private:
  std::size_t Row(TagId prev) const;
  double SeenScaleWith(TagId g, std::size_t u) const;

  BiposParams p_;
  double c1_ = 1.0;
  std::size_t unseen_ = 0;
  std::vector<double> trans_prob_;  // (T + 1) x T, row T is the begin context
  std::vector<std::uint64_t> tag_totals_;
  std::vector<std::vector<TagCount>> word_tags_;
};

// Builds a Vocabulary from a word list, one word per line.
Vocabulary ReadWordList(const std::filesystem::path& path);

}  // namespace bipos

#endif  // BIPOS_BIPOS_MODEL_H_

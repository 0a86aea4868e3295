// bipos_model.cc
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

#include "bipos/bipos_model.h"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace bipos {
namespace {

class BiposStream : public StreamScorer {
 public:
  BiposStream(const BiposModel& model, const TaggedCorpus& test) : model_(model) {
    if (model.regime() == Regime::kM3) {
      for (const auto& tok : test.tokens()) {
        if (!model.vocabulary().Contains(tok.surface)) space_.AddUnseen(tok.surface);
      }
    }
  }

  EvalRecord Next(const Token& token, bool sentence_start) override {
    if (sentence_start) prev_ = kBeginTag;
    WordScore score = model_.Score(token.surface, prev_, space_);
    EvalRecord rec;
    rec.surface = token.surface;
    rec.word_class = score.word_class;
    rec.prev_tag = model_.tagset().Name(prev_);
    rec.probability = score.probability;
    rec.terms = std::move(score.terms);
    if (model_.regime() == Regime::kM2 && rec.word_class == WordClass::kUnknown) {
      space_.AddUnseen(token.surface);
    }
    prev_ = model_.AssignTag(token.surface, prev_);
    rec.assigned_tag = model_.tagset().Name(prev_);
    return rec;
  }

 private:
  const BiposModel& model_;
  SampleSpace space_;
  TagId prev_ = kBeginTag;
};

std::size_t ArgMax(std::size_t n, const std::function<double(std::size_t)>& f) {
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(i);
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  return best;
}

}  // namespace

std::string_view RegimeName(Regime r) {
  switch (r) {
    case Regime::kM1: return "m1";
    case Regime::kM2: return "m2";
    case Regime::kM3: return "m3";
    case Regime::kM4: return "m4";
    case Regime::kNew: return "new";
  }
  return "m1";
}

Regime ParseRegime(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Regime r : {Regime::kM1, Regime::kM2, Regime::kM3, Regime::kM4, Regime::kNew}) {
    if (lower == RegimeName(r)) return r;
  }
  throw Error("unknown regime '" + std::string(name) +
              "'; expected one of m1, m2, m3, m4, new");
}

BiposModel::BiposModel(BiposParams params) : p_(std::move(params)) {
  const std::size_t T = p_.tagset.size();
  if (T == 0) throw Error("model has no tags");
  if (!(p_.c2 >= 0.0) || p_.c2 * static_cast<double>(T) >= 1.0) {
    throw Error("c2 must lie in [0, 1/|G|)");
  }
  c1_ = 1.0 - static_cast<double>(T) * p_.c2;
  if (!(p_.d1 >= 0.0) || !(p_.d2 >= 0.0) || p_.d2 >= 1.0) {
    throw Error("d1 must be non-negative and d2 must lie in [0, 1)");
  }
  if (p_.tag_unknown.size() != T) throw Error("one unknown rate per tag is required");

  tag_totals_.assign(T, 0);
  word_tags_.assign(p_.vocabulary.size(), {});
  for (const auto& [g, row] : p_.emissions.rows()) {
    if (Index(g) >= T) throw Error("emission table names a tag outside the tagset");
    tag_totals_[Index(g)] = row.total;
    for (const auto& [w, n] : row.counts) {
      if (Index(w) >= word_tags_.size()) {
        throw Error("emission table names a word outside the vocabulary");
      }
      word_tags_[Index(w)].push_back({g, n});
    }
  }
  const std::uint64_t n_tokens = p_.emissions.trials();
  if (n_tokens == 0) throw Error("model has no training tokens");
  for (std::size_t g = 0; g < T; ++g) {
    if (tag_totals_[g] == 0) {
      throw Error("tag " + p_.tagset.tags()[g] + " has no training words");
    }
  }
  unseen_ = 0;
  for (const auto& tags : word_tags_) unseen_ += tags.empty() ? 1 : 0;

  const double rest = 1.0 - static_cast<double>(unseen_) * p_.d1;
  if (!(p_.d2 < rest)) throw Error("unseen and unknown mass leave nothing for seen words");
  for (double d : p_.tag_unknown) {
    if (!(d >= 0.0) || !(d < rest)) throw Error("per-tag unknown rate out of range");
  }

  trans_prob_.assign((T + 1) * T, 0.0);
  for (std::size_t r = 0; r <= T; ++r) {
    const TagId ctx = r == T ? kBeginTag : TagId(r);
    const std::uint64_t total = p_.transitions.Total(ctx);
    for (std::size_t g = 0; g < T; ++g) {
      trans_prob_[r * T + g] =
          total > 0 ? static_cast<double>(p_.transitions.Count(ctx, TagId(g))) /
                          static_cast<double>(total)
                    : static_cast<double>(tag_totals_[g]) / static_cast<double>(n_tokens);
    }
  }
  for (const auto& [ctx, row] : p_.transitions.rows()) {
    if (ctx != kBeginTag && Index(ctx) >= T) {
      throw Error("transition table names a context outside the tagset");
    }
    for (const auto& [g, n] : row.counts) {
      if (Index(g) >= T) throw Error("transition table names a tag outside the tagset");
    }
  }
}

BiposModel BiposModel::Train(const TaggedCorpus& train, const Vocabulary& vocab,
                             const TrainOptions& options) {
  if (train.empty()) throw Error("cannot train on an empty corpus");
  const Tagset& full = train.tagset();
  std::vector<char> present(full.size(), 0);
  for (const auto& tok : train.tokens()) present[Index(tok.tag)] = 1;
  std::vector<std::string> active;
  std::vector<TagId> remap(full.size(), kBeginTag);
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (!present[i]) continue;
    remap[i] = TagId(active.size());
    active.push_back(full.tags()[i]);
  }

  BiposParams p;
  p.tagset = Tagset(full.name(), active);
  p.vocabulary = vocab;
  p.c2 = options.c2;
  p.d1 = options.d1;
  p.regime = options.regime;

  std::vector<char> seen(vocab.size(), 0);
  std::vector<std::string> seen_words;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const Token& tok = train[i];
    const TagId g = remap[Index(tok.tag)];
    const TagId ctx = train.IsSentenceStart(i) ? kBeginTag : remap[Index(train[i - 1].tag)];
    p.transitions.Add(ctx, g);
    const auto w = vocab.Find(tok.surface);
    if (!w) throw Error("training word '" + tok.surface + "' is not in the vocabulary");
    p.emissions.Add(g, *w);
    if (!seen[Index(*w)]) {
      seen[Index(*w)] = 1;
      seen_words.push_back(tok.surface);
    }
  }

  std::size_t unseen = 0;
  for (char s : seen) unseen += s ? 0 : 1;
  const double rest = 1.0 - static_cast<double>(unseen) * p.d1;
  if (!(rest > 0.0)) {
    throw Error(std::to_string(unseen) + " unseen words at d1 = " + std::to_string(p.d1) +
                " leave no probability for seen words");
  }
  const double cap = kMaxUnknownRate * rest;

  p.d2_turing = vocab.token_count() > 0
                    ? static_cast<double>(vocab.size()) / static_cast<double>(vocab.token_count())
                    : static_cast<double>(seen_words.size()) / static_cast<double>(train.size());
  p.d2 = options.d2 ? *options.d2 : std::min(p.d2_turing, cap);

  for (const auto& [g, row] : p.emissions.rows()) {
    const double rate = static_cast<double>(row.counts.size()) / static_cast<double>(row.total);
    (void)g;
    p.tag_unknown.push_back(std::min(rate, cap));
  }
  p.char_model = CharUnknownModel::Train(seen_words);
  return BiposModel(std::move(p));
}

std::unique_ptr<StreamScorer> BiposModel::NewStream(const TaggedCorpus& test) const {
  return std::make_unique<BiposStream>(*this, test);
}

std::size_t BiposModel::Row(TagId prev) const {
  if (prev == kBeginTag) return num_tags();
  if (Index(prev) >= num_tags()) throw Error("context tag out of range");
  return Index(prev);
}

double BiposModel::TagFrequency(TagId prev, TagId g) const {
  return trans_prob_[Row(prev) * num_tags() + Index(g)];
}

double BiposModel::TagFactor(TagId prev, TagId g) const {
  return c1_ * TagFrequency(prev, g) + p_.c2;
}

double BiposModel::WordFactor(WordId w, TagId g) const {
  for (const TagCount& tc : TagsOf(w)) {
    if (tc.tag == g) {
      return static_cast<double>(tc.count) / static_cast<double>(tag_totals_[Index(g)]);
    }
  }
  return 0.0;
}

WordClass BiposModel::Classify(std::string_view word, const SampleSpace& space) const {
  if (auto w = p_.vocabulary.Find(word)) {
    return TagsOf(*w).empty() ? WordClass::kUnseen : WordClass::kSeen;
  }
  return space.Contains(word) ? WordClass::kUnseen : WordClass::kUnknown;
}

double BiposModel::SeenScaleWith(TagId g, std::size_t u) const {
  const double d = p_.regime == Regime::kNew ? p_.tag_unknown[Index(g)] : p_.d2;
  const double k = 1.0 - static_cast<double>(u) * p_.d1 - d;
  if (!(k > 0.0)) {
    throw Error("unseen words exhaust the probability mass (" + std::to_string(u) +
                " unseen words at d1 = " + std::to_string(p_.d1) + ")");
  }
  return k;
}

double BiposModel::SeenScale(TagId g, const SampleSpace& space) const {
  return SeenScaleWith(g, unseen_ + space.size());
}

WordScore BiposModel::Score(std::string_view word, TagId prev,
                            const SampleSpace& space) const {
  const std::size_t row = Row(prev);
  const std::size_t T = num_tags();
  return ScoreWith(
      word, space,
      [&](TagId g) { return c1_ * trans_prob_[row * T + Index(g)] + p_.c2; },
      [&](WordId w, TagId g) { return WordFactor(w, g); });
}

WordScore BiposModel::ScoreWith(std::string_view word, const SampleSpace& space,
                                const TagFactorFn& tag_factor,
                                const WordFactorFn& word_factor) const {
  WordScore s;
  s.word_class = Classify(word, space);
  const std::size_t u = unseen_ + space.size();
  switch (s.word_class) {
    case WordClass::kUnseen:
      SeenScaleWith(TagId(0), u);
      s.probability = p_.d1;
      break;
    case WordClass::kUnknown:
      if (p_.regime == Regime::kNew) {
        for (std::size_t g = 0; g < num_tags(); ++g) {
          Term t{TagId(g), p_.tag_unknown[g], tag_factor(TagId(g)), 1.0};
          s.probability += t.value();
          s.terms.push_back(t);
        }
      } else if (p_.regime == Regime::kM4) {
        s.probability = p_.d2 * p_.char_model.NormalizedProb(word);
      } else {
        s.probability = p_.d2;
      }
      break;
    case WordClass::kSeen: {
      const WordId w = *p_.vocabulary.Find(word);
      for (const TagCount& tc : TagsOf(w)) {
        Term t{tc.tag, SeenScaleWith(tc.tag, u), tag_factor(tc.tag), word_factor(w, tc.tag)};
        s.probability += t.value();
        s.terms.push_back(t);
      }
      break;
    }
  }
  return s;
}

TagId BiposModel::AssignTag(std::string_view word, TagId prev) const {
  const std::size_t row = Row(prev);
  const std::size_t T = num_tags();
  return AssignTagWith(
      word, [&](TagId g) { return c1_ * trans_prob_[row * T + Index(g)] + p_.c2; },
      [&](WordId w, TagId g) { return WordFactor(w, g); });
}

TagId BiposModel::AssignTagWith(std::string_view word, const TagFactorFn& tag_factor,
                                const WordFactorFn& word_factor) const {
  const auto w = p_.vocabulary.Find(word);
  if (!w || TagsOf(*w).empty()) {
    return TagId(ArgMax(num_tags(), [&](std::size_t g) { return tag_factor(TagId(g)); }));
  }
  const auto tags = TagsOf(*w);
  if (tags.size() == 1) return tags[0].tag;
  const std::size_t best = ArgMax(tags.size(), [&](std::size_t i) {
    const TagId g = tags[i].tag;
    return SeenScaleWith(g, unseen_) * tag_factor(g) * word_factor(*w, g);
  });
  return tags[best].tag;
}

double BiposModel::UnknownMass(TagId prev, const SampleSpace& space) const {
  (void)space;
  if (p_.regime != Regime::kNew) return p_.d2;
  double mass = 0.0;
  for (std::size_t g = 0; g < num_tags(); ++g) {
    mass += p_.tag_unknown[g] * TagFactor(prev, TagId(g));
  }
  return mass;
}

double BiposModel::CheckNormalization(TagId prev, const SampleSpace& space) const {
  double sum = 0.0;
  for (const auto& word : p_.vocabulary.words()) sum += ProbWord(word, prev, space);
  sum += static_cast<double>(space.size()) * p_.d1;
  sum += UnknownMass(prev, space);
  return std::abs(sum - 1.0);
}

Vocabulary ReadWordList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list " + path.string());
  Vocabulary v(path.filename().string());
  std::string word;
  while (in >> word) v.Add(word);
  return v;
}

}  // namespace bipos

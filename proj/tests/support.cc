// support.cc
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

#include "support.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace bipos::testing {
namespace {

std::size_t Draw(std::mt19937_64& rng, const std::vector<double>& weights) {
  std::discrete_distribution<std::size_t> d(weights.begin(), weights.end());
  return d(rng);
}

}  // namespace

std::string DataPath(const std::string& relative) {
  return std::string(BIPOS_DATA_DIR) + "/" + relative;
}

TaggedCorpus MakeSyntheticCorpus(const SyntheticSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::string> tags;
  for (int t = 0; t < spec.num_tags; ++t) tags.push_back("T" + std::to_string(t));
  TaggedCorpus corpus(Tagset("synthetic", tags));

  std::vector<std::vector<double>> trans(spec.num_tags + 1, std::vector<double>(spec.num_tags));
  for (auto& row : trans) {
    for (double& x : row) x = 0.05 + unit(rng);
  }
  // Word lists per tag; ambiguous words appear in two tags.
  std::vector<std::vector<std::string>> words(spec.num_tags);
  for (int w = 0; w < spec.words; ++w) {
    const std::string name = "w" + std::to_string(w);
    const int g = w % spec.num_tags;
    words[g].push_back(name);
    if (!spec.one_tag_per_word && w % 3 == 0 && spec.num_tags > 1) {
      words[(g + 1) % spec.num_tags].push_back(name);
    }
  }
  // With fewer words than tags, the leftover tags reuse earlier words.
  for (int g = 0; g < spec.num_tags; ++g) {
    if (words[g].empty()) words[g].push_back("w" + std::to_string(g % spec.words));
  }
  std::vector<std::vector<double>> zipf(spec.num_tags);
  for (int g = 0; g < spec.num_tags; ++g) {
    for (std::size_t i = 0; i < words[g].size(); ++i) zipf[g].push_back(1.0 / (i + 1.0));
  }

  int prev = spec.num_tags;  // sentence start row
  for (std::size_t i = 0; i < spec.tokens; ++i) {
    const int g = static_cast<int>(Draw(rng, trans[prev]));
    const std::string& w = words[g][Draw(rng, zipf[g])];
    corpus.Add({w, TagId(static_cast<std::uint32_t>(g)), tags[g]}, prev == spec.num_tags);
    prev = unit(rng) < spec.sentence_end ? spec.num_tags : g;
  }
  return corpus;
}

TaggedCorpus MakeOpenClassCorpus(std::size_t tokens, std::uint64_t seed) {
  // Tags: DET, PREP, PUNCT are closed; NOUN, VERB, ADJ are open.
  const std::vector<std::string> tags = {"DET", "NOUN", "VERB", "PREP", "ADJ", "PUNCT"};
  TaggedCorpus corpus(Tagset("openclass", tags));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<std::vector<double>> trans = {
      // DET   NOUN  VERB  PREP  ADJ   PUNCT
      {0.00, 0.70, 0.00, 0.00, 0.30, 0.00},  // DET
      {0.02, 0.08, 0.40, 0.30, 0.00, 0.20},  // NOUN
      {0.50, 0.15, 0.00, 0.25, 0.10, 0.00},  // VERB
      {0.80, 0.15, 0.00, 0.00, 0.05, 0.00},  // PREP
      {0.00, 0.85, 0.00, 0.00, 0.15, 0.00},  // ADJ
      {0.60, 0.30, 0.00, 0.05, 0.05, 0.00},  // PUNCT
      {0.70, 0.20, 0.00, 0.05, 0.05, 0.00},  // sentence start
  };
  const std::vector<std::vector<std::string>> closed = {
      {"the", "a", "this", "that"}, {}, {}, {"in", "of", "on", "to", "by"}, {}, {".", ","}};
  const std::vector<std::string> prefix = {"", "noun", "verb", "", "adj", ""};
  // Chance an open-class slot gets a word never used before, and the Zipf
  // exponent of the reused words.
  const std::vector<double> fresh = {0, 0.30, 0.05, 0, 0.20, 0};
  const std::vector<double> tail = {0, 1.1, 1.3, 0, 1.2, 0};
  std::size_t next_fresh = 0;
  std::size_t prev = tags.size();
  for (std::size_t i = 0; i < tokens; ++i) {
    const std::size_t g = Draw(rng, trans[prev]);
    std::string w;
    if (!closed[g].empty()) {
      w = closed[g][static_cast<std::size_t>(unit(rng) * closed[g].size())];
    } else if (unit(rng) < fresh[g]) {
      w = prefix[g] + "x" + std::to_string(next_fresh++);
    } else {
      const double k = std::floor(std::pow(1.0 - unit(rng), -1.0 / tail[g]));
      w = prefix[g] + std::to_string(static_cast<long long>(std::min(k, 1e9)));
    }
    corpus.Add({w, TagId(static_cast<std::uint32_t>(g)), tags[g]}, prev == tags.size());
    prev = (w == ".") ? tags.size() : g;
  }
  return corpus;
}

TaggedCorpus MicroCorpus() {
  return ReadLobFile(DataPath("fixtures/micro/corpus.txt"),
                     TagMap::Load(DataPath("fixtures/micro/micro.map")));
}

BigramOracle::BigramOracle(const TaggedCorpus& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string prev = corpus.IsSentenceStart(i) ? "<s>" : corpus[i - 1].surface;
    ++pairs_[{prev, corpus[i].surface}];
    ++histories_[prev];
  }
}

double BigramOracle::Prob(const std::string& prev, const std::string& word) const {
  auto h = histories_.find(prev);
  if (h == histories_.end()) return 0.0;
  auto p = pairs_.find({prev, word});
  const std::uint64_t n = p == pairs_.end() ? 0 : p->second;
  return static_cast<double>(n) / static_cast<double>(h->second);
}

ClassModelOracle::ClassModelOracle(const TaggedCorpus& train, double c2) : c2_(c2) {
  for (std::size_t i = 0; i < train.size(); ++i) {
    const std::string tag = train.tagset().Name(train[i].tag);
    const std::string prev =
        train.IsSentenceStart(i) ? "<s>" : train.tagset().Name(train[i - 1].tag);
    ++tag_counts_[tag];
    ++trans_[prev][tag];
    ++emit_[train[i].surface][tag];
    ++n_;
  }
  c1_ = 1.0 - static_cast<double>(tag_counts_.size()) * c2;
}

double ClassModelOracle::SeenProb(const std::string& prev_tag, const std::string& word,
                                  double scale) const {
  const auto& tags = emit_.at(word);
  auto row = trans_.find(prev_tag);
  std::uint64_t row_total = 0;
  if (row != trans_.end()) {
    for (const auto& [g, n] : row->second) row_total += n;
  }
  double sum = 0.0;
  for (const auto& [g, n] : tags) {
    double f;
    if (row_total > 0) {
      auto it = row->second.find(g);
      f = it == row->second.end() ? 0.0 : static_cast<double>(it->second) / row_total;
    } else {
      f = static_cast<double>(tag_counts_.at(g)) / static_cast<double>(n_);
    }
    sum += (c1_ * f + c2_) * static_cast<double>(n) / static_cast<double>(tag_counts_.at(g));
  }
  return scale * sum;
}

}  // namespace bipos::testing

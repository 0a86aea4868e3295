// support.h
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
// Test fixtures and independent oracles.

#ifndef BIPOS_TESTS_SUPPORT_H_
#define BIPOS_TESTS_SUPPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bipos/corpus.h"

namespace bipos::testing {

std::string DataPath(const std::string& relative);

// Parameters of a random hidden class-based generator.
struct SyntheticSpec {
  int num_tags = 4;
  int words = 30;             // distinct word types available to the generator
  std::size_t tokens = 500;
  double sentence_end = 0.1;  // chance a sentence ends after each word
  bool one_tag_per_word = false;
  std::uint64_t seed = 1;
};

// Tags are named T0, T1, ...; the corpus tagset lists all of them.
TaggedCorpus MakeSyntheticCorpus(const SyntheticSpec& spec);

// A text where some tags are closed classes with few, frequent words and the
// rest are open classes drawing from a long tail. Held-out text from the same
// generator has many unknown open-class words.
TaggedCorpus MakeOpenClassCorpus(std::size_t tokens, std::uint64_t seed);

// The shipped six-tag fixture.
TaggedCorpus MicroCorpus();

// Bigram relative frequencies with "<s>" as the sentence-start history.
class BigramOracle {
 public:
  explicit BigramOracle(const TaggedCorpus& corpus);
  double Prob(const std::string& prev, const std::string& word) const;

 private:
  std::map<std::pair<std::string, std::string>, std::uint64_t> pairs_;
  std::map<std::string, std::uint64_t> histories_;
};

// The class-model probability recomputed from raw counts of `train`:
//   k * sum_g (c1 f(g | prev) + c2) f(w | g)
// over the tags observed in `train`. Sentence-start history is "<s>". A
// history never followed by a tag uses the tag unigram distribution.
class ClassModelOracle {
 public:
  ClassModelOracle(const TaggedCorpus& train, double c2);
  // Probability of a training word; `scale` is k.
  double SeenProb(const std::string& prev_tag, const std::string& word, double scale) const;
  std::size_t num_tags() const { return tag_counts_.size(); }

 private:
  double c1_, c2_;
  std::uint64_t n_ = 0;
  std::map<std::string, std::uint64_t> tag_counts_;
  std::map<std::string, std::map<std::string, std::uint64_t>> trans_;
  std::map<std::string, std::map<std::string, std::uint64_t>> emit_;  // word -> tag -> n
};

}  // namespace bipos::testing

#endif  // BIPOS_TESTS_SUPPORT_H_

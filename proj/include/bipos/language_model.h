// language_model.h
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
// The interface every model exposes to evaluation, and the per-word record
// that evaluation produces.

#ifndef BIPOS_LANGUAGE_MODEL_H_
#define BIPOS_LANGUAGE_MODEL_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bipos/corpus.h"
#include "bipos/types.h"

namespace bipos {

enum class WordClass { kSeen, kUnseen, kUnknown };

std::string_view WordClassName(WordClass c);

// One summand of a class-based word probability: scale * tag_factor *
// word_factor. Unknown words under per-tag unknown estimation use the
// per-tag unknown rate as `scale` and 1 as `word_factor`.
struct Term {
  TagId tag{};
  double scale = 1.0;
  double tag_factor = 1.0;
  double word_factor = 1.0;

  double value() const { return scale * tag_factor * word_factor; }
};

struct EvalRecord {
  std::size_t index = 0;
  std::string surface;
  WordClass word_class = WordClass::kSeen;
  std::string prev_tag;      // tag the model conditioned on
  std::string assigned_tag;  // tag the model chose for this word
  std::string gold_tag;      // tag in the test text
  std::string variable_value;
  double probability = 0.0;
  double log2p = 0.0;
  std::vector<Term> terms;
};

// Scores a text left to right, carrying whatever state the model needs.
class StreamScorer {
 public:
  virtual ~StreamScorer() = default;
  // Scores `token` and then advances past it. Fills every field except
  // index, gold_tag and log2p.
  virtual EvalRecord Next(const Token& token, bool sentence_start) = 0;
};

class LanguageModel {
 public:
  virtual ~LanguageModel() = default;
  virtual std::string kind() const = 0;
  // The returned scorer refers to this model, which must outlive it.
  virtual std::unique_ptr<StreamScorer> NewStream(const TaggedCorpus& test) const = 0;
};

}  // namespace bipos

#endif  // BIPOS_LANGUAGE_MODEL_H_

// char_model.h
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
// Character-level model for spelling out unknown words.

#ifndef BIPOS_CHAR_MODEL_H_
#define BIPOS_CHAR_MODEL_H_

#include <string>
#include <string_view>
#include <vector>

#include "bipos/types.h"

namespace bipos {

// A zeroth-order model over the 95 printable ASCII characters plus an
// end-of-word symbol. Prob(w) = prod p(c) * p(end).
class CharUnknownModel {
 public:
  static constexpr int kAlphabetSize = 95;
  static constexpr int kSymbols = kAlphabetSize + 1;
  static constexpr char kFirstChar = ' ';

  // Every symbol equally likely.
  CharUnknownModel();
  // Probabilities indexed by character code minus ' ', end symbol last.
  explicit CharUnknownModel(std::vector<double> probs);

  // Add-one estimate from the characters of `words`. Words containing
  // characters outside the alphabet are ignored.
  static CharUnknownModel Train(const std::vector<std::string>& words);

  // Throws Error for an empty word or a character outside the alphabet.
  double Prob(std::string_view word) const;
  // Prob renormalized over non-empty strings, so it sums to one over every
  // possible unknown word.
  double NormalizedProb(std::string_view word) const;

  double end_prob() const { return probs_.back(); }
  const std::vector<double>& probs() const { return probs_; }

  static bool InAlphabet(char c) { return c >= ' ' && c <= '~'; }

 private:
  std::vector<double> probs_;
};

}  // namespace bipos

#endif  // BIPOS_CHAR_MODEL_H_

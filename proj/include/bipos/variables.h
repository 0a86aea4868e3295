// variables.h
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
// Context variables: extra state carried along a text that a generalized
// model conditions on.

#ifndef BIPOS_VARIABLES_H_
#define BIPOS_VARIABLES_H_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bipos {

inline const std::string kGeneral = "general";
inline const std::string kSpecific = "specific";

// A variable is queried for its value before each word and then told the
// word and its tag.
class ContextVariable {
 public:
  virtual ~ContextVariable() = default;
  virtual std::string name() const = 0;
  // Returns to the state at the start of a text.
  virtual void Reset() = 0;
  // Called before the first word of every sentence.
  virtual void StartSentence() = 0;
  virtual const std::string& value() const = 0;
  virtual void Observe(std::string_view surface, std::string_view tag) = 0;
  virtual std::unique_ptr<ContextVariable> Clone() const = 0;
};

struct VariableSpec {
  enum class Kind { kSingular, kDuring, kRandom, kPreviousWord };
  Kind kind = Kind::kSingular;
  double p = 0.0;          // kRandom: probability of "specific"
  std::uint64_t seed = 0;  // kRandom
  // Tags that keep a noun phrase open, matched by prefix.
  std::vector<std::string> continuation_prefixes = {"JJ", "JNP", "N", "R"};
};

// Accepts "singular", "during", "prevword", "random:P" and "random:P:SEED".
// `default_seed` applies when a random spec names no seed.
VariableSpec ParseVariableSpec(std::string_view text, std::uint64_t default_seed = 0);
std::string FormatVariableSpec(const VariableSpec& spec);

std::unique_ptr<ContextVariable> MakeVariable(const VariableSpec& spec);

// SINGULAR, DURING and RANDOM(p, seed).
std::vector<std::unique_ptr<ContextVariable>> BuiltinVariables(double random_p,
                                                               std::uint64_t seed);

// "specific" from a trigger word up to the first word whose tag does not
// continue the noun phrase. Triggers match case-insensitively. A tag in
// `openers` may directly follow the trigger without closing the phrase.
class NounPhraseVariable : public ContextVariable {
 public:
  NounPhraseVariable(std::string name, std::vector<std::string> triggers,
                     std::vector<std::string> continuation_prefixes,
                     std::vector<std::string> openers = {});

  std::string name() const override { return name_; }
  void Reset() override;
  void StartSentence() override { Reset(); }
  const std::string& value() const override { return specific_ ? kSpecific : kGeneral; }
  void Observe(std::string_view surface, std::string_view tag) override;
  std::unique_ptr<ContextVariable> Clone() const override;

 private:
  std::string name_;
  std::vector<std::string> triggers_;
  std::vector<std::string> continuation_;
  std::vector<std::string> openers_;
  bool specific_ = false;
  bool just_triggered_ = false;
};

// "specific" with probability p at every position, independently.
class RandomVariable : public ContextVariable {
 public:
  RandomVariable(double p, std::uint64_t seed);

  std::string name() const override;
  void Reset() override;
  void StartSentence() override {}
  const std::string& value() const override { return specific_ ? kSpecific : kGeneral; }
  void Observe(std::string_view, std::string_view) override { Draw(); }
  std::unique_ptr<ContextVariable> Clone() const override;

 private:
  void Draw();

  double p_;
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool specific_ = false;
};

// The identity of the previous word, or "<s>" at a sentence start. Values are
// prefixed with "w:" so no word collides with the general value.
class PreviousWordVariable : public ContextVariable {
 public:
  std::string name() const override { return "prevword"; }
  void Reset() override { value_ = "w:<s>"; }
  void StartSentence() override { Reset(); }
  const std::string& value() const override { return value_; }
  void Observe(std::string_view surface, std::string_view) override;
  std::unique_ptr<ContextVariable> Clone() const override;

 private:
  std::string value_ = "w:<s>";
};

}  // namespace bipos

#endif  // BIPOS_VARIABLES_H_

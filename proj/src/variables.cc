// variables.cc
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

#include "bipos/variables.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bipos/types.h"

namespace bipos {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool HasPrefix(std::string_view tag, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes) {
    if (tag.substr(0, p.size()) == p) return true;
  }
  return false;
}

double ParseDouble(std::string_view s, std::string_view what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

VariableSpec ParseVariableSpec(std::string_view text, std::uint64_t default_seed) {
  VariableSpec spec;
  const std::string t = Lower(text);
  if (t == "singular") {
    spec.kind = VariableSpec::Kind::kSingular;
  } else if (t == "during") {
    spec.kind = VariableSpec::Kind::kDuring;
  } else if (t == "prevword") {
    spec.kind = VariableSpec::Kind::kPreviousWord;
  } else if (t.rfind("random:", 0) == 0) {
    spec.kind = VariableSpec::Kind::kRandom;
    std::string_view rest = std::string_view(t).substr(7);
    const auto colon = rest.find(':');
    spec.p = ParseDouble(rest.substr(0, colon), "probability");
    spec.seed = default_seed;
    if (colon != std::string_view::npos) {
      const auto s = rest.substr(colon + 1);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), spec.seed);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error("cannot parse seed '" + std::string(s) + "'");
      }
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw Error("random probability must lie in [0, 1]");
  } else {
    throw Error("unknown variable '" + std::string(text) +
                "'; expected singular, during, prevword or random:P[:SEED]");
  }
  return spec;
}

std::string FormatVariableSpec(const VariableSpec& spec) {
  switch (spec.kind) {
    case VariableSpec::Kind::kSingular: return "singular";
    case VariableSpec::Kind::kDuring: return "during";
    case VariableSpec::Kind::kPreviousWord: return "prevword";
    case VariableSpec::Kind::kRandom: {
      std::ostringstream os;
      os.precision(17);
      os << "random:" << spec.p << ':' << spec.seed;
      return os.str();
    }
  }
  return "singular";
}

std::unique_ptr<ContextVariable> MakeVariable(const VariableSpec& spec) {
  switch (spec.kind) {
    case VariableSpec::Kind::kSingular:
      return std::make_unique<NounPhraseVariable>(
          "singular", std::vector<std::string>{"this", "a", "an"},
          spec.continuation_prefixes);
    case VariableSpec::Kind::kDuring:
      return std::make_unique<NounPhraseVariable>(
          "during", std::vector<std::string>{"during"}, spec.continuation_prefixes,
          std::vector<std::string>{"AT", "DT"});
    case VariableSpec::Kind::kRandom:
      return std::make_unique<RandomVariable>(spec.p, spec.seed);
    case VariableSpec::Kind::kPreviousWord:
      return std::make_unique<PreviousWordVariable>();
  }
  throw Error("unknown variable kind");
}

std::vector<std::unique_ptr<ContextVariable>> BuiltinVariables(double random_p,
                                                               std::uint64_t seed) {
  std::vector<std::unique_ptr<ContextVariable>> out;
  out.push_back(MakeVariable(ParseVariableSpec("singular")));
  out.push_back(MakeVariable(ParseVariableSpec("during")));
  VariableSpec r;
  r.kind = VariableSpec::Kind::kRandom;
  r.p = random_p;
  r.seed = seed;
  out.push_back(MakeVariable(r));
  return out;
}

NounPhraseVariable::NounPhraseVariable(std::string name, std::vector<std::string> triggers,
                                       std::vector<std::string> continuation_prefixes,
                                       std::vector<std::string> openers)
    : name_(std::move(name)),
      continuation_(std::move(continuation_prefixes)),
      openers_(std::move(openers)) {
  for (const auto& t : triggers) triggers_.push_back(Lower(t));
}

void NounPhraseVariable::Reset() {
  specific_ = false;
  just_triggered_ = false;
}

void NounPhraseVariable::Observe(std::string_view surface, std::string_view tag) {
  const std::string lower = Lower(surface);
  if (std::find(triggers_.begin(), triggers_.end(), lower) != triggers_.end()) {
    specific_ = true;
    just_triggered_ = true;
    return;
  }
  if (specific_) {
    specific_ = HasPrefix(tag, continuation_) || (just_triggered_ && HasPrefix(tag, openers_));
  }
  just_triggered_ = false;
}

std::unique_ptr<ContextVariable> NounPhraseVariable::Clone() const {
  return std::make_unique<NounPhraseVariable>(*this);
}

RandomVariable::RandomVariable(double p, std::uint64_t seed) : p_(p), seed_(seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("random probability must lie in [0, 1]");
  Reset();
}

std::string RandomVariable::name() const {
  std::ostringstream os;
  os.precision(17);
  os << "random:" << p_ << ':' << seed_;
  return os.str();
}

void RandomVariable::Reset() {
  engine_.seed(seed_);
  Draw();
}

void RandomVariable::Draw() {
  // 53 random bits scaled into [0, 1); identical on every platform.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  specific_ = u < p_;
}

std::unique_ptr<ContextVariable> RandomVariable::Clone() const {
  return std::make_unique<RandomVariable>(*this);
}

void PreviousWordVariable::Observe(std::string_view surface, std::string_view) {
  value_ = "w:";
  value_ += surface;
}

std::unique_ptr<ContextVariable> PreviousWordVariable::Clone() const {
  return std::make_unique<PreviousWordVariable>(*this);
}

}  // namespace bipos

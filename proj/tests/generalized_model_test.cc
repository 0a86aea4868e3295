// generalized_model_test.cc
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

#include <gtest/gtest.h>

#include <memory>

#include "bipos/evaluation.h"
#include "support.h"

namespace bipos {
namespace {

std::shared_ptr<const BiposModel> Base(const TaggedCorpus& train, TrainOptions opts = {}) {
  return std::make_shared<const BiposModel>(
      BiposModel::Train(train, BuildVocabulary(train), opts));
}

TEST(GeneralizedModelTest, LambdaOneMatchesBaseModel) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  const auto [train, test] = SplitCorpus(corpus, 1500);
  const auto base = Base(train);
  const GeneralizedModel model =
      GeneralizedModel::Train(base, train, ParseVariableSpec("singular"), {.lambda = 1.0});
  const EvalResult a = Evaluate(*base, test);
  const EvalResult b = Evaluate(model, test);
  EXPECT_NEAR(a.ltp, b.ltp, 1e-9 * std::abs(a.ltp));
}

TEST(GeneralizedModelTest, SpecificValuesStayNormalized) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  const auto base = Base(corpus);
  for (const char* spec : {"singular", "during", "random:0.3:5", "prevword"}) {
    for (bool cond : {false, true}) {
      const GeneralizedModel model = GeneralizedModel::Train(
          base, corpus, ParseVariableSpec(spec), {.lambda = 0.3, .condition_tags = cond});
      for (const std::string value : {std::string(kGeneral), std::string(kSpecific),
                                      std::string("w:the"), std::string("w:<s>")}) {
        for (std::size_t t = 0; t <= base->num_tags(); ++t) {
          const TagId prev = t == base->num_tags() ? kBeginTag : TagId(t);
          EXPECT_LT(model.CheckNormalization(prev, value), 1e-9) << spec << " " << value;
        }
      }
    }
  }
}

TEST(GeneralizedModelTest, PreviousWordReducesToBigram) {
  const TaggedCorpus corpus = testing::MakeSyntheticCorpus({.tokens = 300, .seed = 21});
  const auto base = Base(corpus, {.c2 = 0.0, .d1 = 1e-6, .d2 = 0.0});
  const GeneralizedModel model = GeneralizedModel::Train(
      base, corpus, ParseVariableSpec("prevword"), {.lambda = 0.0, .condition_tags = true});
  const testing::BigramOracle oracle(corpus);
  const EvalResult r = Evaluate(model, corpus);
  std::string prev = "<s>";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus.IsSentenceStart(i)) prev = "<s>";
    EXPECT_NEAR(r.records[i].probability, oracle.Prob(prev, corpus[i].surface), 1e-12) << i;
    prev = corpus[i].surface;
  }
}

TEST(GeneralizedModelTest, SpecificTagsLimitTheSpecificEstimates) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  const auto base = Base(corpus);
  const GeneralizedModel model = GeneralizedModel::Train(
      base, corpus, ParseVariableSpec("singular"), {.lambda = 0.2, .specific_tags = {"N"}});
  const TagId jj = base->tagset().Id("JJ");
  for (std::size_t w = 0; w < base->vocabulary().size(); ++w) {
    const WordId id{static_cast<std::uint32_t>(w)};
    EXPECT_DOUBLE_EQ(model.WordFactor(id, jj, kSpecific), base->WordFactor(id, jj));
  }
  EXPECT_FALSE(model.params().specific_words.rows().empty());
  EXPECT_THROW(GeneralizedModel::Train(base, corpus, ParseVariableSpec("singular"),
                                       {.specific_tags = {"NOPE"}}),
               Error);
}

TEST(GeneralizedModelTest, StreamDrivesVariableWithAssignedTags) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  const auto base = Base(corpus);
  const GeneralizedModel model =
      GeneralizedModel::Train(base, corpus, ParseVariableSpec("singular"));
  const EvalResult r = Evaluate(model, corpus);
  auto x = model.MakeVariable();
  x->Reset();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus.IsSentenceStart(i)) x->StartSentence();
    EXPECT_EQ(r.records[i].variable_value, x->value()) << i;
    x->Observe(corpus[i].surface, r.records[i].assigned_tag);
  }
}

TEST(GeneralizedModelTest, RejectsLambdaOutsideUnitInterval) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  GeneralizedModel model =
      GeneralizedModel::Train(Base(corpus), corpus, ParseVariableSpec("during"));
  EXPECT_THROW(model.set_lambda(1.5), Error);
  EXPECT_THROW(model.set_lambda(-0.1), Error);
}

}  // namespace
}  // namespace bipos

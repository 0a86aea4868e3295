// evaluation_test.cc
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

#include "bipos/evaluation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "bipos/simple_models.h"
#include "support.h"

namespace bipos {
namespace {

// Every word gets the same probability.
class ConstantModel : public LanguageModel {
 public:
  explicit ConstantModel(double p) : p_(p) {}
  std::string kind() const override { return "constant"; }
  std::unique_ptr<StreamScorer> NewStream(const TaggedCorpus&) const override {
    struct Stream : StreamScorer {
      double p;
      EvalRecord Next(const Token& t, bool) override {
        EvalRecord r;
        r.surface = t.surface;
        r.probability = p;
        return r;
      }
    };
    auto s = std::make_unique<Stream>();
    s->p = p_;
    return s;
  }

 private:
  double p_;
};

const TagMap& SmallMap() {
  static const TagMap map = TagMap::Identity("small", {"AT", "N", "V"});
  return map;
}

TEST(AdjustTest, WorkedValues) {
  const Adjusted a = Adjust(-10.0, 3, 2, 5);
  EXPECT_DOUBLE_EQ(a.altp, -13.0);
  EXPECT_NEAR(a.app, std::pow(2.0, 2.6), 1e-12);
  EXPECT_NEAR(a.app, 6.063, 1e-3);
  EXPECT_DOUBLE_EQ(Adjust(-10.0, 0, 0, 5).altp, -10.0);
  EXPECT_DOUBLE_EQ(Adjust(-10.0, 4, 1, 5).altp, -10.0);
  EXPECT_THROW(Adjust(-1.0, 1, 2, 5), Error);
  EXPECT_THROW(Adjust(-1.0, 0, 0, 0), Error);
}

TEST(EvaluateTest, SingleHalfWord) {
  const TaggedCorpus text = ReadLobString("^ a_AT", SmallMap());
  const EvalResult r = Evaluate(ConstantModel(0.5), text);
  EXPECT_DOUBLE_EQ(r.ltp, -1.0);
  EXPECT_DOUBLE_EQ(r.pp, 2.0);
  EXPECT_DOUBLE_EQ(r.lp, 1.0);
  EXPECT_DOUBLE_EQ(r.altp, r.ltp);
  EXPECT_DOUBLE_EQ(r.app, r.pp);
}

TEST(EvaluateTest, ZeroProbabilityIsAnError) {
  const TaggedCorpus text = ReadLobString("^ a_AT", SmallMap());
  EXPECT_THROW(Evaluate(ConstantModel(0.0), text), Error);
  EXPECT_THROW(Evaluate(ConstantModel(0.5), TaggedCorpus{}), Error);
}

class EvaluateMicroTest : public ::testing::TestWithParam<Regime> {};

TEST_P(EvaluateMicroTest, AccountingIdentities) {
  const auto [train, test] = SplitCorpus(testing::MicroCorpus(), 1500);
  const BiposModel m = BiposModel::Train(train, BuildVocabulary(train), {.regime = GetParam()});
  const EvalResult r = Evaluate(m, test);
  EXPECT_EQ(r.n, test.size());
  EXPECT_EQ(r.n_seen + r.n_unseen + r.s, r.n);
  EXPECT_NEAR(r.ltp, r.ltp_known + r.ltp_unseen + r.ltp_unknown, 1e-9);
  EXPECT_NEAR(r.pp, std::exp2(-r.ltp / r.n), 1e-9 * r.pp);
  EXPECT_NEAR(r.altp, r.ltp - r.s * std::log2(std::max<std::size_t>(r.r, 1)), 1e-9);
  double sum = 0.0;
  for (const auto& rec : r.records) sum += rec.log2p;
  EXPECT_NEAR(sum, r.ltp, 1e-9);
  const EvalResult again = Evaluate(m, test);
  EXPECT_EQ(again.ltp, r.ltp);
}

INSTANTIATE_TEST_SUITE_P(Regimes, EvaluateMicroTest,
                         ::testing::Values(Regime::kM1, Regime::kM2, Regime::kM3,
                                           Regime::kM4, Regime::kNew));

TEST(EvaluateTest, ShortTextTotalProbabilityMatchesPerplexity) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  const auto [train, test] = SplitCorpus(corpus, corpus.size() - 40);
  const EvalResult r = Evaluate(BiposModel::Train(train, BuildVocabulary(train)), test);
  ASSERT_TRUE(r.tp.has_value());
  EXPECT_NEAR(std::pow(*r.tp, -1.0 / r.n), r.pp, 1e-9 * r.pp);
}

TEST(SweepTest, RowsAreConsistent) {
  const auto [train, test] = SplitCorpus(testing::MicroCorpus(), 1500);
  const std::vector<std::size_t> sizes = {200, 500, 1000, 1500};
  for (bool fixed : {false, true}) {
    const auto rows = SweepTrainingSize(train, test, sizes, {.fixed_vocab = fixed, .threads = 2});
    ASSERT_EQ(rows.size(), sizes.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(rows[i].size, sizes[i]);
      EXPECT_NEAR(rows[i].ltp, rows[i].ltp_known + rows[i].ltp_unseen + rows[i].ltp_unknown,
                  1e-9);
      if (fixed) {
        EXPECT_DOUBLE_EQ(rows[i].ltp_unknown, rows[0].ltp_unknown);
        EXPECT_EQ(rows[i].s, rows[0].s);
      }
    }
    if (!fixed) EXPECT_GE(rows[0].s, rows.back().s);
  }
  const std::vector<std::size_t> bad = {0};
  EXPECT_THROW(SweepTrainingSize(train, test, bad, {}), Error);
}

TEST(GridSearchLambdaTest, SpecificContextWinsWithSmallLambda) {
  std::string text;
  for (int i = 0; i < 10; ++i) text += "^ a_AT dog_N runs_V\n^ the_AT cat_N runs_V\n";
  const TaggedCorpus corpus = ReadLobString(text, SmallMap());
  auto base = std::make_shared<const BiposModel>(
      BiposModel::Train(corpus, BuildVocabulary(corpus)));
  const GeneralizedModel model =
      GeneralizedModel::Train(base, corpus, ParseVariableSpec("singular"));
  const LambdaSearchResult r = GridSearchLambda(model, corpus);
  EXPECT_DOUBLE_EQ(r.lambda, 0.1);
  EXPECT_GT(r.ltp, r.base_ltp);
  EXPECT_EQ(r.grid.size(), 9u);
  EXPECT_EQ(r.best_subset.n, 20u);
  EXPECT_GT(r.best_subset.ltp, r.base_subset.ltp);
}

TEST(GridSearchLambdaTest, VariableThatNeverFiresTies) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  auto base = std::make_shared<const BiposModel>(
      BiposModel::Train(corpus, BuildVocabulary(corpus)));
  const GeneralizedModel model =
      GeneralizedModel::Train(base, corpus, ParseVariableSpec("random:0"));
  const LambdaSearchResult r = GridSearchLambda(model, corpus);
  EXPECT_DOUBLE_EQ(r.lambda, 0.1);
  for (const auto& [lambda, ltp] : r.grid) EXPECT_DOUBLE_EQ(ltp, r.base_ltp) << lambda;
  EXPECT_EQ(r.best_subset.n, 0u);
}

TEST(GridSearchLambdaTest, IdenticalDistributionsTie) {
  const TaggedCorpus corpus = testing::MicroCorpus();
  auto base = std::make_shared<const BiposModel>(
      BiposModel::Train(corpus, BuildVocabulary(corpus)));
  const GeneralizedModel model =
      GeneralizedModel::Train(base, corpus, ParseVariableSpec("random:1"));
  const LambdaSearchResult r = GridSearchLambda(model, corpus);
  EXPECT_DOUBLE_EQ(r.lambda, 0.1);
  for (const auto& [lambda, ltp] : r.grid) EXPECT_NEAR(ltp, r.base_ltp, 1e-9 * -r.base_ltp);
}

TEST(GridSearchLambdaTest, DefaultGrid) {
  const auto grid = DefaultLambdaGrid();
  ASSERT_EQ(grid.size(), 9u);
  EXPECT_DOUBLE_EQ(grid.front(), 0.1);
  EXPECT_DOUBLE_EQ(grid.back(), 0.9);
}

}  // namespace
}  // namespace bipos

// corpus_test.cc
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

#include "bipos/corpus.h"

#include <gtest/gtest.h>

#include <sstream>

#include "support.h"

namespace bipos {
namespace {

using testing::DataPath;

TagMap SmallMap() {
  return TagMap("lob", "small",
                {{"ATI", "AT"}, {"NN", "N"}, {"NNS", "N"}, {"NPT", "N"}, {"NP$", "N"},
                 {"VBD", "V"}, {".", "."}});
}

TEST(TagsetTest, FindsTagsInOrder) {
  Tagset t("x", {"A", "B", "C"});
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(Index(t.Id("B")), 1u);
  EXPECT_FALSE(t.Find("D").has_value());
  EXPECT_EQ(t.Name(TagId(2)), "C");
  EXPECT_EQ(t.Name(kBeginTag), "<s>");
  EXPECT_THROW(t.Id("D"), Error);
}

TEST(TagsetTest, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(Tagset("x", {"A", "A"}), Error);
  EXPECT_THROW(Tagset("x", {}), Error);
}

TEST(TagMapTest, ParsesNamesAndPairs) {
  std::istringstream in("# source: raw\n# target: merged\n# comment\nNN\tN\n\nNNS\tN\nVB V\n");
  TagMap m = TagMap::Parse(in, "fallback");
  EXPECT_EQ(m.source_name(), "raw");
  EXPECT_EQ(m.target_name(), "merged");
  EXPECT_EQ(m.target().tags(), (std::vector<std::string>{"N", "V"}));
  EXPECT_EQ(m.Merge("NNS"), "N");
  EXPECT_EQ(MergeTag("VB", m), "V");
}

TEST(TagMapTest, UnknownTagErrorNamesTag) {
  TagMap m = SmallMap();
  try {
    m.Merge("XYZ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("XYZ"), std::string::npos);
  }
}

TEST(TagMapTest, ConflictingEntriesAreRejected) {
  EXPECT_THROW(TagMap("a", "b", {{"NN", "N"}, {"NN", "V"}}), Error);
  EXPECT_NO_THROW(TagMap("a", "b", {{"NN", "N"}, {"NN", "N"}}));
}

TEST(TagMapTest, ShippedMapsHaveTheirSizes) {
  for (const auto& [file, size] : std::vector<std::pair<std::string, std::size_t>>{
           {"lob-135.map", 135}, {"lob-88.map", 88}, {"lob-42.map", 42}, {"lob-24.map", 24}}) {
    const TagMap m = TagMap::Load(DataPath("tagmaps/" + file));
    EXPECT_EQ(m.target().size(), size) << file;
    EXPECT_EQ(m.raw_tags().size(), 135u) << file;
  }
}

TEST(TagMapTest, KnownProjections) {
  EXPECT_EQ(TagMap::Load(DataPath("tagmaps/lob-42.map")).Merge("NPT"), "NP");
  EXPECT_EQ(TagMap::Load(DataPath("tagmaps/lob-24.map")).Merge("VBZ"), "V");
  EXPECT_EQ(TagMap::Load(DataPath("tagmaps/lob-42.map")).Merge("PP$$"), "P");
  EXPECT_EQ(TagMap::Load(DataPath("tagmaps/lob-24.map")).Merge("("), "BR");
}

TEST(TagMapTest, MergingThroughEightyEightMatchesDirectMap) {
  const TagMap to88 = TagMap::Load(DataPath("tagmaps/lob-88.map"));
  const TagMap to42 = TagMap::Load(DataPath("tagmaps/lob-42.map"));
  const TagMap via = to88.Then(TagMap::Load(DataPath("tagmaps/tags88-42.map")));
  for (const auto& raw : to42.raw_tags()) EXPECT_EQ(via.Merge(raw), to42.Merge(raw)) << raw;
}

TEST(ReadLobTest, ParsesPrefixesBoundariesAndEscapes) {
  const std::string text =
      "A01 1 ^ The_ATI \\0Mr_NPT dog_NN ._.\n"
      "  A01 2 ^ \\OMr_NPT x_y_NN ran_VBD stray dogs_NNS ._.\n";
  ReadStats stats;
  const TaggedCorpus c = ReadLobString(text, SmallMap(), &stats);
  ASSERT_EQ(c.size(), 9u);
  EXPECT_EQ(c[1].surface, "Mr");
  EXPECT_EQ(c[4].surface, "Mr");
  EXPECT_EQ(c[5].surface, "x_y");
  EXPECT_EQ(c[5].raw_tag, "NN");
  EXPECT_EQ(c.tagset().Name(c[1].tag), "N");
  EXPECT_EQ(c.sentence_starts(), (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(stats.skipped_items, 1u);
  EXPECT_EQ(stats.lines, 2u);
}

TEST(ReadLobTest, UnescapesTags) {
  const TaggedCorpus c = ReadLobString("^ John_NP\\$ ._.", SmallMap());
  EXPECT_EQ(c[0].raw_tag, "NP$");
}

TEST(ReadLobTest, UnmappedTagNamesTagAndLine) {
  try {
    ReadLobString("^ a_NN\n^ b_QQ\n", SmallMap());
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("QQ"), std::string::npos);
    EXPECT_NE(msg.find("line 2"), std::string::npos);
  }
}

TEST(ReadLobTest, FirstTokenStartsASentence) {
  const TaggedCorpus c = ReadLobString("a_NN b_NN", SmallMap());
  EXPECT_EQ(c.sentence_starts(), (std::vector<std::size_t>{0}));
}

TEST(ReadLobTest, WriteThenReadRoundTrips) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    testing::SyntheticSpec spec;
    spec.seed = seed;
    spec.tokens = 200;
    const TaggedCorpus c = testing::MakeSyntheticCorpus(spec);
    std::ostringstream out;
    WriteLob(out, c);
    const TaggedCorpus back =
        ReadLobString(out.str(), TagMap::Identity("synthetic", c.tagset().tags()));
    ASSERT_EQ(back.tokens(), c.tokens()) << seed;
    ASSERT_EQ(back.sentence_starts(), c.sentence_starts()) << seed;
  }
}

TEST(SplitCorpusTest, KeepsBoundariesAndStartsTestAtZero) {
  const TaggedCorpus c = ReadLobString("^ a_NN b_NN ^ c_NN d_NN e_NN ^ f_NN", SmallMap());
  const auto [train, test] = SplitCorpus(c, 4);
  EXPECT_EQ(train.size(), 4u);
  EXPECT_EQ(test.size(), 2u);
  EXPECT_EQ(train.sentence_starts(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(test.sentence_starts(), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(SplitCorpus(c, 7), Error);
}

TEST(VocabularyTest, FirstAppearanceOrderAndCounts) {
  const TaggedCorpus c = ReadLobString("^ b_NN a_NN b_NN c_NN", SmallMap());
  const Vocabulary v = BuildVocabulary(c);
  EXPECT_EQ(v.words(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(v.token_count(), 4u);
  EXPECT_TRUE(v.Contains("a"));
  EXPECT_FALSE(v.Contains("d"));
}

TEST(FixtureTest, MicroCorpusHasSixTags) {
  const TaggedCorpus c = testing::MicroCorpus();
  EXPECT_EQ(c.tagset().size(), 6u);
  EXPECT_GT(c.size(), 1800u);
  EXPECT_LT(c.size(), 2600u);
}

}  // namespace
}  // namespace bipos

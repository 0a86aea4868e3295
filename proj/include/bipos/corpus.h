// corpus.h
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
// Tagged corpora in the LOB layout, tag maps and vocabularies.

#ifndef BIPOS_CORPUS_H_
#define BIPOS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bipos/types.h"

namespace bipos {

// An ordered set of tag names. Order is significant: ties in tag selection
// resolve to the earliest tag.
class Tagset {
 public:
  Tagset() = default;
  Tagset(std::string name, std::vector<std::string> tags);

  const std::string& name() const { return name_; }
  std::size_t size() const { return tags_.size(); }
  bool empty() const { return tags_.empty(); }
  const std::vector<std::string>& tags() const { return tags_; }

  std::optional<TagId> Find(std::string_view tag) const;
  // Throws Error if the tag is not in the set.
  TagId Id(std::string_view tag) const;
  // Returns "<s>" for kBeginTag.
  const std::string& Name(TagId id) const;

  bool operator==(const Tagset& other) const {
    return name_ == other.name_ && tags_ == other.tags_;
  }

 private:
  std::string name_;
  std::vector<std::string> tags_;
  std::unordered_map<std::string, TagId, StringHash, std::equal_to<>> index_;
};

// A total function from raw tags onto a merged tagset.
//
// Map files hold one "raw<TAB>merged" pair per line. Lines starting with '#'
// are comments, except "# source: NAME" and "# target: NAME" which name the
// two tagsets. The target tagset is ordered by first appearance.
class TagMap {
 public:
  TagMap() = default;
  TagMap(std::string source, std::string target,
         const std::vector<std::pair<std::string, std::string>>& entries);

  static TagMap Load(const std::filesystem::path& path);
  static TagMap Parse(std::istream& in, std::string_view default_name);
  // Maps every tag onto itself.
  static TagMap Identity(std::string name, const std::vector<std::string>& tags);

  const std::string& source_name() const { return source_; }
  const std::string& target_name() const { return target_.name(); }
  const Tagset& target() const { return target_; }
  const std::vector<std::string>& raw_tags() const { return raw_order_; }

  std::optional<std::string_view> Lookup(std::string_view raw) const;
  // Throws Error naming the tag if it is not mapped.
  const std::string& Merge(std::string_view raw) const;

  // The map that applies this map and then `next`. Every image of this map
  // must be a raw tag of `next`.
  TagMap Then(const TagMap& next) const;

 private:
  std::string source_;
  Tagset target_;
  std::vector<std::string> raw_order_;
  std::unordered_map<std::string, std::string, StringHash, std::equal_to<>> map_;
};

// Free-function form of TagMap::Merge.
std::string MergeTag(std::string_view raw, const TagMap& map);

struct Token {
  std::string surface;
  TagId tag{};          // merged tag, indexing the corpus tagset
  std::string raw_tag;  // tag as written in the source text

  bool operator==(const Token&) const = default;
};

// A sequence of tagged tokens with sentence boundaries.
class TaggedCorpus {
 public:
  TaggedCorpus() = default;
  explicit TaggedCorpus(Tagset tagset) : tagset_(std::move(tagset)) {}

  // The first token of a corpus always starts a sentence.
  void Add(Token token, bool sentence_start);

  const Tagset& tagset() const { return tagset_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const std::vector<std::size_t>& sentence_starts() const { return starts_; }
  bool IsSentenceStart(std::size_t i) const { return start_flags_[i] != 0; }

  // Tokens [begin, end). Boundaries inside the range are kept and the first
  // token becomes a sentence start.
  TaggedCorpus Slice(std::size_t begin, std::size_t end) const;

 private:
  Tagset tagset_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> starts_;
  std::vector<char> start_flags_;
};

struct ReadStats {
  std::size_t lines = 0;
  std::size_t tokens = 0;
  std::size_t skipped_items = 0;  // items without an underscore
};

// Parses LOB-layout text: whitespace separated "word_TAG" items, '^' marking
// the start of a sentence, and an optional "A01 23" reference prefix per line.
// Raw tags are merged through `map`; an unmapped tag raises Error naming the
// tag and the line.
TaggedCorpus ReadLob(std::istream& in, const TagMap& map,
                     ReadStats* stats = nullptr);
TaggedCorpus ReadLobFile(const std::filesystem::path& path, const TagMap& map,
                         ReadStats* stats = nullptr);
TaggedCorpus ReadLobString(std::string_view text, const TagMap& map,
                           ReadStats* stats = nullptr);

// Writes one sentence per line using the raw tags. ReadLob on the output
// with the same map reproduces the corpus.
void WriteLob(std::ostream& out, const TaggedCorpus& corpus);

// Splits after the first `n_train` tokens.
std::pair<TaggedCorpus, TaggedCorpus> SplitCorpus(const TaggedCorpus& corpus,
                                                  std::size_t n_train);

// The set of words a model may assign non-unknown probability to. It also
// records the size of the text it was fixed from, which the Turing estimate
// of unknown-word probability uses.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::string source) : source_(std::move(source)) {}

  WordId Add(std::string_view word);
  std::optional<WordId> Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word).has_value(); }
  const std::string& Word(WordId id) const { return words_[Index(id)]; }
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  const std::string& source() const { return source_; }
  std::size_t token_count() const { return token_count_; }
  void set_token_count(std::size_t n) { token_count_ = n; }

 private:
  std::string source_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId, StringHash, std::equal_to<>> index_;
  std::size_t token_count_ = 0;
};

// Words in order of first appearance; token_count is the corpus size.
Vocabulary BuildVocabulary(const TaggedCorpus& corpus,
                           std::string source = "train");

}  // namespace bipos

#endif  // BIPOS_CORPUS_H_

// corpus.cc
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

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <unordered_set>

namespace bipos {
namespace {

const std::string kBeginName = "<s>";

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// LOB marks abbreviations and some capitals with a leading "\0"; OCR'd copies
// spell it "\O".
std::string StripEscapes(std::string_view surface) {
  while (surface.size() > 2 && surface[0] == '\\' &&
         (surface[1] == '0' || surface[1] == 'O')) {
    surface.remove_prefix(2);
  }
  return std::string(surface);
}

std::string UnescapeTag(std::string_view tag) {
  std::string out;
  out.reserve(tag.size());
  for (std::size_t i = 0; i < tag.size(); ++i) {
    if (tag[i] == '\\' && i + 1 < tag.size()) continue;
    out.push_back(tag[i]);
  }
  return out;
}

}  // namespace

Tagset::Tagset(std::string name, std::vector<std::string> tags)
    : name_(std::move(name)), tags_(std::move(tags)) {
  if (tags_.empty()) throw Error("tagset '" + name_ + "' is empty");
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (tags_[i].empty()) throw Error("tagset '" + name_ + "' has an empty tag");
    if (!index_.emplace(tags_[i], TagId(i)).second) {
      throw Error("tagset '" + name_ + "' repeats tag " + tags_[i]);
    }
  }
}

std::optional<TagId> Tagset::Find(std::string_view tag) const {
  auto it = index_.find(tag);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TagId Tagset::Id(std::string_view tag) const {
  if (auto id = Find(tag)) return *id;
  throw Error("tag '" + std::string(tag) + "' is not in tagset '" + name_ + "'");
}

const std::string& Tagset::Name(TagId id) const {
  if (id == kBeginTag) return kBeginName;
  if (Index(id) >= tags_.size()) throw Error("tag id out of range");
  return tags_[Index(id)];
}

TagMap::TagMap(std::string source, std::string target,
               const std::vector<std::pair<std::string, std::string>>& entries)
    : source_(std::move(source)) {
  std::vector<std::string> targets;
  std::unordered_set<std::string> seen_targets;
  for (const auto& [raw, merged] : entries) {
    if (raw.empty() || merged.empty()) {
      throw Error("tag map '" + source_ + "' has an empty entry");
    }
    auto [it, inserted] = map_.emplace(raw, merged);
    if (!inserted) {
      if (it->second != merged) {
        throw Error("tag map '" + source_ + "' maps " + raw + " to both " +
                    it->second + " and " + merged);
      }
      continue;
    }
    raw_order_.push_back(raw);
    if (seen_targets.insert(merged).second) targets.push_back(merged);
  }
  target_ = Tagset(std::move(target), std::move(targets));
}

TagMap TagMap::Parse(std::istream& in, std::string_view default_name) {
  std::string source(default_name), target(default_name);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = Trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = Trim(std::string_view(t).substr(1));
      if (body.rfind("source:", 0) == 0) source = Trim(body.substr(7));
      if (body.rfind("target:", 0) == 0) target = Trim(body.substr(7));
      continue;
    }
    std::istringstream fields(t);
    std::string raw, merged, extra;
    if (!(fields >> raw >> merged) || (fields >> extra)) {
      throw Error("tag map line " + std::to_string(lineno) +
                  ": expected 'raw<TAB>merged', got '" + t + "'");
    }
    entries.emplace_back(std::move(raw), std::move(merged));
  }
  return TagMap(std::move(source), std::move(target), entries);
}

TagMap TagMap::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tag map " + path.string());
  return Parse(in, path.stem().string());
}

TagMap TagMap::Identity(std::string name, const std::vector<std::string>& tags) {
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& t : tags) entries.emplace_back(t, t);
  return TagMap(name, name, entries);
}

std::optional<std::string_view> TagMap::Lookup(std::string_view raw) const {
  auto it = map_.find(raw);
  if (it == map_.end()) return std::nullopt;
  return std::string_view(it->second);
}

const std::string& TagMap::Merge(std::string_view raw) const {
  auto it = map_.find(raw);
  if (it == map_.end()) {
    throw Error("tag '" + std::string(raw) + "' is not in tag map '" + source_ +
                "'");
  }
  return it->second;
}

TagMap TagMap::Then(const TagMap& next) const {
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& raw : raw_order_) {
    entries.emplace_back(raw, next.Merge(map_.at(raw)));
  }
  return TagMap(source_, next.target_name(), entries);
}

std::string MergeTag(std::string_view raw, const TagMap& map) {
  return map.Merge(raw);
}

void TaggedCorpus::Add(Token token, bool sentence_start) {
  if (tokens_.empty()) sentence_start = true;
  if (sentence_start) starts_.push_back(tokens_.size());
  start_flags_.push_back(sentence_start ? 1 : 0);
  tokens_.push_back(std::move(token));
}

TaggedCorpus TaggedCorpus::Slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > tokens_.size()) throw Error("corpus slice out of range");
  TaggedCorpus out(tagset_);
  out.tokens_.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) out.Add(tokens_[i], IsSentenceStart(i));
  return out;
}

TaggedCorpus ReadLob(std::istream& in, const TagMap& map, ReadStats* stats) {
  static const std::regex kPrefix(R"(^\s*[A-Za-z][0-9]+\s+[0-9]+(\s+|$))");
  TaggedCorpus corpus(map.target());
  ReadStats local;
  std::string line;
  bool pending_start = true;
  while (std::getline(in, line)) {
    ++local.lines;
    std::smatch m;
    std::string body = std::regex_search(line, m, kPrefix) ? m.suffix().str() : line;
    std::istringstream items(body);
    std::string item;
    while (items >> item) {
      if (item == "^") {
        pending_start = true;
        continue;
      }
      const auto us = item.rfind('_');
      if (us == std::string::npos || us == 0 || us + 1 == item.size()) {
        ++local.skipped_items;
        continue;
      }
      Token tok;
      tok.surface = StripEscapes(std::string_view(item).substr(0, us));
      tok.raw_tag = UnescapeTag(std::string_view(item).substr(us + 1));
      auto merged = map.Lookup(tok.raw_tag);
      if (!merged) {
        throw Error("line " + std::to_string(local.lines) + ": tag '" +
                    tok.raw_tag + "' is not in tag map '" + map.source_name() +
                    "'");
      }
      tok.tag = map.target().Id(*merged);
      corpus.Add(std::move(tok), pending_start);
      pending_start = false;
      ++local.tokens;
    }
  }
  if (stats) *stats = local;
  return corpus;
}

TaggedCorpus ReadLobFile(const std::filesystem::path& path, const TagMap& map,
                         ReadStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus " + path.string());
  return ReadLob(in, map, stats);
}

TaggedCorpus ReadLobString(std::string_view text, const TagMap& map,
                           ReadStats* stats) {
  std::istringstream in{std::string(text)};
  return ReadLob(in, map, stats);
}

void WriteLob(std::ostream& out, const TaggedCorpus& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus.IsSentenceStart(i)) {
      if (i > 0) out << '\n';
      out << '^';
    }
    out << ' ' << corpus[i].surface << '_' << corpus[i].raw_tag;
  }
  if (!corpus.empty()) out << '\n';
}

std::pair<TaggedCorpus, TaggedCorpus> SplitCorpus(const TaggedCorpus& corpus,
                                                  std::size_t n_train) {
  if (n_train > corpus.size()) {
    throw Error("cannot take " + std::to_string(n_train) +
                " training tokens from a corpus of " +
                std::to_string(corpus.size()));
  }
  return {corpus.Slice(0, n_train), corpus.Slice(n_train, corpus.size())};
}

WordId Vocabulary::Add(std::string_view word) {
  if (auto id = Find(word)) return *id;
  const WordId id{static_cast<std::uint32_t>(words_.size())};
  words_.emplace_back(word);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<WordId> Vocabulary::Find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary BuildVocabulary(const TaggedCorpus& corpus, std::string source) {
  Vocabulary v(std::move(source));
  for (const auto& tok : corpus.tokens()) v.Add(tok.surface);
  v.set_token_count(corpus.size());
  return v;
}

}  // namespace bipos

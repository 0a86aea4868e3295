// types.h
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
// Identifier types and the error hierarchy shared by all modules.

#ifndef BIPOS_TYPES_H_
#define BIPOS_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bipos {

// Index of a tag within a Tagset.
enum class TagId : std::uint32_t {};

// Index of a word within a Vocabulary.
enum class WordId : std::uint32_t {};

// The context that precedes the first word of every sentence.
inline constexpr TagId kBeginTag{0xFFFFFFFFu};

constexpr std::size_t Index(TagId t) { return static_cast<std::size_t>(t); }
constexpr std::size_t Index(WordId w) { return static_cast<std::size_t>(w); }

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Transparent hash so string-keyed maps can be probed with string_view.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

}  // namespace bipos

#endif  // BIPOS_TYPES_H_

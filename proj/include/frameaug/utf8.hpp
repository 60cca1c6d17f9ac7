// Copyright 2026 The frameaug Authors
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

// Minimal UTF-8 code point arithmetic. All corpus offsets count Unicode
// code points, while std::string stores UTF-8 bytes; these helpers map
// between the two.

#ifndef FRAMEAUG_UTF8_H_
#define FRAMEAUG_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace frameaug {
namespace utf8 {

inline bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Number of code points in a UTF-8 string.
inline std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if (!is_continuation(c)) ++n;
  }
  return n;
}

// Byte offset of the given code point offset. Offsets past the end clamp
// to s.size(); that case is caught later by span bounds checks.
inline std::size_t byte_offset(std::string_view s, std::size_t cp_offset) {
  std::size_t byte = 0;
  std::size_t cp = 0;
  while (byte < s.size() && cp < cp_offset) {
    ++byte;
    while (byte < s.size() && is_continuation(static_cast<unsigned char>(s[byte]))) {
      ++byte;
    }
    ++cp;
  }
  return byte;
}

// Code point offset of the given byte offset (bytes inside a code point
// round down to its start).
inline std::size_t cp_offset(std::string_view s, std::size_t byte) {
  std::size_t cp = 0;
  for (std::size_t i = 0; i < byte && i < s.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(s[i]))) ++cp;
  }
  return cp;
}

// Substring by code point range [start, end).
inline std::string_view substr(std::string_view s, std::size_t cp_start,
                               std::size_t cp_end) {
  std::size_t b0 = byte_offset(s, cp_start);
  std::size_t b1 = byte_offset(s, cp_end);
  return s.substr(b0, b1 - b0);
}

// Replaces the code point range [start, end) with `replacement`.
inline std::string splice(std::string_view s, std::size_t cp_start,
                          std::size_t cp_end, std::string_view replacement) {
  std::size_t b0 = byte_offset(s, cp_start);
  std::size_t b1 = byte_offset(s, cp_end);
  std::string out;
  out.reserve(s.size() - (b1 - b0) + replacement.size());
  out.append(s.substr(0, b0));
  out.append(replacement);
  out.append(s.substr(b1));
  return out;
}

}  // namespace utf8
}  // namespace frameaug

#endif  // FRAMEAUG_UTF8_H_

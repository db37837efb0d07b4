// Copyright 2026 The layoutweave Authors.
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "layoutweave/core/error.hpp"
#include "layoutweave/util/utf8.hpp"

namespace layoutweave::ingest {

namespace detail {

inline bool is_control(char32_t c) {
  return u_charType(static_cast<UChar32>(c)) == U_CONTROL_CHAR;
}

inline bool is_punct(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

inline bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

inline bool is_bullet(char32_t c) {
  return c == U'\u2022' || c == U'\u25CF' || c == U'\u25AA' || c == U'\u2023' || c == U'\u00B7';
}

inline std::u32string trim(std::u32string_view s, bool (*pred)(char32_t)) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && pred(s[b])) ++b;
  while (e > b && pred(s[e - 1])) --e;
  return std::u32string(s.substr(b, e - b));
}

inline bool is_blank(char32_t c) { return c == U' ' || c == U'\t'; }

}  // namespace detail

inline std::string nfkc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status)) throw Error(std::string("ICU NFKC unavailable: ") + u_errorName(status));
  // Round-trip through the decoder first so invalid bytes are dropped, not
  // turned into U+FFFD.
  const std::string clean = utf8::encode(utf8::decode(s));
  icu::UnicodeString out =
      norm->normalize(icu::UnicodeString::fromUTF8(icu::StringPiece(clean.data(),
                                                                    static_cast<int32_t>(clean.size()))),
                      status);
  if (U_FAILURE(status)) throw Error(std::string("NFKC normalization failed: ") + u_errorName(status));
  std::string result;
  out.toUTF8String(result);
  return result;
}

// Heading cleanup: invalid UTF-8 and control characters removed (tab and
// line breaks become spaces), runs of three or more identical punctuation
// marks collapsed to one, surrounding whitespace trimmed.
inline std::string normalize_title(std::string_view s) {
  std::u32string kept;
  for (char32_t c : utf8::decode(s)) {
    if (c == U'\t' || c == U'\n' || c == U'\r') {
      kept.push_back(U' ');
    } else if (c == U'\uFFFD' || detail::is_control(c)) {
      continue;
    } else {
      kept.push_back(c);
    }
  }
  std::u32string collapsed;
  for (std::size_t i = 0; i < kept.size();) {
    std::size_t j = i;
    while (j < kept.size() && kept[j] == kept[i]) ++j;
    const std::size_t run = j - i;
    if (run >= 3 && detail::is_punct(kept[i])) {
      collapsed.push_back(kept[i]);
    } else {
      collapsed.append(kept, i, run);
    }
    i = j;
  }
  return utf8::encode(detail::trim(collapsed, detail::is_space));
}

// Body cleanup: NFKC, line-leading bullet glyphs (• ● ▪ ‣ ·) become "- ",
// runs of spaces and tabs become one space, each line is trimmed and
// leading/trailing blank lines are dropped. Line breaks are kept.
inline std::string normalize_body(std::string_view s) {
  const std::u32string text = utf8::decode(nfkc(s));
  std::vector<std::u32string> lines(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    if (c == U'\r') {
      if (i + 1 < text.size() && text[i + 1] == U'\n') ++i;
      lines.emplace_back();
    } else if (c == U'\n') {
      lines.emplace_back();
    } else if (c == U'\t') {
      lines.back().push_back(U' ');
    } else if (!detail::is_control(c)) {
      lines.back().push_back(c);
    }
  }
  for (std::u32string& line : lines) {
    std::u32string t = detail::trim(line, detail::is_blank);
    if (!t.empty() && detail::is_bullet(t.front())) t = U"- " + t.substr(1);
    std::u32string out;
    for (char32_t c : t) {
      if (c == U' ' && !out.empty() && out.back() == U' ') continue;
      out.push_back(c);
    }
    line = detail::trim(out, detail::is_blank);
  }
  std::size_t b = 0;
  std::size_t e = lines.size();
  while (b < e && lines[b].empty()) ++b;
  while (e > b && lines[e - 1].empty()) --e;
  std::u32string joined;
  for (std::size_t i = b; i < e; ++i) {
    if (i > b) joined.push_back(U'\n');
    joined += lines[i];
  }
  return utf8::encode(joined);
}

}  // namespace layoutweave::ingest

// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTEQ_SRC_TEXT_UTIL_HPP
#define SOFTEQ_SRC_TEXT_UTIL_HPP

// Line-format helpers shared by the instance, 3dm and multi-instance readers.

#include <algorithm>
#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softeq/domain.hpp"
#include "softeq/error.hpp"
#include "softeq/instance.hpp"

namespace softeq::detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

inline Label parse_label(std::string_view word, std::size_t line) {
  Label v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
  return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto words = split_words(line);
    if (words.empty() || words.front().starts_with('#')) continue;
    f(line_no, words);
  }
}

inline Domain parse_domain_words(std::span<const std::string_view> words, std::size_t line,
                          std::string_view name) {
  if (words.empty()) throw ParseError(line, "missing domain kind for " + std::string(name));
  if (words[0] == "set") {
    if (words.size() == 1)
      throw ParseError(line, "empty domain for variable " + std::string(name));
    std::vector<Value> values;
    for (std::size_t i = 1; i < words.size(); ++i) values.push_back(parse_label(words[i], line));
    std::vector<Value> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(line, "duplicate value in the domain of " + std::string(name));
    return Domain::of_values(std::move(values));
  }
  if (words[0] == "interval") {
    if (words.size() != 3) throw ParseError(line, "interval needs exactly <lo> <hi>");
    Label lo = parse_label(words[1], line);
    Label hi = parse_label(words[2], line);
    if (hi < lo) throw ParseError(line, "empty domain for variable " + std::string(name));
    return Domain::interval(lo, hi);
  }
  throw ParseError(line, "unknown domain kind '" + std::string(words[0]) + "'");
}

}  // namespace softeq::detail

#endif  // SOFTEQ_SRC_TEXT_UTIL_HPP

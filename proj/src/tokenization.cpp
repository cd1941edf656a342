// Copyright 2026 The BLANC Toolkit Authors.
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

#include "blanc/tokenization.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "blanc/backend.hpp"
#include "blanc/error.hpp"

namespace blanc {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Normal:
      return "normal";
    case TokenKind::Lead:
      return "lead";
    case TokenKind::Follow:
      return "follow";
  }
  return "normal";
}

TokenKind token_kind_from_string(std::string_view name) {
  if (name == "normal") return TokenKind::Normal;
  if (name == "lead") return TokenKind::Lead;
  if (name == "follow") return TokenKind::Follow;
  throw std::invalid_argument("unknown token kind: " + std::string(name));
}

std::size_t TokenizedText::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::vector<Token> TokenizedText::flatten() const {
  std::vector<Token> out;
  out.reserve(token_count());
  for (const auto& s : sentences) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<VocabId> TokenizedText::ids() const {
  std::vector<VocabId> out;
  out.reserve(token_count());
  for (const auto& s : sentences)
    for (const auto& t : s) out.push_back(t.vocab_id);
  return out;
}

int utf8_length(std::string_view text) {
  int n = 0;
  for (unsigned char c : text)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

Token make_token(std::string surface, TokenKind kind, VocabId id) {
  if (surface.empty()) throw std::invalid_argument("token surface must be non-empty");
  Token t;
  t.char_len = utf8_length(surface);
  t.surface = std::move(surface);
  t.kind = kind;
  t.vocab_id = id;
  return t;
}

std::vector<Token> classify_word(std::span<const WordPiece> pieces,
                                 std::string_view continuation_marker) {
  std::vector<Token> out;
  out.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string surface = pieces[i].text;
    if (i > 0 && surface.starts_with(continuation_marker) &&
        surface.size() > continuation_marker.size())
      surface.erase(0, continuation_marker.size());
    TokenKind kind = TokenKind::Normal;
    if (pieces.size() > 1) kind = i == 0 ? TokenKind::Lead : TokenKind::Follow;
    out.push_back(make_token(std::move(surface), kind, pieces[i].id));
  }
  return out;
}

bool well_formed(std::span<const Token> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.char_len < 1 || t.char_len != utf8_length(t.surface)) return false;
    const bool next_follows = i + 1 < tokens.size() && tokens[i + 1].kind == TokenKind::Follow;
    switch (t.kind) {
      case TokenKind::Normal:
        if (next_follows) return false;
        break;
      case TokenKind::Lead:
        if (!next_follows) return false;
        break;
      case TokenKind::Follow:
        if (i == 0 || tokens[i - 1].kind == TokenKind::Normal) return false;
        break;
    }
  }
  return true;
}

namespace {

constexpr std::array<std::string_view, 40> kAbbreviations = {
    "mr",   "mrs",  "ms",   "dr",   "prof", "sr",   "jr",  "st",  "vs",   "etc",
    "e.g",  "i.e",  "u.s",  "u.k",  "inc",  "ltd",  "co",  "corp", "no",  "gen",
    "sen",  "rep",  "gov",  "lt",   "col",  "capt", "sgt", "mt",  "ft",   "jan",
    "feb",  "aug",  "sept", "oct",  "nov",  "dec",  "approx", "dept", "est", "fig",
};

bool is_space(unsigned char c) { return std::isspace(c) != 0; }
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

// The word (run of non-space chars) ending just before text[end].
std::string_view word_before(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_space(static_cast<unsigned char>(text[begin - 1]))) --begin;
  return text.substr(begin, end - begin);
}

bool is_abbreviation(std::string_view word) {
  while (!word.empty() && (word.front() == '(' || word.front() == '"' || word.front() == '\''))
    word.remove_prefix(1);
  if (word.empty()) return false;
  // Single-letter initial such as "J." in "J. Smith".
  if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]))) return true;
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

}  // namespace

std::span<const std::string_view> sentence_abbreviations() { return kAbbreviations; }

std::vector<std::string> segment_sentences(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::string> out;
  auto emit = [&](std::string_view piece) {
    std::string s = normalize_whitespace(piece);
    if (!s.empty()) out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    // Blank line: hard break.
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '\n' && is_space(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '\n') {
        emit(text.substr(start, i - start));
        start = i = j + 1;
        continue;
      }
    }
    if (!is_terminator(c)) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < text.size() && (is_terminator(text[end]) || is_closer(text[end]))) ++end;
    if (end < text.size() && !is_space(static_cast<unsigned char>(text[end]))) {
      i = end;
      continue;
    }
    std::size_t next = end;
    while (next < text.size() && is_space(static_cast<unsigned char>(text[next]))) ++next;
    bool split = true;
    if (next < text.size()) {
      if (std::islower(static_cast<unsigned char>(text[next]))) split = false;
      if (c == '.' && end == i + 1 && is_abbreviation(word_before(text, i))) split = false;
    }
    if (split) {
      emit(text.substr(start, end - start));
      start = end;
    }
    i = end;
  }
  emit(text.substr(start));
  return out;
}

TokenizedText tokenize(std::span<const std::string> sentences, ModelBackend& backend) {
  TokenizedText out;
  if (sentences.empty()) return out;
  auto tokenized = backend.tokenize(sentences);
  if (tokenized.size() != sentences.size())
    throw BackendError("tokenize returned " + std::to_string(tokenized.size()) +
                       " token lists for " + std::to_string(sentences.size()) + " sentences");
  for (auto& s : tokenized) {
    if (s.empty()) continue;
    if (!well_formed(s)) throw BackendError("backend returned malformed token kinds");
    out.sentences.push_back(std::move(s));
  }
  return out;
}

TokenizedText tokenize_text(std::string_view text, ModelBackend& backend) {
  const auto sentences = segment_sentences(text);
  return tokenize(sentences, backend);
}

}  // namespace blanc

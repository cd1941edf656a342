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
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blanc {

class ModelBackend;

using VocabId = std::int64_t;

// Position of a wordpiece inside its word. A single-piece word is Normal; a
// multi-piece word is one Lead followed by one or more Follow pieces.
enum class TokenKind { Normal, Lead, Follow };

std::string_view to_string(TokenKind kind);
TokenKind token_kind_from_string(std::string_view name);

struct Token {
  std::string surface;  // continuation marker stripped
  int char_len = 0;     // visible characters (UTF-8 code points) of surface
  TokenKind kind = TokenKind::Normal;
  VocabId vocab_id = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

using Sentence = std::vector<Token>;

struct TokenizedText {
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  bool empty() const { return sentences.empty(); }
  // All tokens in document order.
  std::vector<Token> flatten() const;
  std::vector<VocabId> ids() const;

  friend bool operator==(const TokenizedText&, const TokenizedText&) = default;
};

// Number of Unicode code points in a UTF-8 string.
int utf8_length(std::string_view text);

// Builds a Token, computing char_len from the surface. Throws std::invalid_argument
// on an empty surface.
Token make_token(std::string surface, TokenKind kind, VocabId id);

// Classifies the wordpieces of one word. Pieces after the first carry the
// continuation marker (e.g. "##ing"), which is stripped from the surface.
struct WordPiece {
  std::string text;
  VocabId id = 0;
};
std::vector<Token> classify_word(std::span<const WordPiece> pieces,
                                 std::string_view continuation_marker = "##");

// True iff kinds form the pattern (Normal | Lead Follow+)* and every char_len
// matches its surface.
bool well_formed(std::span<const Token> tokens);

// Rule-based splitter: a sentence ends at '.', '!' or '?' (plus trailing
// closing quotes/brackets) followed by whitespace and a character that is not
// a lowercase letter, unless the word before a '.' is a known abbreviation or
// a single-letter initial. Blank lines always end a sentence. Whitespace
// inside a sentence is collapsed to single spaces.
std::vector<std::string> segment_sentences(std::string_view text);

// The abbreviation list used by segment_sentences (lowercase, without the
// final period).
std::span<const std::string_view> sentence_abbreviations();

// Tokenizes each sentence through the backend's vocabulary. Sentences that
// produce no tokens are dropped. Backend failures propagate as BackendError.
TokenizedText tokenize(std::span<const std::string> sentences, ModelBackend& backend);

// segment_sentences followed by tokenize.
TokenizedText tokenize_text(std::string_view text, ModelBackend& backend);

}  // namespace blanc

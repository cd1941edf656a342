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

#include "blanc/reference_backend.hpp"

namespace blanc {

// Common English words in rough frequency order, followed by frequent
// suffix pieces so that inflected forms of the listed stems split into a
// Lead piece and Follow pieces.
const std::vector<std::string>& ReferenceBackend::builtin_vocabulary() {
  static const std::vector<std::string> vocab = {
    "the", ",", ".", "of", "and", "to", "a", "in", "\"", "'s", "is", "was", "for", "on", "that",
    "with", "he", "it", "as", "at", "by", "said", "from", "his", "be", "has", "have", "are",
    "an", "had", "not", "but", "they", "this", "were", "who", "which", "their", "after", "she",
    "her", "been", "will", "one", "two", "year", "years", "new", "people", "also", "more",
    "would", "there", "when", "up", "out", "about", "into", "than", "its", "over", "we", "all",
    "i", "you", "or", "no", "first", "last", "time", "police", "government", "city", "state",
    "world", "day", "week", "could", "other", "may", "some", "what", "so", "can", "him", "them",
    "our", "three", "four", "five", "most", "only", "now", "just", "before", "while", "where",
    "because", "during", "against", "under", "between", "since", "off", "if", "do", "did",
    "like", "made", "back", "still", "down", "many", "home", "family", "children", "life",
    "told", "found", "says", "say", "take", "took", "make", "well", "way", "own", "being",
    "such", "even", "those", "through", "any", "much", "very", "then", "both", "each", "these",
    "(", ")", "!", "?", ";", ":", "'", "-", "$", "%", "man", "woman", "men", "women", "officer",
    "officers", "minister", "president", "council", "court", "judge", "trial", "company",
    "business", "market", "markets", "price", "prices", "bank", "money", "water", "fire",
    "storm", "weather", "school", "hospital", "doctor", "health", "team", "game", "season",
    "player", "players", "club", "match", "league", "goal", "goals", "win", "won", "victory",
    "report", "reports", "news", "house", "road", "roads", "street", "car", "train", "plane",
    "flight", "airport", "country", "nation", "national", "international", "local", "public",
    "private", "party", "election", "vote", "campaign", "law", "plan", "plans", "work", "help",
    "play", "start", "call", "turn", "look", "open", "talk", "walk", "need", "show", "keep",
    "move", "live", "feel", "leave", "run", "hold", "bring", "write", "sit", "stand", "lose",
    "pay", "meet", "include", "continue", "set", "learn", "change", "lead", "understand",
    "watch", "follow", "stop", "create", "speak", "read", "spend", "grow", "offer", "remember",
    "love", "consider", "appear", "buy", "wait", "serve", "die", "send", "expect", "build",
    "stay", "fall", "cut", "reach", "kill", "remain", "suggest", "raise", "pass", "sell",
    "require", "decide", "pull", "rain", "flood", "wind", "snow", "power", "energy", "oil",
    "gas", "climate", "science", "research", "study", "data", "system", "program", "service",
    "support", "care", "risk", "rate", "level", "number", "group", "part", "place", "case",
    "point", "hand", "area", "problem", "fact", "right", "left", "high", "long", "great",
    "little", "small", "large", "big", "old", "young", "good", "bad", "early", "late",
    "important", "different", "##s", "##es", "##ed", "##ing", "##er", "##ers", "##ly", "##tion",
    "##ation", "##ment", "##ments", "##ness", "##al", "##y", "##ies", "##ic", "##ist", "##ity",
    "##ive", "##ous", "##ful", "##less", "##able", "##ence", "##ance", "##ent", "##ant", "##d",
    "##n", "##r", "##an", "##ian", "##ate", "##ated", "##ating", "##ish", "##est",
  };
  return vocab;
}

}  // namespace blanc

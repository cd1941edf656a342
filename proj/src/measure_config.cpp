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

#include "blanc/measure_config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "blanc/error.hpp"
#include "blanc/random.hpp"
#include "blanc/wire.hpp"

namespace blanc {

using nlohmann::json;

std::string_view to_string(Family family) { return family == Family::Help ? "help" : "tune"; }

Family family_from_string(std::string_view name) {
  if (name == "help") return Family::Help;
  if (name == "tune") return Family::Tune;
  throw ConfigError("unknown family: " + std::string(name));
}

void MeasureConfig::validate() const {
  masking.validate();
  if (family == Family::Tune && !tuning) throw ConfigError(label + ": tune family requires tuning");
  if (family == Family::Help && tuning) throw ConfigError(label + ": help family must not set tuning");
  if (tuning) tuning->validate();
}

json MeasureConfig::to_json() const {
  json j = {{"family", std::string(to_string(family))},
            {"label", label},
            {"masking", wire::to_json(masking)},
            {"metric", "accuracy_diff"}};
  j["tuning"] = tuning ? wire::to_json(*tuning) : json(nullptr);
  return j;
}

MeasureConfig MeasureConfig::from_json(const json& j) {
  MeasureConfig c;
  try {
    c.family = family_from_string(j.at("family").get<std::string>());
    c.label = j.value("label", "");
    c.masking = wire::masking_from_json(j.at("masking"));
    if (j.contains("tuning") && !j["tuning"].is_null()) c.tuning = wire::tuning_from_json(j["tuning"]);
    if (j.value("metric", "accuracy_diff") != "accuracy_diff")
      throw ConfigError("unknown metric: " + j["metric"].get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed measure config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("malformed measure config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string MeasureConfig::hash() const {
  json j = to_json();
  j.erase("label");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

template <typename T>
T parse_number(const std::string& value, const std::string& key, int line) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("line " + std::to_string(line) + ": bad value for " + key + ": \"" + value + "\"");
  return out;
}

MeasureConfig build_section(const std::string& label, const std::map<std::string, std::pair<std::string, int>>& kv) {
  auto get = [&](const char* key) -> const std::pair<std::string, int>* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto get_int = [&](const char* key, int fallback) {
    auto* v = get(key);
    return v ? parse_number<int>(v->first, key, v->second) : fallback;
  };
  auto get_double = [&](const char* key, double fallback) {
    auto* v = get(key);
    return v ? parse_number<double>(v->first, key, v->second) : fallback;
  };

  static const char* const kKnown[] = {"family",   "metric",        "gap",       "gap_mask",
                                       "l_normal", "l_lead",        "l_follow",  "gap_tune",
                                       "gap_mask_tune", "tune_mode", "tune_seed", "p_replace",
                                       "p_keep",   "tune_l_normal", "tune_l_lead", "tune_l_follow"};
  for (const auto& [key, value] : kv) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ConfigError("line " + std::to_string(value.second) + ": unknown key \"" + key + "\"");
  }

  MeasureConfig c;
  c.label = label;
  auto* family = get("family");
  if (!family) throw ConfigError("[" + label + "]: missing key \"family\"");
  c.family = family_from_string(family->first);
  if (auto* metric = get("metric"); metric && metric->first != "accuracy_diff")
    throw ConfigError("line " + std::to_string(metric->second) + ": unknown metric \"" + metric->first + "\"");

  c.masking.gap = get_int("gap", c.masking.gap);
  c.masking.gap_mask = get_int("gap_mask", c.masking.gap_mask);
  c.masking.min_len.normal = get_int("l_normal", c.masking.min_len.normal);
  c.masking.min_len.lead = get_int("l_lead", c.masking.min_len.lead);
  c.masking.min_len.follow = get_int("l_follow", c.masking.min_len.follow);

  if (c.family == Family::Tune) {
    TuningPolicy t;
    t.gap_tune = get_int("gap_tune", t.gap_tune);
    t.gap_mask_tune = get_int("gap_mask_tune", t.gap_mask_tune);
    if (auto* mode = get("tune_mode")) t.mode = wire::tuning_mode_from_string(mode->first);
    if (auto* seed = get("tune_seed")) t.seed = parse_number<std::uint64_t>(seed->first, "tune_seed", seed->second);
    t.p_replace = get_double("p_replace", t.p_replace);
    t.p_keep = get_double("p_keep", t.p_keep);
    t.min_len.normal = get_int("tune_l_normal", c.masking.min_len.normal);
    t.min_len.lead = get_int("tune_l_lead", c.masking.min_len.lead);
    t.min_len.follow = get_int("tune_l_follow", c.masking.min_len.follow);
    c.tuning = t;
  } else {
    for (const char* k : {"gap_tune", "gap_mask_tune", "tune_mode", "tune_seed", "p_replace", "p_keep",
                          "tune_l_normal", "tune_l_lead", "tune_l_follow"})
      if (auto* v = get(k))
        throw ConfigError("line " + std::to_string(v->second) + ": \"" + k + "\" is only valid for family = tune");
  }
  c.validate();
  return c;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<MeasureConfig> parse_config_text(std::string_view text) {
  std::vector<MeasureConfig> out;
  std::string label;
  bool in_section = false;
  std::map<std::string, std::pair<std::string, int>> kv;
  auto finish = [&] {
    if (in_section) out.push_back(build_section(label, kv));
    kv.clear();
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
      finish();
      label = trim(std::string_view(line).substr(1, line.size() - 2));
      if (label.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty section label");
      for (const auto& c : out)
        if (c.label == label) throw ConfigError("line " + std::to_string(line_no) + ": duplicate label \"" + label + "\"");
      in_section = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    if (!in_section) throw ConfigError("line " + std::to_string(line_no) + ": key outside of a [label] section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (kv.contains(key)) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key \"" + key + "\"");
    kv[key] = {trim(std::string_view(line).substr(eq + 1)), line_no};
  }
  finish();
  return out;
}

std::string to_config_text(const MeasureConfig& c) {
  std::ostringstream os;
  os << '[' << c.label << "]\n";
  os << "family = " << to_string(c.family) << '\n';
  os << "metric = accuracy_diff\n";
  os << "gap = " << c.masking.gap << '\n';
  os << "gap_mask = " << c.masking.gap_mask << '\n';
  os << "l_normal = " << c.masking.min_len.normal << '\n';
  os << "l_lead = " << c.masking.min_len.lead << '\n';
  os << "l_follow = " << c.masking.min_len.follow << '\n';
  if (c.tuning) {
    const TuningPolicy& t = *c.tuning;
    os << "gap_tune = " << t.gap_tune << '\n';
    os << "gap_mask_tune = " << t.gap_mask_tune << '\n';
    os << "tune_mode = " << wire::to_string(t.mode) << '\n';
    os << "tune_seed = " << t.seed << '\n';
    os << "p_replace = " << format_double(t.p_replace) << '\n';
    os << "p_keep = " << format_double(t.p_keep) << '\n';
    os << "tune_l_normal = " << t.min_len.normal << '\n';
    os << "tune_l_lead = " << t.min_len.lead << '\n';
    os << "tune_l_follow = " << t.min_len.follow << '\n';
  }
  return os.str();
}

std::string to_config_text(const std::vector<MeasureConfig>& configs) {
  std::string out;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (i) out += '\n';
    out += to_config_text(configs[i]);
  }
  return out;
}

std::vector<MeasureConfig> load_configs(const std::string& path_or_builtin) {
  if (path_or_builtin.starts_with("builtin:")) return builtin_family(path_or_builtin.substr(8));
  std::ifstream in(path_or_builtin, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path_or_builtin);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<MeasureConfig> out;
  // A sectioned text file also starts with '[', so JSON is tried first.
  std::optional<json> parsed;
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      parsed = json::parse(text);
    } catch (const json::exception& e) {
      if (text[first] == '{') throw ConfigError(path_or_builtin + ": " + e.what());
    }
  }
  if (parsed) {
    if (parsed->is_array())
      for (const auto& c : *parsed) out.push_back(MeasureConfig::from_json(c));
    else
      out.push_back(MeasureConfig::from_json(*parsed));
  } else {
    try {
      out = parse_config_text(text);
    } catch (const ConfigError& e) {
      throw ConfigError(path_or_builtin + ": " + e.what());
    }
  }
  if (out.empty()) throw ConfigError(path_or_builtin + ": no configurations");
  return out;
}

MeasureConfig help_max_help() {
  MeasureConfig c;
  c.family = Family::Help;
  c.masking = {2, 1, {6, 1, 1}};
  c.label = "help-max-help";
  return c;
}

MeasureConfig help_max_human() {
  MeasureConfig c = help_max_help();
  c.masking.min_len = {4, 1, kNeverMask};
  c.label = "help-max-human";
  return c;
}

MeasureConfig tune_max_help() {
  MeasureConfig c;
  c.family = Family::Tune;
  c.masking = {3, 2, {6, 1, 1}};
  TuningPolicy t;
  t.gap_tune = 4;
  t.gap_mask_tune = 3;
  t.mode = TuningMode::Even;
  t.p_replace = 0.0;
  t.p_keep = 0.1;
  t.min_len = {6, 1, 1};
  c.tuning = t;
  c.label = "tune-max-help";
  return c;
}

MeasureConfig tune_max_human() {
  MeasureConfig c = tune_max_help();
  c.masking = {2, 1, {4, 1, kNeverMask}};
  c.tuning->gap_tune = 2;
  c.tuning->gap_mask_tune = 1;
  c.tuning->min_len = {4, 1, kNeverMask};
  c.tuning->p_replace = 0.1;
  c.label = "tune-max-human";
  return c;
}

std::vector<MeasureConfig> help_perturbation_family() {
  std::vector<MeasureConfig> out;
  const MeasureConfig opt = help_max_help();
  auto variant = [&](std::string label, auto&& edit) {
    MeasureConfig c = opt;
    c.label = std::move(label);
    edit(c);
    out.push_back(std::move(c));
  };
  out.push_back(opt);
  variant("gap 3/1", [](MeasureConfig& c) { c.masking.gap = 3, c.masking.gap_mask = 1; });
  variant("gap 3/2", [](MeasureConfig& c) { c.masking.gap = 3, c.masking.gap_mask = 2; });
  variant("toks-normal 5", [](MeasureConfig& c) { c.masking.min_len.normal = 5; });
  variant("toks-lead 2", [](MeasureConfig& c) { c.masking.min_len.lead = 2; });
  variant("toks-follow 2", [](MeasureConfig& c) { c.masking.min_len.follow = 2; });
  return out;
}

std::vector<MeasureConfig> tune_perturbation_family() {
  std::vector<MeasureConfig> out;
  const MeasureConfig opt = tune_max_help();
  auto variant = [&](std::string label, auto&& edit) {
    MeasureConfig c = opt;
    c.label = std::move(label);
    edit(c);
    out.push_back(std::move(c));
  };
  out.push_back(opt);
  variant("gap-infer 2/1", [](MeasureConfig& c) { c.masking.gap = 2, c.masking.gap_mask = 1; });
  variant("gap-tune 2/1", [](MeasureConfig& c) { c.tuning->gap_tune = 2, c.tuning->gap_mask_tune = 1; });
  variant("p-replace 0.1", [](MeasureConfig& c) { c.tuning->p_replace = 0.1; });
  variant("toks-normal 4", [](MeasureConfig& c) {
    c.masking.min_len.normal = 4;
    c.tuning->min_len.normal = 4;
  });
  variant("tune-rand", [](MeasureConfig& c) { c.tuning->mode = TuningMode::Random; });
  return out;
}

std::vector<MeasureConfig> builtin_family(std::string_view name) {
  if (name == "help-perturbation") return help_perturbation_family();
  if (name == "tune-perturbation") return tune_perturbation_family();
  if (name == "help-max-help") return {help_max_help()};
  if (name == "help-max-human") return {help_max_human()};
  if (name == "tune-max-help") return {tune_max_help()};
  if (name == "tune-max-human") return {tune_max_human()};
  throw ConfigError("unknown builtin family: " + std::string(name));
}

}  // namespace blanc

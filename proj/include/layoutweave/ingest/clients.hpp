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

// Pluggable model clients: the image usefulness classifier, the enrichment
// service for tables and useful images, and the document category
// classifier. Every implementation must be safe to call concurrently.
//
// Fixture files (all JSON):
//
//   usefulness:  {"default": "Useful",
//                 "responses": {"<entity id or image_payload>": "Useless"}}
//   enrichment:  {"responses": {"<entity id or image_payload>":
//                     {"title": "...", "summary": "...", "data": [{...}]}
//                   | "<raw service reply text, parsed like a live reply>"},
//                 "errors": ["<entity id>", ...]}
//   category:    {"default": "uncategorized",
//                 "responses": {"<fnv1a64 hex of the full text>": "financial"}}

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "layoutweave/core/error.hpp"
#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/util/ids.hpp"

namespace layoutweave::ingest {

inline constexpr const char* kDefaultCategory = "uncategorized";

enum class UsefulnessVerdict { kUseful, kUseless };

inline UsefulnessVerdict parse_verdict(std::string_view s) {
  if (s == "Useful") return UsefulnessVerdict::kUseful;
  if (s == "Useless") return UsefulnessVerdict::kUseless;
  throw ValidationError("unknown usefulness verdict '" + std::string(s) + "'");
}

class UsefulnessClassifier {
 public:
  virtual ~UsefulnessClassifier() = default;
  virtual UsefulnessVerdict classify(const Entity& image) const = 0;
};

// Deterministic stand-in for the image model: every image is useful.
class AlwaysUsefulClassifier final : public UsefulnessClassifier {
 public:
  UsefulnessVerdict classify(const Entity&) const override { return UsefulnessVerdict::kUseful; }
};

class FixtureUsefulnessClassifier final : public UsefulnessClassifier {
 public:
  explicit FixtureUsefulnessClassifier(const Json& fixture) {
    if (auto it = fixture.find("default"); it != fixture.end())
      default_ = parse_verdict(it->get<std::string>());
    if (auto it = fixture.find("responses"); it != fixture.end())
      for (const auto& [key, v] : it->items()) responses_[key] = parse_verdict(v.get<std::string>());
  }

  static FixtureUsefulnessClassifier from_file(const std::string& path) {
    return FixtureUsefulnessClassifier(parse_json_text(read_file(path), path));
  }

  UsefulnessVerdict classify(const Entity& image) const override {
    if (auto it = responses_.find(image.id); it != responses_.end()) return it->second;
    if (image.image_payload)
      if (auto it = responses_.find(*image.image_payload); it != responses_.end()) return it->second;
    return default_;
  }

 private:
  UsefulnessVerdict default_ = UsefulnessVerdict::kUseful;
  std::map<std::string, UsefulnessVerdict, std::less<>> responses_;
};

struct EnrichmentResult {
  std::optional<std::string> title;
  std::optional<std::string> summary;
  std::optional<std::variant<std::string, std::vector<DataRow>>> text_or_data;

  bool empty() const { return !title && !summary && !text_or_data; }
};

// Accepts a bare JSON object or one wrapped in a ```json fence, the way chat
// models tend to reply. Throws ParseError when nothing usable comes back.
inline EnrichmentResult parse_enrichment_response(std::string_view reply) {
  std::string body(reply);
  if (auto fence = body.find("```"); fence != std::string::npos) {
    auto start = body.find('\n', fence);
    auto end = body.rfind("```");
    if (start != std::string::npos && end != std::string::npos && end > start)
      body = body.substr(start + 1, end - start - 1);
  }
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("unparseable enrichment reply: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("enrichment reply is not a JSON object");
  EnrichmentResult r;
  auto str = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw ParseError(std::string("enrichment field '") + key + "' is not a string");
    return it->get<std::string>();
  };
  r.title = str("title");
  r.summary = str("summary");
  for (const char* key : {"data", "text"}) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null() || r.text_or_data) continue;
    if (it->is_string()) {
      r.text_or_data = it->get<std::string>();
    } else if (it->is_array()) {
      try {
        r.text_or_data = data_from_json(*it, key);
      } catch (const ValidationError& e) {
        throw ParseError(std::string("enrichment rows malformed: ") + e.what());
      }
    } else {
      throw ParseError(std::string("enrichment field '") + key + "' has an unsupported type");
    }
  }
  if (r.empty()) throw ParseError("enrichment reply carries no title, summary, text or data");
  return r;
}

class EnrichmentClient {
 public:
  virtual ~EnrichmentClient() = default;
  // Throws on transport failure or an unusable reply.
  virtual EnrichmentResult enrich(const Entity& element) const = 0;
};

class FixtureEnrichmentClient final : public EnrichmentClient {
 public:
  explicit FixtureEnrichmentClient(const Json& fixture) {
    if (auto it = fixture.find("responses"); it != fixture.end())
      for (const auto& [key, v] : it->items()) replies_[key] = v.is_string() ? v.get<std::string>() : v.dump();
    if (auto it = fixture.find("errors"); it != fixture.end())
      for (const Json& id : *it) errors_.insert(id.get<std::string>());
  }

  static FixtureEnrichmentClient from_file(const std::string& path) {
    return FixtureEnrichmentClient(parse_json_text(read_file(path), path));
  }

  EnrichmentResult enrich(const Entity& element) const override {
    if (errors_.contains(element.id)) throw Error("fixture error for " + element.id);
    auto it = replies_.find(element.id);
    if (it == replies_.end() && element.image_payload) it = replies_.find(*element.image_payload);
    if (it == replies_.end()) throw Error("no fixture reply for " + element.id);
    return parse_enrichment_response(it->second);
  }

 private:
  std::map<std::string, std::string, std::less<>> replies_;
  std::set<std::string, std::less<>> errors_;
};

class CategoryClassifier {
 public:
  virtual ~CategoryClassifier() = default;
  virtual std::string classify(std::string_view full_text) const = 0;
};

class ConstantCategoryClassifier final : public CategoryClassifier {
 public:
  explicit ConstantCategoryClassifier(std::string category = kDefaultCategory)
      : category_(std::move(category)) {}
  std::string classify(std::string_view) const override { return category_; }

 private:
  std::string category_;
};

class FixtureCategoryClassifier final : public CategoryClassifier {
 public:
  explicit FixtureCategoryClassifier(const Json& fixture) {
    if (auto it = fixture.find("default"); it != fixture.end()) default_ = it->get<std::string>();
    if (auto it = fixture.find("responses"); it != fixture.end())
      for (const auto& [key, v] : it->items()) responses_[key] = v.get<std::string>();
  }

  static FixtureCategoryClassifier from_file(const std::string& path) {
    return FixtureCategoryClassifier(parse_json_text(read_file(path), path));
  }

  static std::string key_for(std::string_view text) { return hex64(fnv1a64(text)); }

  std::string classify(std::string_view full_text) const override {
    if (auto it = responses_.find(key_for(full_text)); it != responses_.end()) return it->second;
    return default_;
  }

 private:
  std::string default_ = kDefaultCategory;
  std::map<std::string, std::string, std::less<>> responses_;
};

}  // namespace layoutweave::ingest

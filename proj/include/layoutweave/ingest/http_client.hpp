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

#include <cstdlib>
#include <memory>
#include <string>

#include <httplib.h>

#include "layoutweave/ingest/clients.hpp"

namespace layoutweave::ingest {

inline constexpr const char* kEnrichmentUrlEnv = "LAYOUTWEAVE_ENRICHMENT_URL";

// POSTs {"id", "type", "text", "image_payload"} as JSON to a plain-HTTP
// endpoint and parses the reply body.
class HttpEnrichmentClient final : public EnrichmentClient {
 public:
  explicit HttpEnrichmentClient(std::string url) : url_(std::move(url)) {
    const std::string scheme = "http://";
    if (url_.rfind(scheme, 0) != 0)
      throw ValidationError("enrichment endpoint must be an http:// URL: " + url_);
    const auto slash = url_.find('/', scheme.size());
    host_ = url_.substr(0, slash);
    path_ = slash == std::string::npos ? "/" : url_.substr(slash);
  }

  EnrichmentResult enrich(const Entity& element) const override {
    httplib::Client client(host_);
    client.set_connection_timeout(10);
    client.set_read_timeout(120);
    Json req;
    req["id"] = element.id;
    req["type"] = to_string(element.type);
    req["text"] = element.value.text;
    if (element.image_payload) req["image_payload"] = *element.image_payload;
    auto res = client.Post(path_, req.dump(), "application/json");
    if (!res) throw Error("enrichment request failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw Error("enrichment endpoint returned HTTP " + std::to_string(res->status));
    return parse_enrichment_response(res->body);
  }

 private:
  std::string url_;
  std::string host_;
  std::string path_;
};

inline std::unique_ptr<EnrichmentClient> enrichment_client_from_env() {
  const char* url = std::getenv(kEnrichmentUrlEnv);
  if (url == nullptr || *url == '\0') return nullptr;
  return std::make_unique<HttpEnrichmentClient>(url);
}

}  // namespace layoutweave::ingest

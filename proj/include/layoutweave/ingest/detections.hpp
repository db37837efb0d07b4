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

// Detection-input files: the serialized output of the element and layout
// detectors, with text already bound to each element box.
//
//   {
//     "filename": "report.pdf",
//     "metadata": {"page_height": "3508", ...},
//     "pages": [{
//       "page_number": 1,
//       "full_page_text": "...",                        (optional)
//       "element_detections": [{"id": "...",            (optional)
//                               "label": "text",
//                               "confidence": 0.91,
//                               "bbox": [left, top, right, bottom],
//                               "text": "...",          (optional)
//                               "image_payload": "..."  (optional)
//                              }],
//       "layout_detections": [ same shape, layout labels ]
//     }]
//   }

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "layoutweave/core/error.hpp"
#include "layoutweave/core/geometry.hpp"
#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/labels.hpp"

namespace layoutweave::ingest {

struct RawDetection {
  std::optional<std::string> id;
  std::string label;
  double confidence = 0.0;
  BBox bbox;
  std::optional<std::string> text;
  std::optional<std::string> image_payload;

  friend bool operator==(const RawDetection&, const RawDetection&) = default;
};

struct PageDetections {
  int page_number = 1;
  std::vector<RawDetection> element_detections;
  std::vector<RawDetection> layout_detections;
  std::optional<std::string> full_page_text;

  friend bool operator==(const PageDetections&, const PageDetections&) = default;
};

struct DetectionInput {
  std::string filename;
  std::map<std::string, std::string> metadata;
  std::vector<PageDetections> pages;

  friend bool operator==(const DetectionInput&, const DetectionInput&) = default;
};

// Detections below a threshold are dropped; a confidence equal to the
// threshold is kept.
struct Thresholds {
  double layout = 0.20;
  double element = 0.30;

  void validate() const {
    if (!(layout >= 0.0 && layout <= 1.0) || !(element >= 0.0 && element <= 1.0))
      throw ValidationError("thresholds must lie in [0,1]");
  }
};

namespace detail {

inline RawDetection detection_from_json(const Json& j, const std::string& path, bool layout) {
  using namespace json_detail;
  RawDetection d;
  d.id = optional_string(j, "id", path);
  if (d.id && d.id->empty()) throw ValidationError(path + ".id: must not be empty");
  d.label = string(field(j, "label", path), path + ".label");
  if (d.label.empty()) throw ValidationError(path + ".label: must not be empty");
  const bool known = layout ? layout_label_from(d.label).has_value()
                            : element_label_from(d.label).has_value();
  if (!known)
    throw ValidationError(path + ".label: unknown " + (layout ? "layout" : "element") +
                          " label '" + d.label + "'");
  d.confidence = number(field(j, "confidence", path), path + ".confidence");
  if (!(d.confidence >= 0.0 && d.confidence <= 1.0))
    throw ValidationError(path + ".confidence: must lie in [0,1]");
  const Json& box = field(j, "bbox", path);
  if (!box.is_array() || box.size() != 4)
    throw ValidationError(path + ".bbox: expected [left, top, right, bottom]");
  for (std::size_t i = 0; i < 4; ++i) number(box[i], path + ".bbox[" + std::to_string(i) + "]");
  d.bbox = BBox{box[0].get<double>(), box[1].get<double>(), box[2].get<double>(),
                box[3].get<double>()};
  try {
    d.bbox.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(path + ".bbox: " + e.what());
  }
  d.text = optional_string(j, "text", path);
  d.image_payload = optional_string(j, "image_payload", path);
  return d;
}

inline std::vector<RawDetection> detection_list(const Json& page, const char* key,
                                                const std::string& path, bool layout) {
  std::vector<RawDetection> out;
  auto it = page.find(key);
  if (it == page.end() || it->is_null()) return out;
  if (!it->is_array()) throw ValidationError(path + "." + key + ": expected an array");
  for (std::size_t i = 0; i < it->size(); ++i)
    out.push_back(detection_from_json((*it)[i], path + "." + key + "[" + std::to_string(i) + "]",
                                      layout));
  return out;
}

}  // namespace detail

// Parses and validates without filtering.
inline DetectionInput parse_detections(const Json& j) {
  using namespace json_detail;
  const std::string root = "$";
  DetectionInput in;
  in.filename = string(field(j, "filename", root), "$.filename");
  if (auto it = j.find("metadata"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw ValidationError("$.metadata: expected an object");
    for (const auto& [k, v] : it->items()) in.metadata[k] = cell_text(v);
  }
  const Json& pages = field(j, "pages", root);
  if (!pages.is_array()) throw ValidationError("$.pages: expected an array");
  std::set<int> numbers;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    const std::string path = "$.pages[" + std::to_string(i) + "]";
    PageDetections p;
    p.page_number = integer(field(pages[i], "page_number", path), path + ".page_number");
    if (p.page_number <= 0) throw ValidationError(path + ".page_number: must be positive");
    if (!numbers.insert(p.page_number).second)
      throw ValidationError(path + ".page_number: duplicate page " + std::to_string(p.page_number));
    p.element_detections = detail::detection_list(pages[i], "element_detections", path, false);
    p.layout_detections = detail::detection_list(pages[i], "layout_detections", path, true);
    p.full_page_text = optional_string(pages[i], "full_page_text", path);
    in.pages.push_back(std::move(p));
  }
  return in;
}

inline DetectionInput apply_thresholds(DetectionInput in, const Thresholds& t) {
  t.validate();
  for (PageDetections& p : in.pages) {
    std::erase_if(p.element_detections,
                  [&](const RawDetection& d) { return d.confidence < t.element; });
    std::erase_if(p.layout_detections,
                  [&](const RawDetection& d) { return d.confidence < t.layout; });
  }
  return in;
}

inline DetectionInput load_detections_text(const std::string& text, const Thresholds& t,
                                           const std::string& source = "<input>") {
  const Json j = parse_json_text(text, source);
  try {
    return apply_thresholds(parse_detections(j), t);
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

inline DetectionInput load_detections(const std::string& path, const Thresholds& t = {}) {
  return load_detections_text(read_file(path), t, path);
}

}  // namespace layoutweave::ingest

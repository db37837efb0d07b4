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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "layoutweave/layoutweave.hpp"

namespace testing_support {

namespace lw = layoutweave;

inline std::filesystem::path data_dir() { return LAYOUTWEAVE_TEST_DATA; }
inline std::filesystem::path input(const std::string& name) { return data_dir() / "fixtures" / "inputs" / name; }
inline std::filesystem::path client(const std::string& name) { return data_dir() / "fixtures" / "clients" / name; }
inline std::filesystem::path golden(const std::string& name) { return data_dir() / "golden" / name; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  std::filesystem::path p =
      std::filesystem::temp_directory_path() / ("layoutweave-" + tag + "-" + std::to_string(rng()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline lw::Entity entity(const std::string& id, lw::ElementLabel type, lw::BBox box, std::string text = "x-text",
                         double confidence = 0.9) {
  lw::EntityValue v;
  v.text = std::move(text);
  return lw::Entity::make(id, type, confidence, std::move(v), box, lw::SchemaWeights{});
}

inline lw::Entity text_at(const std::string& id, double left, double top, double right, double bottom,
                          std::string text = "some text") {
  return entity(id, lw::ElementLabel::kText, {left, top, right, bottom}, std::move(text));
}

inline std::vector<std::string> ids_of(const std::vector<lw::Entity>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.id);
  return out;
}

// Pipeline configuration shared by the fixture-driven tests and goldens.
inline lw::pipeline::PipelineConfig fixture_config(const std::filesystem::path& out_dir) {
  lw::pipeline::PipelineConfig cfg;
  cfg.output_dir = out_dir.string();
  cfg.usefulness_fixture = client("usefulness.json").string();
  cfg.enrichment_fixture = client("enrichment.json").string();
  cfg.category_fixture = client("category.json").string();
  cfg.id_seed = 7;
  return cfg;
}

inline std::vector<std::string> fixture_inputs() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(data_dir() / "fixtures" / "inputs"))
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

// Loads a fixture input and assembles it with the fixture clients, without
// writing anything.
inline lw::DocumentResult assemble_fixture(const std::string& name, std::size_t workers = 1) {
  lw::pipeline::PipelineConfig cfg = fixture_config(std::filesystem::temp_directory_path());
  cfg.workers = workers;
  const lw::ingest::DetectionInput in = lw::ingest::load_detections(input(name).string(), cfg.thresholds);
  return lw::pipeline::assemble_document(in, name, cfg, lw::pipeline::clients_from_config(cfg));
}

// build_entities -> assemble_page for one page of caller-identified
// detections.
inline lw::PageResult assemble_detections(const lw::ingest::PageDetections& page,
                                          const lw::assembly::AssemblyParams& params = {}) {
  lw::IdGenerator ids(1);
  std::vector<lw::Entity> es = lw::ingest::build_entities(page.element_detections, lw::SchemaWeights{}, ids);
  return lw::assembly::assemble_page(page.page_number, lw::assembly::regions_from(page.layout_detections),
                                     std::move(es), {}, params);
}

// Random page on a coarse grid so that equal coordinates, duplicate texts
// and overlapping regions are common.
inline lw::ingest::PageDetections random_page(std::mt19937_64& rng) {
  static const char* kLabels[] = {"text", "text", "text", "title", "section", "list_item", "table",
                                  "image", "page_header", "page_footer", "table_caption", "header"};
  static const char* kTexts[] = {"Alpha beta", "Gamma delta", "Alpha beta", "Epsilon", "Zeta eta theta"};
  static const char* kRegions[] = {"multi_column", "row_group", "group", "column_text", "column_group",
                                   "layout_box"};
  static const double kConf[] = {0.5, 0.6, 0.8, 0.9};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  lw::ingest::PageDetections p;
  const std::size_t n = 3 + pick(13);
  for (std::size_t i = 0; i < n; ++i) {
    lw::ingest::RawDetection d;
    d.id = "e" + std::to_string(i);
    d.label = kLabels[pick(std::size(kLabels))];
    d.confidence = kConf[pick(4)];
    const double left = 50.0 * static_cast<double>(1 + pick(10));
    const double top = 50.0 * static_cast<double>(pick(16));
    d.bbox = {left, top, left + 50.0 * static_cast<double>(1 + pick(4)), top + 40.0};
    d.text = kTexts[pick(std::size(kTexts))];
    p.element_detections.push_back(d);
  }
  const std::size_t regions = pick(4);
  for (std::size_t i = 0; i < regions; ++i) {
    lw::ingest::RawDetection d;
    d.label = kRegions[pick(std::size(kRegions))];
    d.confidence = kConf[pick(4)];
    const double left = 50.0 * static_cast<double>(pick(6));
    const double top = 50.0 * static_cast<double>(pick(10));
    d.bbox = {left, top, left + 100.0 * static_cast<double>(1 + pick(6)), top + 100.0 * static_cast<double>(1 + pick(6))};
    p.layout_detections.push_back(d);
  }
  return p;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace testing_support

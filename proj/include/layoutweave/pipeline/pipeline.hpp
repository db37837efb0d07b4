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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "layoutweave/assembly/header_footer.hpp"
#include "layoutweave/assembly/page.hpp"
#include "layoutweave/assembly/params.hpp"
#include "layoutweave/core/error.hpp"
#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/core/schema.hpp"
#include "layoutweave/exporters/chunks.hpp"
#include "layoutweave/exporters/dpbench.hpp"
#include "layoutweave/exporters/graph.hpp"
#include "layoutweave/exporters/markdown.hpp"
#include "layoutweave/ingest/clients.hpp"
#include "layoutweave/ingest/detections.hpp"
#include "layoutweave/ingest/enrich.hpp"
#include "layoutweave/ingest/entities.hpp"
#include "layoutweave/metrics/evaluate.hpp"
#include "layoutweave/util/ids.hpp"
#include "layoutweave/util/log.hpp"
#include "layoutweave/util/parallel.hpp"

namespace layoutweave::pipeline {

enum class Format { kJson, kMarkdown, kChunks, kGraph, kDpBench };

inline constexpr Format kAllFormats[] = {Format::kJson, Format::kMarkdown, Format::kChunks, Format::kGraph,
                                         Format::kDpBench};

inline std::string_view to_string(Format f) {
  switch (f) {
    case Format::kJson:
      return "json";
    case Format::kMarkdown:
      return "markdown";
    case Format::kChunks:
      return "chunks";
    case Format::kGraph:
      return "graph";
    case Format::kDpBench:
      return "dpbench";
  }
  return "json";
}

inline Format parse_format(std::string_view s) {
  for (Format f : kAllFormats)
    if (to_string(f) == s) return f;
  throw Error("unknown format '" + std::string(s) + "'");
}

inline std::string_view extension(Format f) {
  switch (f) {
    case Format::kJson:
      return ".result.json";
    case Format::kMarkdown:
      return ".md";
    case Format::kChunks:
      return ".chunks.jsonl";
    case Format::kGraph:
      return ".graph.json";
    case Format::kDpBench:
      return ".dpbench.json";
  }
  return ".result.json";
}

struct PipelineConfig {
  std::vector<std::string> inputs;
  std::string output_dir = ".";
  ingest::Thresholds thresholds;
  bool skip_images = true;  // usefulness gate on
  bool skip_insights = false;
  bool skip_headers_footers = false;
  std::set<Format> formats{std::begin(kAllFormats), std::end(kAllFormats)};
  assembly::AssemblyParams params;
  SchemaWeights schema;
  std::optional<std::string> usefulness_fixture;
  std::optional<std::string> enrichment_fixture;
  std::optional<std::string> category_fixture;
  std::size_t workers = 1;
  std::optional<std::uint64_t> id_seed;

  void validate() const {
    thresholds.validate();
    params.validate();
    if (formats.empty()) throw ValidationError("at least one output format is required");
    if (workers < 1) throw ValidationError("worker count must be >= 1");
  }
};

struct Clients {
  std::shared_ptr<const ingest::UsefulnessClassifier> usefulness;
  std::shared_ptr<const ingest::EnrichmentClient> enrichment;  // null: no enrichment
  std::shared_ptr<const ingest::CategoryClassifier> category;
};

inline Clients clients_from_config(const PipelineConfig& config) {
  Clients c;
  if (config.usefulness_fixture) {
    c.usefulness = std::make_shared<ingest::FixtureUsefulnessClassifier>(
        ingest::FixtureUsefulnessClassifier::from_file(*config.usefulness_fixture));
  } else {
    c.usefulness = std::make_shared<ingest::AlwaysUsefulClassifier>();
  }
  if (config.enrichment_fixture)
    c.enrichment = std::make_shared<ingest::FixtureEnrichmentClient>(
        ingest::FixtureEnrichmentClient::from_file(*config.enrichment_fixture));
  if (config.category_fixture) {
    c.category = std::make_shared<ingest::FixtureCategoryClassifier>(
        ingest::FixtureCategoryClassifier::from_file(*config.category_fixture));
  } else {
    c.category = std::make_shared<ingest::ConstantCategoryClassifier>(ingest::kDefaultCategory);
  }
  return c;
}

// Writes to a sibling temporary file and renames it over `path`, so a
// reader never sees a partial file at the final path.
inline void atomic_write(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

inline std::string render(const DocumentResult& doc, Format f, bool skip_headers_footers) {
  switch (f) {
    case Format::kJson:
      return dump(to_json(doc));
    case Format::kMarkdown: {
      exporters::MarkdownOptions opts;
      opts.skip_headers_footers = skip_headers_footers;
      return exporters::to_markdown(doc, opts);
    }
    case Format::kChunks:
      return exporters::chunks_to_ndjson(exporters::to_chunks(doc));
    case Format::kGraph:
      return dump(exporters::to_json(exporters::to_graph(doc)));
    case Format::kDpBench:
      return dump(exporters::dpbench_file_json(doc.filename, exporters::to_dpbench(doc)));
  }
  return {};
}

// Renders the formats concurrently, then writes them in format order.
inline std::vector<std::string> write_exports(const DocumentResult& doc, const std::set<Format>& formats,
                                              const std::filesystem::path& output_dir, const std::string& stem,
                                              bool skip_headers_footers, std::size_t workers) {
  const std::vector<Format> list(formats.begin(), formats.end());
  const std::vector<std::string> bodies = parallel_map<std::string>(
      list.size(), workers, [&](std::size_t i) { return render(doc, list[i], skip_headers_footers); });
  std::filesystem::create_directories(output_dir);
  std::vector<std::string> files;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::filesystem::path path = output_dir / (stem + std::string(extension(list[i])));
    atomic_write(path, bodies[i]);
    files.push_back(path.string());
  }
  return files;
}

namespace detail {

inline std::optional<double> metadata_page_height(const std::map<std::string, std::string>& metadata) {
  auto it = metadata.find("page_height");
  if (it == metadata.end()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used == it->second.size() && v > 0.0) return v;
  } catch (const std::exception&) {
  }
  log::warn("ignoring metadata page_height '" + it->second + "'");
  return std::nullopt;
}

struct PageOutcome {
  std::optional<PageResult> page;
  int llm_calls = 0;
  std::string full_text;
};

inline PageOutcome process_page(const ingest::PageDetections& det, const PipelineConfig& config,
                                const Clients& clients, const assembly::AssemblyParams& params) {
  PageOutcome out;
  try {
    IdGenerator ids = config.id_seed ? IdGenerator(*config.id_seed + static_cast<std::uint64_t>(det.page_number))
                                     : IdGenerator();
    std::vector<Entity> entities =
        ingest::filter_small_text(ingest::build_entities(det.element_detections, config.schema, ids));
    std::vector<std::string> skipped;
    if (config.skip_images) {
      ingest::GateResult gate = ingest::gate_images(std::move(entities), *clients.usefulness, config.workers);
      entities = std::move(gate.kept);
      skipped = std::move(gate.skipped_ids);
    }
    const ingest::EnrichmentClient* client = config.skip_insights ? nullptr : clients.enrichment.get();
    ingest::EnrichOutcome enriched = ingest::enrich_entities(std::move(entities), client, config.workers);
    out.llm_calls = enriched.calls;
    PageResult page = assembly::assemble_page(det.page_number, assembly::regions_from(det.layout_detections),
                                              std::move(enriched.entities), std::move(skipped), params);
    if (det.full_page_text) {
      out.full_text = *det.full_page_text;
    } else {
      std::vector<std::string> texts;
      for (const Entity& e : page.elements)
        if (!e.value.text.empty()) texts.push_back(e.value.text);
      out.full_text = exporters::join(texts, "\n");
    }
    out.page = std::move(page);
  } catch (const std::exception& e) {
    log::warn("page " + std::to_string(det.page_number) + " failed: " + e.what());
  }
  return out;
}

}  // namespace detail

// Detections -> DocumentResult. Pages run concurrently; header/footer
// correction waits for all of them. Failed pages are counted and omitted.
inline DocumentResult assemble_document(const ingest::DetectionInput& input, const std::string& fallback_name,
                                        const PipelineConfig& config, const Clients& clients) {
  assembly::AssemblyParams params = config.params;
  if (!params.header_footer.page_height)
    params.header_footer.page_height = detail::metadata_page_height(input.metadata);

  const std::vector<detail::PageOutcome> outcomes = parallel_map<detail::PageOutcome>(
      input.pages.size(), config.workers,
      [&](std::size_t i) { return detail::process_page(input.pages[i], config, clients, params); });

  DocumentResult doc;
  doc.filename = input.filename.empty() ? fallback_name : input.filename;
  doc.metadata = input.metadata;
  doc.total_pages = static_cast<int>(input.pages.size());
  std::vector<PageResult> pages;
  std::vector<std::string> texts;
  for (const detail::PageOutcome& o : outcomes) {
    doc.total_llm_calls += o.llm_calls;
    if (!o.page) {
      ++doc.total_failed_pages;
      continue;
    }
    pages.push_back(*o.page);
    if (!o.full_text.empty()) texts.push_back(o.full_text);
  }
  doc.total_processed_pages = static_cast<int>(pages.size());
  std::sort(pages.begin(), pages.end(),
            [](const PageResult& a, const PageResult& b) { return a.page_number < b.page_number; });
  doc.pages = assembly::correct_headers_footers(std::move(pages), params.header_footer, config.schema);
  doc.document_category = ingest::classify_document(exporters::join(texts, "\n"), *clients.category);
  doc.validate();
  return doc;
}

struct DocumentRun {
  std::string input;
  std::optional<DocumentResult> result;
  std::vector<std::string> files;
  std::string error;  // set when the document wholly failed

  bool failed() const { return !error.empty(); }
};

struct PipelineReport {
  std::vector<DocumentRun> documents;

  int exit_code() const {
    for (const DocumentRun& d : documents)
      if (d.failed()) return 1;
    return 0;
  }
};

inline std::string output_stem(const std::string& input) {
  return std::filesystem::path(input).stem().string();
}

// A document wholly fails when its input cannot be loaded or none of its
// pages could be assembled; the other documents still run.
inline PipelineReport run_pipeline(const PipelineConfig& config, const Clients& clients) {
  config.validate();
  std::set<std::string> stems;
  for (const std::string& in : config.inputs)
    if (!stems.insert(output_stem(in)).second)
      throw ValidationError("inputs share the output name '" + output_stem(in) + "'");

  PipelineReport report;
  for (const std::string& in : config.inputs) {
    DocumentRun run;
    run.input = in;
    try {
      const ingest::DetectionInput input = ingest::load_detections(in, config.thresholds);
      DocumentResult doc =
          assemble_document(input, std::filesystem::path(in).filename().string(), config, clients);
      if (doc.total_pages > 0 && doc.total_processed_pages == 0) run.error = "all pages failed";
      run.files = write_exports(doc, config.formats, config.output_dir, output_stem(in),
                                config.skip_headers_footers, config.workers);
      run.result = std::move(doc);
    } catch (const std::exception& e) {
      run.error = e.what();
    }
    if (run.failed()) log::warn(in + ": " + run.error);
    report.documents.push_back(std::move(run));
  }
  return report;
}

inline PipelineReport run_pipeline(const PipelineConfig& config) {
  return run_pipeline(config, clients_from_config(config));
}

struct ExportOptions {
  std::string output_dir = ".";
  bool skip_headers_footers = false;
  std::size_t workers = 1;
};

// Re-runs exporters over a stored DocumentResult.
inline std::vector<std::string> export_command(const std::string& json_path, const std::set<Format>& formats,
                                               const ExportOptions& opts) {
  if (formats.empty()) throw ValidationError("at least one output format is required");
  const DocumentResult doc = load_document_result(json_path);
  std::string stem = output_stem(json_path);
  if (const std::string_view suffix = ".result"; stem.ends_with(suffix)) stem.resize(stem.size() - suffix.size());
  return write_exports(doc, formats, opts.output_dir, stem, opts.skip_headers_footers, opts.workers);
}

inline metrics::EvalReport eval_command(const std::string& reference, const std::string& prediction,
                                        metrics::EvalMode mode, const std::optional<std::string>& report_path,
                                        std::size_t workers = 1) {
  metrics::EvalReport report = metrics::evaluate(reference, prediction, mode, workers);
  if (report_path) atomic_write(*report_path, dump(metrics::to_json(report)));
  return report;
}

}  // namespace layoutweave::pipeline

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


// layoutweave command-line tool.
//
//   layoutweave parse  INPUT... [-o DIR] [--formats json,markdown,...]
//   layoutweave export RESULT.json [-o DIR] [--formats ...]
//   layoutweave eval   REFERENCE PREDICTION [--mode layout|table] [--report FILE]
//
// Every option can also come from a TOML file passed with --config; options
// given on the command line win. Exit status: 0 success, 1 when a document
// failed, 2 on invalid usage.

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layoutweave/ingest/http_client.hpp"
#include "layoutweave/layoutweave.hpp"

namespace lw = layoutweave;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::set<lw::pipeline::Format> parse_formats(const std::vector<std::string>& names) {
  std::set<lw::pipeline::Format> out;
  for (const std::string& n : names) out.insert(lw::pipeline::parse_format(n));
  return out;
}

const std::vector<std::string> kFormatNames{"json", "markdown", "chunks", "graph", "dpbench"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Document layout assembly, export and evaluation"};
  app.set_config("--config", "", "TOML configuration file");
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  std::size_t workers = 1;
  app.add_flag("-q,--quiet", quiet, "Suppress warnings");
  app.add_option("-j,--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  // parse
  lw::pipeline::PipelineConfig cfg;
  std::vector<std::string> parse_formats_in = kFormatNames;
  std::optional<std::string> enrichment_url;
  std::optional<std::uint64_t> seed;
  std::optional<double> page_height;
  auto* parse = app.add_subcommand("parse", "Assemble detection files into documents and export them");
  parse->add_option("inputs", cfg.inputs, "Detection JSON files")->required()->check(CLI::ExistingFile);
  parse->add_option("-o,--output-dir", cfg.output_dir, "Output directory");
  parse->add_option("--layout-threshold", cfg.thresholds.layout, "Layout detection confidence threshold")
      ->check(CLI::Range(0.0, 1.0));
  parse->add_option("--element-threshold", cfg.thresholds.element, "Element detection confidence threshold")
      ->check(CLI::Range(0.0, 1.0));
  parse->add_flag("--skip-images,!--no-skip-images", cfg.skip_images, "Run the image usefulness gate");
  parse->add_flag("--skip-insights", cfg.skip_insights, "Disable enrichment calls");
  parse->add_flag("--skip-headers-footers", cfg.skip_headers_footers, "Leave page furniture out of Markdown");
  parse->add_option("--formats", parse_formats_in, "Output formats")
      ->delimiter(',')
      ->check(CLI::IsMember(kFormatNames));
  parse->add_option("--eps", cfg.params.cluster.eps, "Column clustering radius on scaled x centers");
  parse->add_option("--min-samples", cfg.params.cluster.min_samples, "Column clustering density");
  parse->add_option("--row-angle", cfg.params.row.angle_threshold_degrees, "Row ordering angle threshold");
  parse->add_option("--fuzzy-threshold", cfg.params.header_footer.fuzzy_threshold,
                    "Header/footer text match threshold");
  parse->add_option("--header-top-limit", cfg.params.header_footer.header_top_limit,
                    "Header position limit in pixels");
  parse->add_option("--bottom-fraction", cfg.params.header_footer.bottom_fraction,
                    "Footer band as a fraction of page height");
  parse->add_option("--page-height", page_height, "Page height in pixels");
  parse->add_option("--usefulness-fixture", cfg.usefulness_fixture, "Image usefulness replies")
      ->check(CLI::ExistingFile);
  parse->add_option("--enrichment-fixture", cfg.enrichment_fixture, "Enrichment replies")
      ->check(CLI::ExistingFile);
  parse->add_option("--category-fixture", cfg.category_fixture, "Document category replies")
      ->check(CLI::ExistingFile);
  parse->add_option("--enrichment-url", enrichment_url, "Enrichment endpoint")
      ->envname(lw::ingest::kEnrichmentUrlEnv);
  parse->add_option("--seed", seed, "Seed for generated element ids");

  // export
  std::string export_input;
  std::vector<std::string> export_formats_in = kFormatNames;
  lw::pipeline::ExportOptions export_opts;
  auto* exp = app.add_subcommand("export", "Re-run exporters over a stored document result");
  exp->add_option("result", export_input, "Document result JSON")->required()->check(CLI::ExistingFile);
  exp->add_option("-o,--output-dir", export_opts.output_dir, "Output directory");
  exp->add_option("--formats", export_formats_in, "Output formats")
      ->delimiter(',')
      ->check(CLI::IsMember(kFormatNames));
  exp->add_flag("--skip-headers-footers", export_opts.skip_headers_footers,
                "Leave page furniture out of Markdown");

  // eval
  std::string reference;
  std::string prediction;
  std::string mode = "layout";
  std::optional<std::string> report_path;
  auto* eval = app.add_subcommand("eval", "Score predictions against references");
  eval->add_option("reference", reference, "Reference file")->required();
  eval->add_option("prediction", prediction, "Prediction file")->required();
  eval->add_option("--mode", mode, "layout or table")->check(CLI::IsMember({"layout", "table"}));
  eval->add_option("--report", report_path, "Write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  lw::log::quiet() = quiet;

  try {
    if (parse->parsed()) {
      cfg.formats = parse_formats(parse_formats_in);
      cfg.workers = workers;
      cfg.id_seed = seed;
      if (page_height) cfg.params.header_footer.page_height = page_height;
      try {
        cfg.validate();
      } catch (const lw::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      lw::pipeline::Clients clients = lw::pipeline::clients_from_config(cfg);
      if (enrichment_url && !enrichment_url->empty()) {
        if (cfg.enrichment_fixture) {
          lw::log::warn("enrichment fixture given, ignoring endpoint " + *enrichment_url);
        } else {
          clients.enrichment = std::make_shared<lw::ingest::HttpEnrichmentClient>(*enrichment_url);
        }
      }
      const lw::pipeline::PipelineReport report = lw::pipeline::run_pipeline(cfg, clients);
      for (const auto& doc : report.documents) {
        if (doc.failed()) std::cerr << "error: " << doc.input << ": " << doc.error << '\n';
        for (const std::string& f : doc.files) std::cout << f << '\n';
      }
      return report.exit_code();
    }
    if (exp->parsed()) {
      export_opts.workers = workers;
      for (const std::string& f :
           lw::pipeline::export_command(export_input, parse_formats(export_formats_in), export_opts))
        std::cout << f << '\n';
      return 0;
    }
    const lw::metrics::EvalReport report = lw::pipeline::eval_command(
        reference, prediction, lw::metrics::parse_eval_mode(mode), report_path, workers);
    std::cout << lw::metrics::summary_text(report);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

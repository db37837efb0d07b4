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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include <sys/wait.h>

#include "layoutweave/layoutweave.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
namespace lw = layoutweave;
namespace pl = layoutweave::pipeline;
using testing_support::client;
using testing_support::fixture_config;
using testing_support::input;
using testing_support::scratch_dir;
using testing_support::slurp;

namespace {

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = slurp(e.path());
  return out;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = scratch_dir("cli" + std::to_string(++counter));
  const std::string cmd = std::string("\"") + LAYOUTWEAVE_CLI + "\" " + args + " >\"" + (dir / "out").string() +
                          "\" 2>\"" + (dir / "err").string() + "\"";
  const int status = std::system(cmd.c_str());
  CliRun r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(dir / "out"), slurp(dir / "err")};
  fs::remove_all(dir);
  return r;
}

}  // namespace

TEST(Pipeline, SingleFormatWritesOneFile) {
  const fs::path out = scratch_dir("json-only");
  pl::PipelineConfig cfg = fixture_config(out);
  cfg.inputs = {input("two_page.json").string()};
  cfg.formats = {pl::Format::kJson};
  const pl::PipelineReport r = pl::run_pipeline(cfg);
  EXPECT_EQ(r.exit_code(), 0);
  const auto files = tree(out);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files.begin()->first, "two_page.result.json");
  fs::remove_all(out);
}

TEST(Pipeline, CountersAndCalls) {
  const lw::DocumentResult doc = testing_support::assemble_fixture("two_page.json");
  EXPECT_EQ(doc.total_pages, 2);
  EXPECT_EQ(doc.total_processed_pages, 2);
  EXPECT_EQ(doc.total_failed_pages, 0);
  EXPECT_EQ(doc.total_llm_calls, 2);
  EXPECT_EQ(doc.document_category, "financial");
  const lw::Entity* table = doc.pages[0].find("p1-table");
  ASSERT_NE(table, nullptr);
  EXPECT_EQ(table->value.title, "Regional revenue");
  ASSERT_TRUE(table->value.data);
  EXPECT_EQ(table->value.data->size(), 2u);
  EXPECT_EQ(doc.pages[0].find("p1-tiny"), nullptr);
  EXPECT_EQ(doc.pages[0].find("p1-weak"), nullptr);
  EXPECT_EQ(doc.pages[1].find("p2-header")->type, lw::ElementLabel::kPageHeader);
}

TEST(Pipeline, SkipInsightsMakesNoCalls) {
  pl::PipelineConfig cfg = fixture_config(fs::temp_directory_path());
  cfg.skip_insights = true;
  const auto in = lw::ingest::load_detections(input("two_page.json").string());
  const lw::DocumentResult doc = pl::assemble_document(in, "two_page.json", cfg, pl::clients_from_config(cfg));
  EXPECT_EQ(doc.total_llm_calls, 0);
  EXPECT_FALSE(doc.pages[0].find("p1-table")->value.title);
}

TEST(Pipeline, GateOffKeepsEveryImage) {
  pl::PipelineConfig cfg = fixture_config(fs::temp_directory_path());
  cfg.skip_images = false;
  const auto in = lw::ingest::load_detections(input("two_page.json").string());
  const lw::DocumentResult doc = pl::assemble_document(in, "two_page.json", cfg, pl::clients_from_config(cfg));
  EXPECT_TRUE(doc.pages[0].skipped_images.empty());
  EXPECT_NE(doc.pages[0].find("p1-logo"), nullptr);
  EXPECT_EQ(doc.total_llm_calls, 3);
}

TEST(Pipeline, WorkerCountDoesNotChangeOutputs) {
  std::map<std::string, std::string> first;
  for (std::size_t workers : {1u, 8u}) {
    const fs::path out = scratch_dir("workers");
    pl::PipelineConfig cfg = fixture_config(out);
    cfg.inputs = testing_support::fixture_inputs();
    cfg.workers = workers;
    lw::log::quiet() = true;
    pl::run_pipeline(cfg);
    lw::log::quiet() = false;
    const auto files = tree(out);
    fs::remove_all(out);
    EXPECT_FALSE(files.empty());
    if (workers == 1) {
      first = files;
    } else {
      EXPECT_EQ(files, first);
    }
  }
}

TEST(Pipeline, FailedPageIsCountedNotFatal) {
  const fs::path out = scratch_dir("failed-page");
  pl::PipelineConfig cfg = fixture_config(out);
  cfg.inputs = {input("failed_page.json").string()};
  lw::log::quiet() = true;
  const auto r = pl::run_pipeline(cfg);
  lw::log::quiet() = false;
  EXPECT_EQ(r.exit_code(), 0);
  ASSERT_TRUE(r.documents[0].result);
  EXPECT_EQ(r.documents[0].result->total_processed_pages, 2);
  EXPECT_EQ(r.documents[0].result->total_failed_pages, 1);
  fs::remove_all(out);
}

TEST(Pipeline, UnreadableInputFailsOnlyThatDocument) {
  const fs::path out = scratch_dir("unreadable");
  const fs::path bad = out / "broken.json";
  std::ofstream(bad) << "{ \"pages\": [";
  pl::PipelineConfig cfg = fixture_config(out / "exports");
  cfg.inputs = {bad.string(), input("two_column.json").string()};
  lw::log::quiet() = true;
  const auto r = pl::run_pipeline(cfg);
  lw::log::quiet() = false;
  EXPECT_EQ(r.exit_code(), 1);
  ASSERT_EQ(r.documents.size(), 2u);
  EXPECT_TRUE(r.documents[0].failed());
  EXPECT_FALSE(r.documents[1].failed());
  EXPECT_EQ(r.documents[1].files.size(), 5u);
  fs::remove_all(out);
}

TEST(Pipeline, DuplicateOutputNamesRejected) {
  pl::PipelineConfig cfg = fixture_config(fs::temp_directory_path());
  cfg.inputs = {input("two_page.json").string(), (testing_support::data_dir() / "fixtures" / "two_page.json").string()};
  EXPECT_THROW(pl::run_pipeline(cfg), lw::ValidationError);
  cfg.inputs.clear();
  cfg.formats.clear();
  EXPECT_THROW(cfg.validate(), lw::ValidationError);
}

TEST(Pipeline, AtomicWriteReplacesWithoutTempLeftovers) {
  const fs::path dir = scratch_dir("atomic");
  pl::atomic_write(dir / "f.txt", "first");
  pl::atomic_write(dir / "f.txt", "second");
  EXPECT_EQ(slurp(dir / "f.txt"), "second");
  EXPECT_EQ(tree(dir).size(), 1u);
  EXPECT_THROW(pl::atomic_write(dir / "missing" / "f.txt", "x"), lw::Error);
  fs::remove_all(dir);
}

TEST(Export, RoundTripIsByteIdentical) {
  const fs::path out = scratch_dir("roundtrip");
  pl::PipelineConfig cfg = fixture_config(out / "parse");
  cfg.inputs = {input("two_page.json").string()};
  pl::run_pipeline(cfg);
  pl::ExportOptions opts;
  opts.output_dir = (out / "export").string();
  const std::set<pl::Format> all(std::begin(pl::kAllFormats), std::end(pl::kAllFormats));
  pl::export_command((out / "parse" / "two_page.result.json").string(), all, opts);
  EXPECT_EQ(tree(out / "export"), tree(out / "parse"));

  opts.output_dir = (out / "md").string();
  const auto files = pl::export_command((out / "parse" / "two_page.result.json").string(), {pl::Format::kMarkdown}, opts);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(fs::path(files[0]).filename(), "two_page.md");
  fs::remove_all(out);
}

TEST(Export, MalformedResultIsRejected) {
  const fs::path dir = scratch_dir("malformed");
  std::ofstream(dir / "bad.json") << R"({"filename": "x", "pages": []})";
  EXPECT_THROW(pl::export_command((dir / "bad.json").string(), {pl::Format::kMarkdown}, {dir.string()}),
               lw::ValidationError);
  fs::remove_all(dir);
}

TEST(Cli, ParseExportEval) {
  const fs::path dir = scratch_dir("cli-flow");
  const std::string fixtures = " --usefulness-fixture \"" + client("usefulness.json").string() +
                               "\" --enrichment-fixture \"" + client("enrichment.json").string() +
                               "\" --category-fixture \"" + client("category.json").string() + "\"";
  const CliRun parse = cli("parse \"" + input("two_page.json").string() + "\" -o \"" + dir.string() + "\" --seed 7" + fixtures);
  ASSERT_EQ(parse.code, 0) << parse.err;
  EXPECT_NE(parse.out.find("two_page.md"), std::string::npos);
  EXPECT_EQ(tree(dir).size(), 5u);

  const std::string dp = (dir / "two_page.dpbench.json").string();
  const CliRun layout = cli("eval \"" + dp + "\" \"" + dp + "\"");
  EXPECT_EQ(layout.code, 0) << layout.err;
  EXPECT_NE(layout.out.find("NID 1.00\n"), std::string::npos) << layout.out;
  const CliRun table = cli("eval --mode table \"" + dp + "\" \"" + dp + "\" --report \"" + (dir / "r.json").string() + "\"");
  EXPECT_EQ(table.code, 0) << table.err;
  EXPECT_NE(table.out.find("TEDS 1.00 TEDS-S 1.00\n"), std::string::npos) << table.out;
  EXPECT_EQ(lw::Json::parse(slurp(dir / "r.json"))["mean_teds"], 1.0);

  const CliRun exp = cli("export \"" + (dir / "two_page.result.json").string() + "\" --formats markdown -o \"" +
                         (dir / "again").string() + "\"");
  EXPECT_EQ(exp.code, 0) << exp.err;
  EXPECT_EQ(slurp(dir / "again" / "two_page.md"), slurp(dir / "two_page.md"));
  fs::remove_all(dir);
}

TEST(Cli, ConfigFileSuppliesOptions) {
  const fs::path dir = scratch_dir("cli-config");
  std::ofstream(dir / "lw.toml") << "[parse]\noutput-dir = \"" << (dir / "out").string() << "\"\nformats = [\"markdown\"]\n"
                                 << "skip-insights = true\n";
  const CliRun r = cli("--config \"" + (dir / "lw.toml").string() + "\" parse \"" + input("two_column.json").string() + "\"");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(tree(dir / "out").size(), 1u);
  fs::remove_all(dir);
}

TEST(Cli, ErrorsAndExitCodes) {
  const fs::path dir = scratch_dir("cli-errors");
  std::ofstream(dir / "bad.json") << "{\"filename\": \"x\"";
  const CliRun malformed = cli("export \"" + (dir / "bad.json").string() + "\" -o \"" + dir.string() + "\"");
  EXPECT_EQ(malformed.code, 1);
  EXPECT_NE(malformed.err.find("bad.json"), std::string::npos) << malformed.err;

  EXPECT_EQ(cli("eval /nonexistent/a.json /nonexistent/b.json").code, 1);
  EXPECT_EQ(cli("parse /nonexistent/a.json").code, 2);
  EXPECT_EQ(cli("eval onlyone.json").code, 2);
  EXPECT_EQ(cli("parse \"" + input("two_page.json").string() + "\" --formats pdf").code, 2);
  EXPECT_EQ(cli("parse \"" + input("two_page.json").string() + "\" --eps 0 -o \"" + dir.string() + "\"").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
  fs::remove_all(dir);
}

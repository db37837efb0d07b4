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

#include <random>

#include "layoutweave/layoutweave.hpp"
#include "support/fixtures.hpp"

namespace lw = layoutweave;
namespace ex = layoutweave::exporters;
using lw::ElementLabel;
using testing_support::entity;
using testing_support::text_at;

namespace {

lw::DocumentResult doc_of(std::vector<std::vector<lw::Entity>> pages) {
  lw::DocumentResult d;
  d.filename = "doc.pdf";
  int n = 0;
  for (auto& es : pages) {
    d.pages.push_back(lw::assembly::assemble_page(++n, {}, std::move(es), {}));
  }
  d.total_pages = d.total_processed_pages = n;
  return d;
}

const ex::MarkdownOptions kPlain{false, false};

lw::Entity table_with_rows(const std::string& id, std::vector<lw::DataRow> rows) {
  lw::Entity t = entity(id, ElementLabel::kTable, {0, 500, 400, 700}, "");
  t.value.data = std::move(rows);
  return t;
}

}  // namespace

TEST(Markdown, Examples) {
  EXPECT_EQ(ex::to_markdown(doc_of({{entity("t", ElementLabel::kTitle, {0, 0, 10, 10}, "Results")}}), kPlain),
            "## Results\n");
  EXPECT_EQ(ex::to_markdown(doc_of({{entity("f", ElementLabel::kPageFooter, {0, 900, 10, 910}, "Page 1")}}),
                            {true, false}),
            "\n");
  EXPECT_EQ(ex::to_markdown(doc_of({{table_with_rows("tb", {{{"A", "1"}, {"B", "2"}}})}}), kPlain),
            "| A | B |\n| --- | --- |\n| 1 | 2 |\n");
}

TEST(Markdown, ElementKinds) {
  lw::Entity img = entity("img", ElementLabel::kImage, {0, 300, 100, 400}, "");
  img.value.title = "Chart";
  img.value.summary = "Growth";
  lw::Entity tbl = table_with_rows("tbl", {{{"a|b", "x\ny"}}});
  tbl.value.title = "Sales";
  const lw::DocumentResult d =
      doc_of({{entity("h", ElementLabel::kPageHeader, {0, 0, 100, 20}, "Running"),
               entity("s", ElementLabel::kSection, {0, 30, 100, 50}, "Part\nOne"),
               entity("li", ElementLabel::kListItem, {0, 60, 100, 90}, "- a\n- b"), text_at("p", 0, 100, 100, 130, "Para"),
               img, tbl},
              {text_at("q", 0, 0, 100, 30, "Next page")}});
  EXPECT_EQ(ex::to_markdown(d, kPlain),
            "> [page_header] Running\n\n### Part One\n\n- a\n- b\n\nPara\n\n![Chart](img)\n\n*Growth*\n\n"
            "**Sales**\n\n| a\\|b |\n| --- |\n| x<br>y |\n\n---\n\nNext page\n");
  const std::string anchored = ex::to_markdown(d);
  EXPECT_NE(anchored.find("<!-- element:li -->\n- a\n- b"), std::string::npos);
}

TEST(Markdown, ListItems) {
  EXPECT_EQ(ex::extract_list_items("- a\n- b"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(ex::extract_list_items("• x • y"), (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(ex::extract_list_items("").empty());
  EXPECT_EQ(ex::extract_list_items("1. one\n2) two\n* three"), (std::vector<std::string>{"one", "two", "three"}));
  EXPECT_EQ(ex::extract_list_items("-5 degrees"), std::vector<std::string>{"-5 degrees"});
  EXPECT_EQ(ex::extract_list_items("a•b"), std::vector<std::string>{"a•b"});
}

TEST(Chunks, Examples) {
  const auto single = ex::to_chunks(doc_of({{text_at("t", 0, 0, 100, 30, "Only paragraph here")}}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].metadata.chunk_kind, ex::ChunkKind::kPage);
  EXPECT_EQ(single[0].metadata.token_count, 3u);

  const auto blocks = ex::to_chunks(doc_of({{entity("h", ElementLabel::kPageHeader, {0, 0, 100, 20}, "Running"),
                                             entity("s", ElementLabel::kSection, {0, 30, 100, 50}, "Intro"),
                                             text_at("t1", 0, 60, 100, 90, "First block"),
                                             text_at("t2", 0, 100, 100, 130, "Second block")}}));
  std::vector<std::string> header_blocks;
  for (const auto& c : blocks)
    if (c.metadata.chunk_kind == ex::ChunkKind::kHeaderBlock) header_blocks.push_back(c.page_content);
  EXPECT_EQ(header_blocks, std::vector<std::string>{"Intro\nFirst block\nSecond block"});

  EXPECT_TRUE(ex::to_chunks(lw::DocumentResult{}).empty());
  EXPECT_EQ(ex::chunks_to_ndjson({}), "");
}

TEST(Chunks, ContentUniqueAndMetadataFilled) {
  const lw::DocumentResult doc = testing_support::assemble_fixture("two_page.json");
  const auto chunks = ex::to_chunks(doc);
  std::set<std::uint64_t> hashes;
  for (const auto& c : chunks) {
    EXPECT_TRUE(hashes.insert(ex::content_hash(c.page_content)).second) << c.page_content;
    EXPECT_FALSE(c.page_content.empty());
    EXPECT_EQ(c.metadata.filename, "quarterly_report.pdf");
    EXPECT_EQ(c.metadata.document_category, "financial");
    EXPECT_EQ(c.metadata.token_count, ex::whitespace_token_count(c.page_content));
  }
  const std::string nd = ex::chunks_to_ndjson(chunks);
  EXPECT_EQ(static_cast<std::size_t>(std::count(nd.begin(), nd.end(), '\n')), chunks.size());
}

TEST(Graph, Examples) {
  const auto g = ex::to_graph(doc_of({{entity("t", ElementLabel::kTitle, {0, 0, 100, 20}, "Title"),
                                       text_at("a", 0, 30, 100, 50, "Alpha"), text_at("b", 0, 60, 100, 80, "Beta")},
                                      {}}));
  const std::vector<ex::GraphEdge> want{{"doc:root", "page:1", ex::Relation::kContains},
                                        {"page:1", "t", ex::Relation::kContains},
                                        {"t", "a", ex::Relation::kParentChild},
                                        {"a", "b", ex::Relation::kSibling},
                                        {"doc:root", "page:2", ex::Relation::kContains}};
  EXPECT_EQ(g.edges, want);
  ASSERT_EQ(g.nodes.size(), 6u);
  EXPECT_EQ(g.nodes[0].label, "doc.pdf");
  EXPECT_EQ(g.nodes[2].weight, 1);

  // Lower-weight element after a heavier one: the edge still points from the
  // lighter (higher in the hierarchy) element.
  const auto up = ex::to_graph(doc_of({{text_at("p", 0, 0, 100, 20, "Para"),
                                        entity("s", ElementLabel::kSection, {0, 30, 100, 50}, "Next")}}));
  EXPECT_EQ(up.edges.back(), (ex::GraphEdge{"s", "p", ex::Relation::kParentChild}));
}

TEST(Graph, EdgeCountProperty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    lw::DocumentResult d;
    std::size_t expected = 0;
    for (int p = 1; p <= 3; ++p) {
      auto det = testing_support::random_page(rng);
      det.page_number = p;
      for (auto& e : det.element_detections) *e.id = "p" + std::to_string(p) + *e.id;
      d.pages.push_back(testing_support::assemble_detections(det));
      const std::size_t n = d.pages.back().elements.size();
      expected += 1 + (n == 0 ? 0 : n);
    }
    EXPECT_EQ(ex::to_graph(d).edges.size(), expected);
  }
}

TEST(DpBench, Examples) {
  EXPECT_EQ(ex::dpbench_category(ElementLabel::kTableOfContent), "Paragraph");
  const auto poly = ex::to_polygon({1, 2, 3, 4});
  EXPECT_EQ(poly, (std::array<lw::Point, 4>{lw::Point{1, 2}, {3, 2}, {3, 4}, {1, 4}}));
  EXPECT_EQ(ex::from_polygon(poly), (lw::BBox{1, 2, 3, 4}));

  const lw::DocumentResult doc = testing_support::assemble_fixture("two_page.json");
  const auto els = ex::to_dpbench(doc);
  std::size_t total = 0;
  for (const auto& p : doc.pages) total += p.elements.size();
  ASSERT_EQ(els.size(), total);
  for (std::size_t i = 0; i < els.size(); ++i) {
    EXPECT_EQ(els[i].id, static_cast<int>(i));
    EXPECT_NE(els[i].coordinates, ex::to_polygon({600, 780, 900, 900}));
  }
}

TEST(DpBench, RoundTripAndArrayPoints) {
  const lw::DocumentResult doc = testing_support::assemble_fixture("two_page.json");
  const auto els = ex::to_dpbench(doc);
  const auto back = ex::parse_dpbench(lw::Json::parse(lw::dump(ex::dpbench_file_json("x", els))));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].name, "x");
  EXPECT_EQ(back[0].elements, els);

  const auto arr = ex::parse_dpbench(lw::Json::parse(
      R"({"d": {"elements": [{"coordinates": [[1,2],[3,2],[3,4],[1,4]], "category": "Paragraph", "id": 0,
                              "content": {"text": "t"}}]}})"));
  EXPECT_EQ(ex::from_polygon(arr[0].elements[0].coordinates), (lw::BBox{1, 2, 3, 4}));
  EXPECT_THROW(ex::parse_dpbench(lw::Json::parse(R"({"d": {"elements": [{"coordinates": [], "category": "x", "id": 0}]}})")),
               lw::ValidationError);
}

TEST(Exports, SkippedImagesNeverEmitted) {
  const lw::DocumentResult doc = testing_support::assemble_fixture("two_page.json");
  ASSERT_EQ(doc.pages[0].skipped_images, std::vector<std::string>{"p1-logo"});
  for (auto f : lw::pipeline::kAllFormats) {
    if (f == lw::pipeline::Format::kJson) continue;
    const std::string out = lw::pipeline::render(doc, f, false);
    for (const char* needle : {"p1-logo", "crop-logo-1", "Company logo", "Decorative logo"})
      EXPECT_EQ(out.find(needle), std::string::npos) << needle << " in " << lw::pipeline::to_string(f);
  }
}

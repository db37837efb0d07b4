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

#include <algorithm>
#include <random>

#include "layoutweave/layoutweave.hpp"
#include "support/fixtures.hpp"

namespace lw = layoutweave;
using lw::BBox;
using lw::ElementLabel;
using testing_support::entity;
using testing_support::text_at;

namespace {

template <typename Fn>
std::string error_of(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Geometry, Midpoint) {
  EXPECT_EQ(lw::midpoint({0, 0, 10, 10}), (lw::Point{5, 5}));
  EXPECT_EQ(lw::midpoint({0, 0, 0, 0}), (lw::Point{0, 0}));
  EXPECT_EQ(lw::midpoint({2, 4, 8, 10}), (lw::Point{5, 7}));
}

TEST(Geometry, ContainsMidpointIsBoundaryInclusive) {
  const BBox c{0, 0, 100, 100};
  EXPECT_TRUE(lw::contains_midpoint(c, {40, 40, 60, 60}));
  EXPECT_FALSE(lw::contains_midpoint(c, {90, 90, 120, 120}));
  EXPECT_TRUE(lw::contains_midpoint(c, {100, 100, 100, 100}));
}

TEST(Geometry, ContainsOwnMidpoint) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1000);
  for (int i = 0; i < 500; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const BBox box = BBox::make(std::min(a, b), std::min(c, d), std::max(a, b), std::max(c, d));
    EXPECT_TRUE(lw::contains_midpoint(box, box));
  }
}

TEST(Geometry, UnionBox) {
  const std::vector<BBox> one{{0, 0, 1, 1}};
  EXPECT_EQ(lw::union_bbox(one), (BBox{0, 0, 1, 1}));
  const std::vector<BBox> two{{0, 0, 1, 1}, {2, 2, 3, 3}};
  EXPECT_EQ(lw::union_bbox(two), (BBox{0, 0, 3, 3}));
  const std::vector<BBox> mixed{{5, 1, 6, 9}, {0, 3, 2, 4}};
  EXPECT_EQ(lw::union_bbox(mixed), (BBox{0, 1, 6, 9}));
  EXPECT_EQ(error_of([] { lw::union_bbox(std::vector<BBox>{}); }), "empty box set");
}

TEST(Geometry, UnionIsIdempotentAndOrderInsensitive) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 500);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BBox> boxes;
    for (int k = 0; k < 5; ++k) {
      double l = u(rng), t = u(rng);
      boxes.push_back({l, t, l + u(rng), t + u(rng)});
    }
    const BBox u1 = lw::union_bbox(boxes);
    const std::vector<BBox> self{u1, u1};
    EXPECT_EQ(lw::union_bbox(self), u1);
    std::shuffle(boxes.begin(), boxes.end(), rng);
    EXPECT_EQ(lw::union_bbox(boxes), u1);
  }
}

TEST(Geometry, InvalidBoxesRejected) {
  EXPECT_THROW(BBox::make(5, 0, 1, 1), lw::ValidationError);
  EXPECT_THROW(BBox::make(0, 5, 1, 1), lw::ValidationError);
  EXPECT_THROW(BBox::make(-1, 0, 1, 1), lw::ValidationError);
  EXPECT_THROW(BBox::make(0, 0, std::numeric_limits<double>::infinity(), 1), lw::ValidationError);
  EXPECT_THROW(BBox::make(0, 0, std::nan(""), 1), lw::ValidationError);
  EXPECT_NO_THROW(BBox::make(0, 0, 0, 0));
}

TEST(Geometry, Iou) {
  EXPECT_DOUBLE_EQ(lw::iou({0, 0, 10, 10}, {0, 0, 10, 10}), 1.0);
  EXPECT_DOUBLE_EQ(lw::iou({0, 0, 10, 10}, {20, 20, 30, 30}), 0.0);
  EXPECT_DOUBLE_EQ(lw::iou({0, 0, 10, 10}, {5, 0, 15, 10}), 50.0 / 150.0);
  EXPECT_DOUBLE_EQ(lw::iou({0, 0, 0, 0}, {0, 0, 0, 0}), 0.0);
}

TEST(Schema, PaperWeights) {
  const lw::SchemaWeights s;
  EXPECT_EQ(lw::weight_of(ElementLabel::kTitle, s), 1);
  EXPECT_EQ(lw::weight_of(ElementLabel::kSection, s), 2);
  EXPECT_EQ(lw::weight_of(ElementLabel::kTable, s), 3);
  EXPECT_EQ(lw::weight_of(ElementLabel::kText, s), 6);
  EXPECT_EQ(lw::weight_of(ElementLabel::kPageFooter, s), 7);
}

TEST(Schema, ConfiguredDefaultsForUnnumberedLabels) {
  const lw::SchemaWeights s;
  EXPECT_EQ(s.weight_of(ElementLabel::kHeader), 2);
  EXPECT_EQ(s.weight_of(ElementLabel::kPageHeader), 5);
  EXPECT_EQ(s.weight_of(ElementLabel::kListItem), 6);
  EXPECT_EQ(s.weight_of(ElementLabel::kTableOfContent), 4);
  EXPECT_EQ(s.weight_of(ElementLabel::kImage), 3);
  EXPECT_EQ(s.weight_of(ElementLabel::kTableCaption), 4);
  EXPECT_EQ(s.weight_of(ElementLabel::kImageCaption), 4);
}

TEST(Schema, OverridesMustBePositive) {
  lw::SchemaWeights s;
  s.set(ElementLabel::kImage, 9);
  EXPECT_EQ(s.weight_of(ElementLabel::kImage), 9);
  EXPECT_THROW(s.set(ElementLabel::kImage, 0), lw::ValidationError);
}

TEST(Labels, RoundTripAndRejectUnknown) {
  for (int i = 0; i < 12; ++i) {
    const auto l = static_cast<ElementLabel>(i);
    EXPECT_EQ(lw::parse_element_label(lw::to_string(l)), l);
  }
  for (int i = 0; i < 6; ++i) {
    const auto l = static_cast<lw::LayoutLabel>(i);
    EXPECT_EQ(lw::parse_layout_label(lw::to_string(l)), l);
  }
  EXPECT_EQ(error_of([] { lw::parse_element_label("chart"); }), "unknown element label 'chart'");
  EXPECT_THROW(lw::parse_layout_label("text"), lw::ValidationError);
}

TEST(Entity, DerivedFields) {
  const lw::Entity e = entity("a", ElementLabel::kText, {0, 0, 10, 10});
  EXPECT_EQ(e.mid_point, (lw::Point{5, 5}));
  EXPECT_EQ(e.x_center, 5);
  EXPECT_EQ(e.y_center, 5);
  EXPECT_EQ(e.weight, 6);
  const lw::Entity h = e.relabeled(ElementLabel::kPageHeader, lw::SchemaWeights{});
  EXPECT_EQ(h.weight, 5);
  EXPECT_EQ(h.pixel_coordinates, e.pixel_coordinates);
}

TEST(Entity, RejectsBadConfidenceAndRows) {
  EXPECT_THROW(entity("a", ElementLabel::kText, {0, 0, 1, 1}, "abc", 1.5), lw::ValidationError);
  lw::EntityValue v;
  v.data = std::vector<lw::DataRow>{{{"A", "1"}, {"B", "2"}}, {{"B", "2"}, {"A", "1"}}};
  EXPECT_THROW(v.validate(), lw::ValidationError);
}

namespace {

lw::DocumentResult sample_document() {
  lw::PageResult p;
  p.page_number = 1;
  lw::Entity t = entity("t", ElementLabel::kTable, {10, 10, 100, 60}, "A B 1 2");
  t.value.title = "Tbl";
  t.value.summary = "Sum";
  t.value.data = std::vector<lw::DataRow>{{{"A", "1"}, {"B", "2"}}, {{"A", "3"}, {"B", ""}}};
  t.image_payload = "crop";
  p.elements = {text_at("x", 10, 0, 100, 5, "héllo \"quoted\""), t, text_at("y", 10, 70, 100, 80)};
  p.groups = {lw::Group::make(lw::GroupType::kGroup, {&p.elements[1], &p.elements[2]})};
  p.non_groups = {"x"};
  p.skipped_images = {"img"};
  lw::DocumentResult d;
  d.filename = "f.pdf";
  d.total_pages = 2;
  d.total_processed_pages = 1;
  d.total_failed_pages = 1;
  d.total_llm_calls = 3;
  d.metadata = {{"k", "v"}};
  d.document_category = "financial";
  d.pages = {p};
  return d;
}

}  // namespace

TEST(Model, ValidationCatchesBrokenInvariants) {
  lw::DocumentResult d = sample_document();
  EXPECT_NO_THROW(d.validate());

  lw::DocumentResult counters = d;
  counters.total_failed_pages = 0;
  EXPECT_THROW(counters.validate(), lw::ValidationError);

  lw::DocumentResult dup = d;
  dup.pages[0].non_groups.push_back("t");
  EXPECT_THROW(dup.validate(), lw::ValidationError);

  lw::DocumentResult missing = d;
  missing.pages[0].non_groups.clear();
  EXPECT_THROW(missing.validate(), lw::ValidationError);

  lw::DocumentResult skipped = d;
  skipped.pages[0].skipped_images = {"x"};
  EXPECT_THROW(skipped.validate(), lw::ValidationError);

  lw::DocumentResult box = d;
  box.pages[0].groups[0].pixel_coordinates.right += 1;
  EXPECT_THROW(box.validate(), lw::ValidationError);

  lw::DocumentResult order = d;
  lw::PageResult second = d.pages[0];
  order.pages.insert(order.pages.begin(), second);
  order.total_pages = 3;
  order.total_processed_pages = 2;
  EXPECT_THROW(order.validate(), lw::ValidationError);
}

TEST(Json, DocumentRoundTrip) {
  const lw::DocumentResult d = sample_document();
  const std::string text = lw::dump(lw::to_json(d));
  const lw::DocumentResult back = lw::document_from_json(lw::parse_json_text(text, "mem"));
  EXPECT_EQ(back, d);
  EXPECT_EQ(lw::dump(lw::to_json(back)), text);
}

TEST(Json, ElementsKeepReadingOrderAsKeyOrder) {
  const lw::Json j = lw::to_json(sample_document());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["pages"][0]["elements"].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"x", "t", "y"}));
  EXPECT_EQ(j["pages"][0]["elements"]["t"]["value"]["data"][1]["B"], "");
}

TEST(Json, DerivedFieldsAreRecomputedAndChecked) {
  lw::Json j = lw::to_json(sample_document());
  j["pages"][0]["elements"]["x"]["x_center"] = 1.0;
  EXPECT_EQ(error_of([&] { lw::document_from_json(j); }),
            "$.pages[0].elements.x.x_center: does not match pixel_coordinates");
}

TEST(Json, ErrorsCarryFieldPathAndLine) {
  lw::Json j = lw::to_json(sample_document());
  j["pages"][0]["elements"]["t"].erase("confidence");
  EXPECT_EQ(error_of([&] { lw::document_from_json(j); }), "$.pages[0].elements.t.confidence: missing field");
  const std::string msg = error_of([] { lw::parse_json_text("{\n\"a\": 1,\n,}", "doc.json"); });
  EXPECT_EQ(msg.rfind("doc.json:3:", 0), 0u) << msg;
}

TEST(Ids, SeededGeneratorsAreReproducibleUuid4) {
  lw::IdGenerator a(42), b(42), c;
  const std::string x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_EQ(x.size(), 36u);
  EXPECT_EQ(x[14], '4');
  EXPECT_NE(a.next(), x);
  EXPECT_EQ(c.next().size(), 36u);
}

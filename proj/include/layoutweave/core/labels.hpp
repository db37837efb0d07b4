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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "layoutweave/core/error.hpp"

namespace layoutweave {

// Semantic element classes produced by the element detector.
enum class ElementLabel {
  kTitle,
  kHeader,
  kSection,
  kPageHeader,
  kPageFooter,
  kText,
  kListItem,
  kTableOfContent,
  kTable,
  kImage,
  kTableCaption,
  kImageCaption,
};

// Structural regions produced by the layout detector.
enum class LayoutLabel {
  kLayoutBox,
  kColumnGroup,
  kColumnText,
  kGroup,
  kMultiColumn,
  kRowGroup,
};

inline constexpr std::array<std::pair<ElementLabel, std::string_view>, 12>
    kElementLabelNames{{
        {ElementLabel::kTitle, "title"},
        {ElementLabel::kHeader, "header"},
        {ElementLabel::kSection, "section"},
        {ElementLabel::kPageHeader, "page_header"},
        {ElementLabel::kPageFooter, "page_footer"},
        {ElementLabel::kText, "text"},
        {ElementLabel::kListItem, "list_item"},
        {ElementLabel::kTableOfContent, "table_of_content"},
        {ElementLabel::kTable, "table"},
        {ElementLabel::kImage, "image"},
        {ElementLabel::kTableCaption, "table_caption"},
        {ElementLabel::kImageCaption, "image_caption"},
    }};

inline constexpr std::array<std::pair<LayoutLabel, std::string_view>, 6> kLayoutLabelNames{{
    {LayoutLabel::kLayoutBox, "layout_box"},
    {LayoutLabel::kColumnGroup, "column_group"},
    {LayoutLabel::kColumnText, "column_text"},
    {LayoutLabel::kGroup, "group"},
    {LayoutLabel::kMultiColumn, "multi_column"},
    {LayoutLabel::kRowGroup, "row_group"},
}};

inline std::string_view to_string(ElementLabel label) {
  for (const auto& [l, name] : kElementLabelNames)
    if (l == label) return name;
  return "unknown";
}

inline std::string_view to_string(LayoutLabel label) {
  for (const auto& [l, name] : kLayoutLabelNames)
    if (l == label) return name;
  return "unknown";
}

inline std::optional<ElementLabel> element_label_from(std::string_view name) {
  for (const auto& [l, n] : kElementLabelNames)
    if (n == name) return l;
  return std::nullopt;
}

inline std::optional<LayoutLabel> layout_label_from(std::string_view name) {
  for (const auto& [l, n] : kLayoutLabelNames)
    if (n == name) return l;
  return std::nullopt;
}

inline ElementLabel parse_element_label(std::string_view name) {
  if (auto l = element_label_from(name)) return *l;
  throw ValidationError("unknown element label '" + std::string(name) + "'");
}

inline LayoutLabel parse_layout_label(std::string_view name) {
  if (auto l = layout_label_from(name)) return *l;
  throw ValidationError("unknown layout label '" + std::string(name) + "'");
}

// Headings get the title normalizer; everything else the body normalizer.
inline bool is_heading(ElementLabel label) {
  return label == ElementLabel::kTitle || label == ElementLabel::kSection ||
         label == ElementLabel::kHeader;
}

inline bool is_visual(ElementLabel label) {
  return label == ElementLabel::kTable || label == ElementLabel::kImage;
}

inline bool is_page_furniture(ElementLabel label) {
  return label == ElementLabel::kPageHeader || label == ElementLabel::kPageFooter;
}

}  // namespace layoutweave

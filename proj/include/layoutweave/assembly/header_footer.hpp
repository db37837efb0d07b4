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
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "layoutweave/assembly/ordering.hpp"
#include "layoutweave/assembly/params.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/core/schema.hpp"
#include "layoutweave/metrics/edit_distance.hpp"

namespace layoutweave::assembly {

// Indel similarity as a rounded percentage; two empty strings score 100.
inline int fuzzy_ratio(std::string_view a, std::string_view b) {
  const std::u32string ua = utf8::decode(a);
  const std::u32string ub = utf8::decode(b);
  const std::size_t total = ua.size() + ub.size();
  if (total == 0) return 100;
  const double d = static_cast<double>(metrics::indel_distance<char32_t>(ua, ub));
  return static_cast<int>(std::lround(100.0 * (1.0 - d / static_cast<double>(total))));
}

namespace detail {

// Entities that may be recognised as repeated page furniture.
inline bool is_text_like(ElementLabel label) {
  return !is_visual(label) && !is_page_furniture(label);
}

struct Candidate {
  int page_number;
  std::string text;
};

inline int best_ratio(const std::string& text, int page_number, const std::vector<Candidate>& pool) {
  int best = -1;
  for (const Candidate& c : pool)
    if (c.page_number != page_number) best = std::max(best, fuzzy_ratio(text, c.text));
  return best;
}

inline double page_height(const PageResult& page, const HeaderFooterParams& params) {
  if (params.page_height) return *params.page_height;
  double h = 0.0;
  for (const Entity& e : page.elements) h = std::max(h, e.pixel_coordinates.bottom);
  return h;
}

// Rebuilds groups and order after relabelling: relabelled furniture leaves
// its group, emptied groups disappear, and the page order is re-derived.
inline PageResult reorder(const PageResult& page) {
  std::vector<Group> groups;
  for (const Group& g : page.groups) {
    std::vector<const Entity*> members;
    for (const std::string& id : g.ids) {
      const Entity* e = page.find(id);
      if (e != nullptr && !is_page_furniture(e->type)) members.push_back(e);
    }
    if (members.empty()) continue;
    if (members.size() == g.ids.size()) {
      groups.push_back(g);
    } else {
      groups.push_back(Group::make(g.type, members));
    }
  }
  PageOrder order = order_page_elements(groups, page.elements);
  PageResult out = page;
  out.elements = std::move(order.elements);
  out.groups = std::move(order.groups);
  out.non_groups = std::move(order.non_groups);
  return out;
}

}  // namespace detail

// Cross-page header/footer repair.
//
// 1. Text of every page_header / page_footer is a candidate. Any other
//    text-like entity whose fuzzy ratio against a candidate from a different
//    page exceeds the threshold takes that candidate's label (header wins a
//    tie).
// 2. A page_header below header_top_limit sitting in the bottom band of the
//    page becomes a page_footer; a page_footer above the limit sitting in the
//    top band becomes a page_header.
//
// Both steps repeat until nothing changes, so applying the function twice
// is the same as applying it once. Pages whose labels changed get their
// reading order re-derived; other pages are returned untouched.
inline std::vector<PageResult> correct_headers_footers(std::vector<PageResult> pages,
                                                       const HeaderFooterParams& params,
                                                       const SchemaWeights& schema = {}) {
  params.validate();
  std::set<std::size_t> touched;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<detail::Candidate> headers;
    std::vector<detail::Candidate> footers;
    for (const PageResult& p : pages)
      for (const Entity& e : p.elements) {
        if (e.value.text.empty()) continue;
        if (e.type == ElementLabel::kPageHeader) headers.push_back({p.page_number, e.value.text});
        if (e.type == ElementLabel::kPageFooter) footers.push_back({p.page_number, e.value.text});
      }

    for (std::size_t pi = 0; pi < pages.size(); ++pi) {
      PageResult& p = pages[pi];
      const double height = detail::page_height(p, params);
      for (Entity& e : p.elements) {
        std::optional<ElementLabel> relabel;
        if (detail::is_text_like(e.type) && !e.value.text.empty()) {
          const int h = detail::best_ratio(e.value.text, p.page_number, headers);
          const int f = detail::best_ratio(e.value.text, p.page_number, footers);
          if (h > params.fuzzy_threshold && h >= f) {
            relabel = ElementLabel::kPageHeader;
          } else if (f > params.fuzzy_threshold) {
            relabel = ElementLabel::kPageFooter;
          }
        } else if (e.type == ElementLabel::kPageHeader) {
          if (e.pixel_coordinates.top > params.header_top_limit &&
              e.pixel_coordinates.top >= (1.0 - params.bottom_fraction) * height)
            relabel = ElementLabel::kPageFooter;
        } else if (e.type == ElementLabel::kPageFooter) {
          if (e.pixel_coordinates.top <= params.header_top_limit &&
              e.pixel_coordinates.bottom <= params.bottom_fraction * height)
            relabel = ElementLabel::kPageHeader;
        }
        if (relabel) {
          e = e.relabeled(*relabel, schema);
          touched.insert(pi);
          changed = true;
        }
      }
    }
  }
  for (std::size_t pi : touched) pages[pi] = detail::reorder(pages[pi]);
  return pages;
}

}  // namespace layoutweave::assembly

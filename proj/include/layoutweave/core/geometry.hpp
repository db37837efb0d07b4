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
#include <span>
#include <sstream>

#include "layoutweave/core/error.hpp"

namespace layoutweave {

// All coordinates are in page pixel space: origin at the top-left corner,
// y grows downward.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Axis-aligned box. Construct through BBox::make() to get validation;
// aggregate initialization is left open for constexpr test tables.
struct BBox {
  double left = 0.0;
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;

  static BBox make(double left, double top, double right, double bottom) {
    BBox box{left, top, right, bottom};
    box.validate();
    return box;
  }

  void validate() const {
    auto bad = [](double v) { return !std::isfinite(v) || v < 0.0; };
    if (bad(left) || bad(top) || bad(right) || bad(bottom) || left > right ||
        top > bottom) {
      std::ostringstream msg;
      msg << "invalid bbox (" << left << ", " << top << ", " << right << ", "
          << bottom << "): need finite, non-negative, left <= right, top <= bottom";
      throw ValidationError(msg.str());
    }
  }

  double width() const { return right - left; }
  double height() const { return bottom - top; }
  double area() const { return width() * height(); }

  friend bool operator==(const BBox&, const BBox&) = default;
};

inline Point midpoint(const BBox& box) {
  return {(box.left + box.right) / 2.0, (box.top + box.bottom) / 2.0};
}

// Boundary inclusive.
inline bool contains_point(const BBox& container, const Point& p) {
  return container.left <= p.x && p.x <= container.right && container.top <= p.y &&
         p.y <= container.bottom;
}

inline bool contains_midpoint(const BBox& container, const BBox& element) {
  return contains_point(container, midpoint(element));
}

inline BBox union_bbox(std::span<const BBox> boxes) {
  if (boxes.empty()) throw Error("empty box set");
  BBox out = boxes.front();
  for (const BBox& b : boxes.subspan(1)) {
    out.left = std::min(out.left, b.left);
    out.top = std::min(out.top, b.top);
    out.right = std::max(out.right, b.right);
    out.bottom = std::max(out.bottom, b.bottom);
  }
  return out;
}

inline double intersection_area(const BBox& a, const BBox& b) {
  const double w = std::min(a.right, b.right) - std::max(a.left, b.left);
  const double h = std::min(a.bottom, b.bottom) - std::max(a.top, b.top);
  if (w <= 0.0 || h <= 0.0) return 0.0;
  return w * h;
}

// Zero when the union has no area.
inline double iou(const BBox& a, const BBox& b) {
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

}  // namespace layoutweave

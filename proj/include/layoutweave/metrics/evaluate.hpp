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

// Reference-vs-prediction scoring over DP-Bench-format files.
//
// Layout mode scores each reference document by NID between the serialized
// reference and prediction (a document absent from the prediction counts as
// empty). Table mode pairs each reference table with a predicted table on the
// same page by greatest bounding-box IoU; an unpaired reference table scores
// 0 and a reference table without html is skipped.

#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "layoutweave/core/error.hpp"
#include "layoutweave/core/geometry.hpp"
#include "layoutweave/core/json_io.hpp"
#include "layoutweave/exporters/dpbench.hpp"
#include "layoutweave/metrics/edit_distance.hpp"
#include "layoutweave/metrics/teds.hpp"
#include "layoutweave/util/log.hpp"
#include "layoutweave/util/parallel.hpp"

namespace layoutweave::metrics {

enum class EvalMode { kLayout, kTable };

inline std::string_view to_string(EvalMode m) { return m == EvalMode::kLayout ? "layout" : "table"; }

inline EvalMode parse_eval_mode(std::string_view s) {
  if (s == "layout") return EvalMode::kLayout;
  if (s == "table") return EvalMode::kTable;
  throw Error("unknown eval mode '" + std::string(s) + "'");
}

struct SampleScore {
  std::string document;
  std::optional<int> reference_id;  // table mode
  std::optional<int> prediction_id;  // table mode, when paired
  std::optional<double> nid;
  std::optional<double> teds;
  std::optional<double> teds_s;

  friend bool operator==(const SampleScore&, const SampleScore&) = default;
};

struct EvalReport {
  EvalMode mode = EvalMode::kLayout;
  std::vector<SampleScore> samples;  // evaluated samples only
  std::optional<double> mean_nid;
  std::optional<double> mean_teds;
  std::optional<double> mean_teds_s;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
};

inline bool excluded_from_nid(std::string_view category) {
  return category == "Table" || category == "Figure" || category == "Chart";
}

inline std::string serialize_for_nid(const std::vector<exporters::DpBenchElement>& elements) {
  std::string out;
  bool first = true;
  for (const auto& el : elements) {
    if (excluded_from_nid(el.category)) continue;
    if (!first) out += '\n';
    out += el.content.text;
    first = false;
  }
  return out;
}

namespace detail {

inline std::optional<double> mean_of(const std::vector<SampleScore>& s,
                                     std::optional<double> SampleScore::*field) {
  if (s.empty()) return std::nullopt;
  double sum = 0.0;
  for (const SampleScore& x : s) sum += (x.*field).value_or(0.0);
  return sum / static_cast<double>(s.size());
}

inline const exporters::DpBenchDocument* find_doc(const std::vector<exporters::DpBenchDocument>& docs,
                                                  std::string_view name) {
  for (const auto& d : docs)
    if (d.name == name) return &d;
  return nullptr;
}

struct TablePair {
  const exporters::DpBenchElement* reference = nullptr;
  const exporters::DpBenchElement* prediction = nullptr;
  std::string document;
};

// Greedy pairing per page: candidate pairs with IoU > 0 taken in order of
// decreasing IoU, ties by reference then prediction position.
inline std::vector<TablePair> pair_tables(const exporters::DpBenchDocument& ref,
                                          const exporters::DpBenchDocument* pred) {
  std::vector<const exporters::DpBenchElement*> rt;
  std::vector<const exporters::DpBenchElement*> pt;
  for (const auto& el : ref.elements)
    if (el.category == "Table") rt.push_back(&el);
  if (pred != nullptr)
    for (const auto& el : pred->elements)
      if (el.category == "Table") pt.push_back(&el);

  std::vector<std::tuple<double, std::size_t, std::size_t>> cand;
  for (std::size_t r = 0; r < rt.size(); ++r) {
    for (std::size_t p = 0; p < pt.size(); ++p) {
      if (rt[r]->page != pt[p]->page) continue;
      const double v = iou(exporters::polygon_bounds(rt[r]->coordinates),
                           exporters::polygon_bounds(pt[p]->coordinates));
      if (v > 0.0) cand.emplace_back(v, r, p);
    }
  }
  std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
    return std::tie(std::get<1>(x), std::get<2>(x)) < std::tie(std::get<1>(y), std::get<2>(y));
  });
  std::vector<TablePair> pairs(rt.size());
  std::vector<bool> used(pt.size(), false);
  for (std::size_t r = 0; r < rt.size(); ++r) pairs[r] = {rt[r], nullptr, ref.name};
  for (const auto& [v, r, p] : cand) {
    if (pairs[r].prediction != nullptr || used[p]) continue;
    pairs[r].prediction = pt[p];
    used[p] = true;
  }
  return pairs;
}

}  // namespace detail

inline EvalReport evaluate(const std::vector<exporters::DpBenchDocument>& reference,
                           const std::vector<exporters::DpBenchDocument>& prediction, EvalMode mode,
                           std::size_t workers = 1) {
  EvalReport report;
  report.mode = mode;
  std::vector<const exporters::DpBenchDocument*> refs;
  for (const auto& d : reference) refs.push_back(&d);
  std::stable_sort(refs.begin(), refs.end(), [](auto* a, auto* b) { return a->name < b->name; });

  if (mode == EvalMode::kLayout) {
    report.samples = parallel_map<SampleScore>(refs.size(), workers, [&](std::size_t i) {
      const auto* pred = detail::find_doc(prediction, refs[i]->name);
      const std::string r = serialize_for_nid(refs[i]->elements);
      const std::string p = pred != nullptr ? serialize_for_nid(pred->elements) : std::string();
      SampleScore s;
      s.document = refs[i]->name;
      s.nid = nid(r, p);
      return s;
    });
    report.evaluated = report.samples.size();
    report.mean_nid = detail::mean_of(report.samples, &SampleScore::nid);
    return report;
  }

  std::vector<detail::TablePair> pairs;
  for (const auto* ref : refs) {
    for (auto& pair : detail::pair_tables(*ref, detail::find_doc(prediction, ref->name))) {
      if (!pair.reference->content.html || pair.reference->content.html->empty()) {
        ++report.skipped;
        continue;
      }
      pairs.push_back(std::move(pair));
    }
  }
  std::vector<std::optional<SampleScore>> scored =
      parallel_map<std::optional<SampleScore>>(pairs.size(), workers, [&](std::size_t i) {
        const detail::TablePair& pair = pairs[i];
        std::optional<SampleScore> out;
        TableNode ref_tree;
        try {
          ref_tree = parse_table_html(*pair.reference->content.html);
        } catch (const ParseError& e) {
          log::warn(pair.document + " table " + std::to_string(pair.reference->id) +
                    ": unparseable reference html, skipped");
          return out;
        }
        SampleScore s;
        s.document = pair.document;
        s.reference_id = pair.reference->id;
        s.teds = 0.0;
        s.teds_s = 0.0;
        if (pair.prediction != nullptr) {
          s.prediction_id = pair.prediction->id;
          if (pair.prediction->content.html) {
            try {
              const TableNode pred_tree = parse_table_html(*pair.prediction->content.html);
              s.teds = teds(ref_tree, pred_tree);
              s.teds_s = teds_s(ref_tree, pred_tree);
            } catch (const ParseError&) {
              log::warn(pair.document + " table " + std::to_string(pair.prediction->id) +
                        ": unparseable predicted html, scored 0");
            }
          }
        }
        out = std::move(s);
        return out;
      });
  for (auto& s : scored) {
    if (s) {
      report.samples.push_back(std::move(*s));
    } else {
      ++report.skipped;
    }
  }
  report.evaluated = report.samples.size();
  report.mean_teds = detail::mean_of(report.samples, &SampleScore::teds);
  report.mean_teds_s = detail::mean_of(report.samples, &SampleScore::teds_s);
  return report;
}

inline EvalReport evaluate(const std::string& reference_path, const std::string& prediction_path,
                           EvalMode mode, std::size_t workers = 1) {
  const auto reference = exporters::load_dpbench(reference_path);
  return evaluate(reference, exporters::load_dpbench(prediction_path), mode, workers);
}

inline Json to_json(const EvalReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  auto opt_int = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  Json samples = Json::array();
  for (const SampleScore& s : r.samples) {
    Json j{{"document", s.document}};
    if (r.mode == EvalMode::kLayout) {
      j["nid"] = opt(s.nid);
    } else {
      j["reference_id"] = opt_int(s.reference_id);
      j["prediction_id"] = opt_int(s.prediction_id);
      j["teds"] = opt(s.teds);
      j["teds_s"] = opt(s.teds_s);
    }
    samples.push_back(std::move(j));
  }
  return Json{{"mode", to_string(r.mode)},
              {"evaluated", r.evaluated},
              {"skipped", r.skipped},
              {"mean_nid", opt(r.mean_nid)},
              {"mean_teds", opt(r.mean_teds)},
              {"mean_teds_s", opt(r.mean_teds_s)},
              {"samples", std::move(samples)}};
}

inline std::string format_score(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

// Per-sample table followed by the mean line, e.g. "NID 1.00".
inline std::string summary_text(const EvalReport& r) {
  std::string out;
  char line[512];
  if (r.mode == EvalMode::kLayout) {
    std::snprintf(line, sizeof line, "%-40s %8s\n", "document", "NID");
    out += line;
    for (const SampleScore& s : r.samples) {
      std::snprintf(line, sizeof line, "%-40s %8s\n", s.document.c_str(), format_score(s.nid).c_str());
      out += line;
    }
    out += "NID " + format_score(r.mean_nid) + "\n";
  } else {
    std::snprintf(line, sizeof line, "%-32s %6s %8s %8s\n", "document", "table", "TEDS", "TEDS-S");
    out += line;
    for (const SampleScore& s : r.samples) {
      std::snprintf(line, sizeof line, "%-32s %6d %8s %8s\n", s.document.c_str(), s.reference_id.value_or(-1),
                    format_score(s.teds).c_str(), format_score(s.teds_s).c_str());
      out += line;
    }
    out += "TEDS " + format_score(r.mean_teds) + " TEDS-S " + format_score(r.mean_teds_s) + "\n";
  }
  out += "evaluated " + std::to_string(r.evaluated) + ", skipped " + std::to_string(r.skipped) + "\n";
  return out;
}

}  // namespace layoutweave::metrics

// Copyright 2026 The Authors.
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

#ifndef RESMAT_REPORT_HPP
#define RESMAT_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "resmat/graph.hpp"
#include "resmat/greedy.hpp"
#include "resmat/matroid.hpp"
#include "resmat/tree.hpp"
#include "resmat/vertex_set.hpp"

namespace resmat {

using Json = nlohmann::ordered_json;

inline Json SetJson(const std::vector<std::string>& labels, VertexSet s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(labels.at(e));
  return out;
}

inline Json FamilyJson(const std::vector<std::string>& labels, const SetFamily& f) {
  Json out = Json::array();
  for (VertexSet s : f) out.push_back(SetJson(labels, s));
  return out;
}

inline Json GraphJson(const Graph& g) {
  const auto cls = Classify(g);
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.label(u), g.label(v)}));
  return Json{{"n", g.n()},
              {"m", g.edge_count()},
              {"labels", g.labels()},
              {"edges", edges},
              {"connected", cls.connected},
              {"tree", cls.tree},
              {"path", cls.path}};
}

inline Json VerdictJson(const IndependenceSystem& sys, const MatroidVerdict& v) {
  Json out{{"is_matroid", v.is_matroid}, {"rank", v.rank}};
  if (v.witness) {
    out["witness"] = Json{{"smaller", SetJson(sys.labels(), v.witness->smaller)},
                          {"larger", SetJson(sys.labels(), v.witness->larger)}};
  }
  out["bases"] = FamilyJson(sys.labels(), v.bases);
  return out;
}

inline Json GreedyJson(const IndependenceSystem& sys, const WeightAssignment& w,
                       const GreedyResult& r) {
  Json trace = Json::array();
  for (const auto& step : r.trace) {
    trace.push_back(Json{{"element", sys.label(step.element)},
                         {"weight", FormatWeight(w[step.element])},
                         {"accepted", step.accepted}});
  }
  return Json{{"selected", SetJson(sys.labels(), r.selected)},
              {"total_weight", FormatWeight(r.total)},
              {"certified", r.certified},
              {"trace", trace}};
}

inline Json TreeJson(const TreeDecomposition& td) {
  const auto& labels = td.graph().labels();
  const auto verdict = AnalyzeTree(td);
  Json table = Json::array();
  for (const auto& row : ClassificationTable(td)) {
    table.push_back(Json{{"vertex", row.vertex},
                         {"classification", RoleName(row.role)},
                         {"branch_paths", row.branch_paths}});
  }
  Json majors = Json::array();
  for (const auto& m : td.exterior_majors()) {
    Json paths = Json::array();
    for (VertexSet p : m.branch_paths) paths.push_back(SetJson(labels, p));
    majors.push_back(Json{{"vertex", labels[m.vertex]}, {"branch_paths", paths}});
  }
  return Json{{"classification", table},
              {"exterior_majors", majors},
              {"rank", verdict.rank},
              {"loops", SetJson(labels, verdict.loops)},
              {"hyperplanes", FamilyJson(labels, verdict.hyperplanes)},
              {"dual_circuits", FamilyJson(labels, verdict.dual_circuits)}};
}

// ---------------------------------------------------------------------------
// Text rendering. Every leaf becomes one "path = value" line, where value is
// compact JSON; arrays whose elements are all scalars or all scalar arrays
// are kept whole. UnflattenText inverts RenderText exactly.

namespace detail {

inline bool IsScalarArray(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

inline void Flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) {
      Flatten(value, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  if (j.is_array() && !j.empty() && !IsScalarArray(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      Flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out << path << " = " << j.dump() << '\n';
}

}  // namespace detail

inline std::string RenderText(const Json& report) {
  std::ostringstream out;
  detail::Flatten(report, "", out);
  return out.str();
}

inline Json UnflattenText(std::string_view text) {
  Json root = Json::object();
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) Fail(ErrorKind::kParse, "report line lacks ' = ': " + line);
    const std::string path = line.substr(0, eq);
    Json value = Json::parse(line.substr(eq + 3));
    Json* node = &root;
    std::size_t pos = 0;
    while (pos < path.size()) {
      if (path[pos] == '.') ++pos;
      if (path[pos] == '[') {
        const auto close = path.find(']', pos);
        const std::size_t index = std::stoul(path.substr(pos + 1, close - pos - 1));
        if (node->is_null()) *node = Json::array();
        while (node->size() <= index) node->push_back(nullptr);
        node = &(*node)[index];
        pos = close + 1;
      } else {
        const auto end = path.find_first_of(".[", pos);
        const std::string key = path.substr(pos, end == std::string::npos ? end : end - pos);
        if (node->is_null()) *node = Json::object();
        node = &(*node)[key];
        pos = end == std::string::npos ? path.size() : end;
      }
    }
    *node = std::move(value);
  }
  return root;
}

}  // namespace resmat

#endif  // RESMAT_REPORT_HPP

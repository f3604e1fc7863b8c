// Copyright 2026 The deskrisk Authors
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

#include "deskrisk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace deskrisk {
namespace {

void check_format(const Json& doc) {
  if (!doc.is_object()) throw FormatError("document is not a JSON object");
  if (doc.contains("format")) {
    const Json& f = doc.at("format");
    if (!f.is_number_integer() || f.get<int>() != kFormatVersion) {
      throw FormatError("unsupported format version " + f.dump());
    }
  }
}

template <typename T>
T get(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

template <typename T>
std::optional<T> get_optional(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return get<T>(doc, key);
}

Json nullable(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json nullable(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

std::vector<int> zero_based(std::vector<int> v) {
  for (int& x : v) --x;
  return v;
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json papers = Json::array();
  for (int i = 0; i < instance.num_papers(); ++i) {
    Json row = Json::array();
    for (int j : instance.authors_of(i)) row.push_back(j + 1);
    papers.push_back(std::move(row));
  }
  Json doc;
  doc["format"] = kFormatVersion;
  doc["n"] = instance.num_papers();
  doc["m"] = instance.num_authors();
  doc["papers"] = std::move(papers);
  doc["p"] = instance.p();
  doc["b"] = nullable(instance.limit());
  doc["lambda"] = nullable(instance.lambda());
  return doc;
}

Instance instance_from_json(const Json& doc) {
  check_format(doc);
  const int n = get<int>(doc, "n");
  const int m = get<int>(doc, "m");
  auto papers = get<std::vector<std::vector<int>>>(doc, "papers");
  if (static_cast<int>(papers.size()) != n) {
    throw FormatError("\"papers\" has " + std::to_string(papers.size()) +
                      " rows, expected n=" + std::to_string(n));
  }
  for (auto& row : papers) row = zero_based(std::move(row));
  auto p = get<std::vector<double>>(doc, "p");
  return Instance(n, m, papers, std::move(p), get_optional<int>(doc, "b"),
                  get_optional<double>(doc, "lambda"));
}

Json assignment_to_json(const Assignment& assignment) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["nominee"] = one_based(assignment.nominee);
  return doc;
}

Assignment assignment_from_json(const Json& doc) {
  check_format(doc);
  return Assignment{zero_based(get<std::vector<int>>(doc, "nominee"))};
}

Json report_to_json(const Instance& instance, const SolveReport& report) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["status"] = to_string(report.status);
  doc["variant"] = report.variant;
  doc["solver"] = report.solver;
  const bool solved =
      report.status == Status::kOptimal || report.status == Status::kFeasible;
  if (solved || report.assignment) {
    doc["objective"] = report.objective;
    doc["expected_rejections"] = report.expected_rejections;
    doc["penalty"] = report.penalty;
  }
  if (report.assignment) {
    doc["loads"] = report.loads;
    doc["nominee"] = one_based(report.assignment->nominee);
  }
  doc["b"] = nullable(report.limit);
  doc["lambda"] = nullable(report.lambda);
  doc["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  if (report.lp_bound) doc["lp_bound"] = *report.lp_bound;
  if (report.rounded_objective) doc["rounded_objective"] = *report.rounded_objective;
  if (report.gap) doc["gap"] = *report.gap;
  if (report.integral) doc["integral"] = *report.integral;
  if (report.err) doc["err"] = *report.err;
  if (report.fractional) {
    Json x = Json::array();
    for (int k = 0; k < instance.num_pairs(); ++k) {
      x.push_back(Json::array({instance.pair_paper(k) + 1,
                               instance.pair_author(k) + 1,
                               report.fractional->x[k]}));
    }
    Json frac;
    frac["x"] = std::move(x);
    frac["y"] = report.fractional->y ? Json(*report.fractional->y) : Json(nullptr);
    doc["fractional"] = std::move(frac);
  }
  if (!report.message.empty()) doc["message"] = report.message;
  return doc;
}

SolveReport report_from_json(const Json& doc) {
  check_format(doc);
  SolveReport r;
  const auto status = parse_status(get<std::string>(doc, "status"));
  if (!status) throw FormatError("unknown status " + doc.at("status").dump());
  r.status = *status;
  r.variant = get<std::string>(doc, "variant");
  r.solver = get<std::string>(doc, "solver");
  if (doc.contains("objective")) {
    r.objective = get<double>(doc, "objective");
    r.expected_rejections = get<double>(doc, "expected_rejections");
    r.penalty = get<double>(doc, "penalty");
  }
  if (doc.contains("nominee")) {
    r.assignment = Assignment{zero_based(get<std::vector<int>>(doc, "nominee"))};
    r.loads = get<std::vector<int>>(doc, "loads");
  }
  r.limit = get_optional<int>(doc, "b");
  r.lambda = get_optional<double>(doc, "lambda");
  r.seed = get_optional<std::uint64_t>(doc, "seed");
  r.lp_bound = get_optional<double>(doc, "lp_bound");
  r.rounded_objective = get_optional<double>(doc, "rounded_objective");
  r.gap = get_optional<double>(doc, "gap");
  r.integral = get_optional<bool>(doc, "integral");
  r.err = get_optional<bool>(doc, "err");
  if (doc.contains("fractional")) {
    const Json& frac = doc.at("fractional");
    FractionalSolution s;
    for (const Json& entry : frac.at("x")) s.x.push_back(entry.at(2).get<double>());
    s.y = get_optional<std::vector<double>>(frac, "y");
    r.fractional = std::move(s);
  }
  if (doc.contains("message")) r.message = get<std::string>(doc, "message");
  return r;
}

Json network_to_json(const FlowNetwork& network) {
  Json edges = Json::array();
  for (const FlowEdge& e : network.edges()) {
    Json edge;
    edge["tail"] = e.tail + 1;
    edge["head"] = e.head + 1;
    edge["lower"] = e.lower;
    edge["capacity"] = e.capacity;
    edge["cost"] = e.cost;
    edges.push_back(std::move(edge));
  }
  Json doc;
  doc["format"] = kFormatVersion;
  doc["vertices"] = network.num_vertices();
  doc["supply"] = network.supplies();
  doc["edges"] = std::move(edges);
  return doc;
}

Json lp_to_json(const LinearProgram& lp) {
  auto bound = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  Json vars = Json::array();
  for (int j = 0; j < lp.num_vars(); ++j) {
    Json var;
    var["cost"] = lp.objective[j];
    var["lower"] = lp.lower[j];
    var["upper"] = bound(lp.upper[j]);
    vars.push_back(std::move(var));
  }
  Json rows = Json::array();
  for (const LinearRow& row : lp.rows) {
    Json terms = Json::array();
    for (const auto& [var, coef] : row.terms) {
      terms.push_back(Json::array({var + 1, coef}));
    }
    Json out;
    out["sense"] = row.sense == RowSense::kLessEqual      ? "<="
                   : row.sense == RowSense::kGreaterEqual ? ">="
                                                          : "=";
    out["rhs"] = row.rhs;
    out["terms"] = std::move(terms);
    rows.push_back(std::move(out));
  }
  Json doc;
  doc["format"] = kFormatVersion;
  doc["variables"] = std::move(vars);
  doc["rows"] = std::move(rows);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json(path));
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_text(dump(instance_to_json(instance)), path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return fields;
}

template <typename T>
bool parse_number(const std::string& text, T& out) {
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      out = std::stod(text, &used);
      return used == text.size();
    } catch (const std::exception&) {
      return false;
    }
  } else {
    const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc() && res.ptr == text.data() + text.size();
  }
}

// Reads two-column rows, skipping blank lines and a non-numeric first line.
template <typename Second>
std::vector<std::pair<int, Second>> read_pairs(std::istream& in,
                                               const char* what) {
  std::vector<std::pair<int, Second>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_csv_line(line);
    if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
    int first = 0;
    Second second{};
    const bool ok = fields.size() == 2 && parse_number(fields[0], first) &&
                    parse_number(fields[1], second);
    if (!ok) {
      if (line_no == 1) continue;  // header
      throw FormatError(std::string(what) + " line " + std::to_string(line_no) +
                        ": expected two numeric fields");
    }
    rows.emplace_back(first, second);
  }
  return rows;
}

}  // namespace

Instance import_csv(std::istream& pairs, std::istream& probabilities) {
  const auto prob_rows = read_pairs<double>(probabilities, "p sidecar");
  const int m = static_cast<int>(prob_rows.size());
  std::vector<double> p(m, 0.0);
  std::vector<bool> seen(m, false);
  for (const auto& [author, value] : prob_rows) {
    if (author < 1 || author > m) {
      throw FormatError("p sidecar: author id " + std::to_string(author) +
                        " outside 1.." + std::to_string(m));
    }
    if (seen[author - 1]) {
      throw FormatError("p sidecar: author " + std::to_string(author) +
                        " listed twice");
    }
    seen[author - 1] = true;
    p[author - 1] = value;
  }
  const auto pair_rows = read_pairs<int>(pairs, "pairs");
  int n = 0;
  for (const auto& [paper, author] : pair_rows) {
    if (paper < 1) throw FormatError("pairs: paper id must be positive");
    if (author < 1 || author > m) {
      throw FormatError("pairs: author id " + std::to_string(author) +
                        " has no probability");
    }
    n = std::max(n, paper);
  }
  std::vector<std::vector<int>> papers(n);
  for (const auto& [paper, author] : pair_rows) {
    papers[paper - 1].push_back(author - 1);
  }
  for (int i = 0; i < n; ++i) {
    auto& row = papers[i];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw FormatError("pairs: duplicate author on paper " + std::to_string(i + 1));
    }
  }
  return Instance(n, m, papers, std::move(p));
}

}  // namespace deskrisk

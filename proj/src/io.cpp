// Copyright 2026 The arrowsimp Authors
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

#include "arrowsimp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace arrowsimp {
namespace {

// Splits on LF. A single trailing LF is allowed; CR anywhere is rejected.
std::vector<std::string_view> split_lines(std::string_view text) {
  if (const auto cr = text.find('\r'); cr != std::string_view::npos) {
    int line = 1;
    std::size_t last = 0;
    for (std::size_t i = 0; i < cr; ++i) {
      if (text[i] == '\n') {
        ++line;
        last = i + 1;
      }
    }
    throw ParseError(line, static_cast<int>(cr - last) + 1,
                     "carriage return; files must use LF line endings");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

int parse_count(std::string_view line, int line_no, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(line.data(), line.data() + line.size(), value);
  if (ec != std::errc() || line.empty()) {
    throw ParseError(line_no, 1, std::string("expected decimal ") + what);
  }
  if (ptr != line.data() + line.size()) {
    throw ParseError(line_no, static_cast<int>(ptr - line.data()) + 1,
                     std::string("unexpected character after ") + what);
  }
  return value;
}

Json witness_or_null(const std::optional<Witness>& w) {
  return w ? to_json(*w) : Json(nullptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_trn(const Tournament& t) {
  const int n = t.order();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += t.dominates(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Tournament parse_trn(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty file");
  const int n = parse_count(lines[0], 1, "vertex count");
  if (n < 1 || n > kMaxVertices) {
    throw ParseError(1, 1,
                     "vertex count must be in 1.." +
                         std::to_string(kMaxVertices));
  }
  if (static_cast<int>(lines.size()) < n + 1) {
    throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                     "expected " + std::to_string(n) + " matrix rows");
  }
  if (static_cast<int>(lines.size()) > n + 1) {
    throw ParseError(n + 2, 1, "trailing content after the last row");
  }
  std::vector<VertexMask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    const std::string_view row = lines[i + 1];
    const int line_no = i + 2;
    for (int j = 0; j < static_cast<int>(row.size()) && j < n; ++j) {
      if (row[j] == '1') {
        rows[i] |= bit(j);
      } else if (row[j] != '0') {
        throw ParseError(line_no, j + 1, "expected '0' or '1'");
      }
    }
    if (static_cast<int>(row.size()) != n) {
      throw ParseError(line_no, std::min<int>(row.size(), n) + 1,
                       "row has " + std::to_string(row.size()) +
                           " characters, expected " + std::to_string(n));
    }
    if (rows[i] & bit(i)) {
      throw ParseError(line_no, i + 1, "diagonal entry must be '0'");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (((rows[i] >> j) & 1U) == ((rows[j] >> i) & 1U)) {
        throw ParseError(i + 2, j + 1,
                         "entries (" + std::to_string(i) + "," +
                             std::to_string(j) + ") and (" +
                             std::to_string(j) + "," + std::to_string(i) +
                             ") must sum to 1");
      }
    }
  }
  return Tournament::from_out_rows(rows);
}

std::string to_matrix_text(const SkewHadamard& h) {
  const int m = h.order();
  std::string out = std::to_string(m) + "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j > 0) out += ' ';
      out += h.at(i, j) > 0 ? "+1" : "-1";
    }
    out += '\n';
  }
  return out;
}

SkewHadamard parse_matrix_text(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty file");
  const int m = parse_count(lines[0], 1, "matrix order");
  if (m < 1 || m > kMaxVertices + 1) {
    throw ParseError(1, 1, "matrix order out of range");
  }
  if (static_cast<int>(lines.size()) != m + 1) {
    throw ParseError(std::min<int>(lines.size(), m + 1) + 1, 1,
                     "expected exactly " + std::to_string(m) + " rows");
  }
  std::vector<std::vector<int>> rows(m);
  for (int i = 0; i < m; ++i) {
    const std::string_view line = lines[i + 1];
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t end = std::min(line.find(' ', pos), line.size());
      const std::string_view tok = line.substr(pos, end - pos);
      int v = 0;
      if (tok == "+1" || tok == "1") {
        v = 1;
      } else if (tok == "-1") {
        v = -1;
      } else {
        throw ParseError(i + 2, static_cast<int>(pos) + 1,
                         "expected +1 or -1");
      }
      rows[i].push_back(v);
      pos = end + 1;
    }
    if (static_cast<int>(rows[i].size()) != m) {
      throw ParseError(i + 2, 1,
                       "row has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(m));
    }
  }
  return SkewHadamard::from_rows(rows);
}

Json to_json(const Witness& w) {
  Json j;
  j["instance"] = w.instance;
  j["detail"] = w.detail;
  j["trn"] = w.tournament ? Json(to_trn(*w.tournament)) : Json(nullptr);
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.instance = j.at("instance").get<std::string>();
  w.detail = j.at("detail").get<std::string>();
  if (!j.at("trn").is_null()) {
    w.tournament = parse_trn(j.at("trn").get<std::string>());
  }
  return w;
}

Json to_json(const SimplicityReport& r) {
  Json j;
  j["order"] = r.order;
  j["s"] = r.s;
  j["exact"] = r.exact;
  j["simple"] = r.simple;
  j["witness_module"] = r.witness_module.members();
  Json arcs = Json::array();
  for (const Arc& a : r.witness_arcs) arcs.push_back({a.from, a.to});
  j["witness_arcs"] = std::move(arcs);
  j["min_degree"] = r.min_degree;
  j["min_separators"] = r.min_separators;
  j["theorem1_bound"] = r.theorem1_bound;
  j["subsets_examined"] = r.subsets_examined;
  j["subsets_pruned"] = r.subsets_pruned;
  return j;
}

SimplicityReport simplicity_report_from_json(const Json& j) {
  SimplicityReport r;
  r.order = j.at("order").get<int>();
  r.s = j.at("s").get<int>();
  r.exact = j.at("exact").get<bool>();
  r.simple = j.at("simple").get<bool>();
  r.witness_module =
      VertexSet::from_members(j.at("witness_module").get<std::vector<int>>());
  std::vector<Arc> arcs;
  for (const Json& a : j.at("witness_arcs")) {
    arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
  }
  r.witness_arcs = ArcSet::from_arcs(std::move(arcs));
  r.min_degree = j.at("min_degree").get<int>();
  r.min_separators = j.at("min_separators").get<int>();
  r.theorem1_bound = j.at("theorem1_bound").get<int>();
  r.subsets_examined = j.at("subsets_examined").get<std::uint64_t>();
  r.subsets_pruned = j.at("subsets_pruned").get<std::uint64_t>();
  return r;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed();
    cj["instances"] = c.instances;
    cj["failures"] = c.failures;
    cj["first_failure"] = witness_or_null(c.first_failure);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  Json tallies = Json::object();
  for (const auto& [key, count] : r.tallies) tallies[key] = count;
  j["tallies"] = std::move(tallies);
  return j;
}

SuiteReport suite_report_from_json(const Json& j) {
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.instances = j.at("instances").get<std::uint64_t>();
  for (const Json& cj : j.at("checks")) {
    CheckResult c;
    c.name = cj.at("name").get<std::string>();
    c.instances = cj.at("instances").get<std::uint64_t>();
    c.failures = cj.at("failures").get<std::uint64_t>();
    if (!cj.at("first_failure").is_null()) {
      c.first_failure = witness_from_json(cj.at("first_failure"));
    }
    r.checks.push_back(std::move(c));
  }
  for (const auto& [key, value] : j.at("tallies").items()) {
    r.tallies[key] = value.get<std::uint64_t>();
  }
  return r;
}

Json make_report(std::string_view command, std::optional<std::uint64_t> seed,
                 const Json& input, const Json& results) {
  Json j;
  j["tool_version"] = std::string(kToolVersion);
  j["command"] = std::string(command);
  if (seed) j["seed"] = *seed;
  j["input"] = input;
  j["results"] = results;
  return j;
}

std::string to_csv(const SuiteReport& r) {
  std::string out =
      "suite,check,instances,failures,passed,witness_instance,"
      "witness_detail\n";
  for (const CheckResult& c : r.checks) {
    out += csv_field(r.suite) + "," + csv_field(c.name) + "," +
           std::to_string(c.instances) + "," + std::to_string(c.failures) +
           "," + (c.passed() ? "true" : "false") + ",";
    if (c.first_failure) {
      out += csv_field(c.first_failure->instance) + "," +
             csv_field(c.first_failure->detail);
    } else {
      out += ",";
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kParseError, "write failed for " + path.string());
}

}  // namespace arrowsimp

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

// File formats and report serialization.
//
// .trn tournament file (LF line endings, nothing after the last row):
//   line 1       decimal n
//   lines 2..n+1 n characters of '0'/'1'; character j of line i+2 is '1'
//                iff i -> j
//
// Matrix file: line 1 is the order m, then m lines of m space-separated
// entries written "+1" or "-1" ("1" is accepted on input).
//
// Reports are JSON objects with a fixed key order:
//   {"tool_version", "command", "seed"?, "input", "results": [...]}
// and suite reports also flatten to CSV, one row per check:
//   suite,check,instances,failures,passed,witness_instance,witness_detail

#ifndef ARROWSIMP_IO_HPP_
#define ARROWSIMP_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "arrowsimp/constructions.hpp"
#include "arrowsimp/modsimp.hpp"
#include "arrowsimp/verify.hpp"
#include "json.hpp"

namespace arrowsimp {

inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

std::string to_trn(const Tournament& t);
// Errors: ParseError; tournament validation errors are reported as
// ParseError at the offending character.
Tournament parse_trn(std::string_view text);

std::string to_matrix_text(const SkewHadamard& h);
// Errors: ParseError; InvariantViolation for entries other than +1/-1.
SkewHadamard parse_matrix_text(std::string_view text);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json to_json(const SimplicityReport& r);
SimplicityReport simplicity_report_from_json(const Json& j);
Json to_json(const SuiteReport& r);
SuiteReport suite_report_from_json(const Json& j);

// Wraps results in the report envelope.
Json make_report(std::string_view command, std::optional<std::uint64_t> seed,
                 const Json& input, const Json& results);

std::string to_csv(const SuiteReport& r);

// Errors: ParseError when the file cannot be read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace arrowsimp

#endif  // ARROWSIMP_IO_HPP_

// Copyright 2026 The owc Authors.
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

#ifndef OWC_REPORT_HPP_
#define OWC_REPORT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "owc/harness.hpp"

namespace owc {

enum class ReportFormat { csv, jsonl, text };

std::optional<ReportFormat> parse_report_format(std::string_view name);

// Serializes reports row by row. CSV writes its header before the first
// row; the other formats have none.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format) : out_(out), format_(format) {}

  void write(const BoundReport& report);
  // Verdict tallies for everything written so far.
  std::size_t count(Verdict v) const { return counts_[static_cast<std::size_t>(v)]; }
  std::size_t rows() const { return rows_; }
  bool any_fail() const;

 private:
  std::ostream& out_;
  ReportFormat format_;
  bool header_done_ = false;
  std::size_t rows_ = 0;
  std::array<std::size_t, 6> counts_{};
};

std::string csv_header();
std::string to_csv_row(const BoundReport& report);
std::string to_json_line(const BoundReport& report);
std::string to_text(const BoundReport& report);

// "rows=12 PASS=9 FAIL_LOWER=0 ... SKIPPED_TOO_LARGE=2".
std::string summary_line(const ReportWriter& writer);

bool is_failure(Verdict v);

}  // namespace owc

#endif  // OWC_REPORT_HPP_

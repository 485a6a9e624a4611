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

#include "owc/report.hpp"

#include <cstdio>
#include "json.hpp"

namespace owc {
namespace {

constexpr std::array kAllVerdicts = {Verdict::pass,          Verdict::fail_lower,
                                     Verdict::fail_upper,    Verdict::fail_construction,
                                     Verdict::fail_claim,    Verdict::skipped_too_large};

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

// Fixed three decimals so the text does not depend on stream state.
std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool all_constructions_ok(const BoundReport& r) {
  for (const auto& c : r.constructions)
    if (!c.ok) return false;
  return true;
}

std::string construction_sizes(const BoundReport& r) {
  std::vector<std::string> parts;
  for (const auto& c : r.constructions) parts.push_back(std::to_string(c.size));
  return join(parts, ";");
}

std::string recipes(const BoundReport& r) {
  std::vector<std::string> parts;
  for (const auto& c : r.constructions) {
    std::string s = c.recipe + ":" + std::to_string(c.size) + ":" + (c.ok ? "ok" : "fail");
    if (!c.ok) s += ":" + (c.witness.empty() ? std::string("-") : c.witness);
    if (!c.note.empty()) s += " (" + c.note + ")";
    parts.push_back(std::move(s));
  }
  return join(parts, ";");
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "jsonl") return ReportFormat::jsonl;
  if (name == "text") return ReportFormat::text;
  return std::nullopt;
}

bool is_failure(Verdict v) { return v != Verdict::pass && v != Verdict::skipped_too_large; }

std::string csv_header() {
  return "check,kind,g_name,g_order,h_name,h_order,exact,lower,upper,construction_sizes,"
         "construction_ok,verdict,elapsed_ms,witness,recipes,counterexamples,notes";
}

std::string to_csv_row(const BoundReport& r) {
  const std::vector<std::string> fields = {
      csv_field(r.check),
      csv_field(r.kind),
      csv_field(r.g_name),
      std::to_string(r.g_order),
      csv_field(r.h_name),
      std::to_string(r.h_order),
      opt(r.exact),
      opt(r.lower),
      opt(r.upper),
      csv_field(construction_sizes(r)),
      r.skipped ? "" : (all_constructions_ok(r) ? "true" : "false"),
      std::string(verdict_name(r.verdict)),
      r.elapsed_ms ? format_ms(*r.elapsed_ms) : "",
      csv_field(r.witness),
      csv_field(recipes(r)),
      csv_field(join(r.counterexamples, " | ")),
      csv_field(join(r.notes, "; ")),
  };
  return join(fields, ",");
}

std::string to_json_line(const BoundReport& r) {
  using nlohmann::ordered_json;
  auto opt_json = [](const std::optional<std::size_t>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json j;
  j["check"] = r.check;
  j["kind"] = r.kind;
  j["g_name"] = r.g_name;
  j["g_order"] = r.g_order;
  j["h_name"] = r.h_name;
  j["h_order"] = r.h_order;
  j["exact"] = opt_json(r.exact);
  j["lower"] = opt_json(r.lower);
  j["upper"] = opt_json(r.upper);
  ordered_json sizes = ordered_json::array();
  ordered_json constructions = ordered_json::array();
  for (const auto& c : r.constructions) {
    sizes.push_back(c.size);
    constructions.push_back({{"recipe", c.recipe},
                             {"size", c.size},
                             {"expected_size", c.expected_size},
                             {"ok", c.ok},
                             {"witness", c.witness},
                             {"note", c.note}});
  }
  j["construction_sizes"] = sizes;
  j["construction_ok"] = r.skipped ? ordered_json(nullptr) : ordered_json(all_constructions_ok(r));
  j["verdict"] = std::string(verdict_name(r.verdict));
  // Rounded like the CSV column so both formats agree.
  j["elapsed_ms"] = r.elapsed_ms ? ordered_json(std::stod(format_ms(*r.elapsed_ms)))
                                 : ordered_json(nullptr);
  j["witness"] = r.witness;
  j["constructions"] = constructions;
  j["product_edges"] = r.product_edges;
  j["expected_edges"] = r.expected_edges;
  j["counterexamples"] = r.counterexamples;
  j["notes"] = r.notes;
  return j.dump();
}

std::string to_text(const BoundReport& r) {
  std::string out = r.check + " " + r.g_name + " x " + r.h_name + " (" + r.kind + "): " +
                    std::string(verdict_name(r.verdict));
  if (r.skipped) return out + " [" + join(r.notes, "; ") + "]";
  out += "\n  exact=" + opt(r.exact);
  if (r.lower || r.upper) out += " bounds=[" + opt(r.lower) + "," + opt(r.upper) + "]";
  if (!r.witness.empty()) out += " witness=" + r.witness;
  for (const auto& c : r.constructions) {
    out += "\n  " + c.recipe + ": size=" + std::to_string(c.size) +
           " expected=" + std::to_string(c.expected_size) + (c.ok ? " ok" : " FAILED");
    if (!c.witness.empty()) out += " set=" + c.witness;
    if (!c.note.empty()) out += " (" + c.note + ")";
  }
  for (const auto& c : r.counterexamples) out += "\n  counterexample: " + c;
  for (const auto& n : r.notes) out += "\n  note: " + n;
  if (r.elapsed_ms) out += "\n  elapsed_ms=" + format_ms(*r.elapsed_ms);
  return out;
}

void ReportWriter::write(const BoundReport& report) {
  switch (format_) {
    case ReportFormat::csv:
      if (!header_done_) out_ << csv_header() << '\n';
      header_done_ = true;
      out_ << to_csv_row(report) << '\n';
      break;
    case ReportFormat::jsonl: out_ << to_json_line(report) << '\n'; break;
    case ReportFormat::text: out_ << to_text(report) << '\n'; break;
  }
  ++rows_;
  ++counts_[static_cast<std::size_t>(report.verdict)];
}

bool ReportWriter::any_fail() const {
  for (Verdict v : kAllVerdicts)
    if (is_failure(v) && count(v) > 0) return true;
  return false;
}

std::string summary_line(const ReportWriter& writer) {
  std::string out = "rows=" + std::to_string(writer.rows());
  for (Verdict v : kAllVerdicts) {
    out += " " + std::string(verdict_name(v)) + "=" + std::to_string(writer.count(v));
  }
  return out;
}

}  // namespace owc

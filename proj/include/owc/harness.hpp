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

#ifndef OWC_HARNESS_HPP_
#define OWC_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owc/constructions.hpp"
#include "owc/graph.hpp"

namespace owc {

// Checkers for the product bounds on the outer-weakly convex domination
// number. Each one computes exact values on a concrete instance, builds the
// candidate sets from the corresponding proof, and records a verdict. A
// violated claim is a FAIL row with a serialized counterexample, never an
// exception.

enum class Verdict {
  pass,
  fail_lower,
  fail_upper,
  fail_construction,
  // A projection or rectangle statement has a counterexample.
  fail_claim,
  skipped_too_large,
};

std::string_view verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

struct ConstructionOutcome {
  std::string recipe;
  std::size_t size = 0;
  std::size_t expected_size = 0;
  bool ok = false;
  // Serialized "(g,h)" pairs; empty when the hypotheses were not met.
  std::string witness;
  std::string note;
};

struct BoundReport {
  std::string check;
  std::string kind;
  std::string g_name;
  std::size_t g_order = 0;
  std::string h_name;
  std::size_t h_order = 0;

  std::optional<std::size_t> exact;
  std::optional<std::size_t> lower;
  std::optional<std::size_t> upper;
  std::vector<ConstructionOutcome> constructions;
  bool skipped = false;
  Verdict verdict = Verdict::pass;
  std::optional<double> elapsed_ms;
  // Canonical minimum witness of the product, as "(g,h)" pairs.
  std::string witness;

  std::size_t product_edges = 0;
  std::size_t expected_edges = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
};

// PASS iff lower <= exact <= upper, every construction verified and no
// counterexample; failures are reported in the order lower, upper,
// construction, claim.
Verdict decide_verdict(const BoundReport& report);

struct HarnessOptions {
  // Largest product order the exact solver is run on.
  std::size_t order_cap = 24;
  // Largest product order for the projection checks.
  std::size_t projection_cap = 16;
  // Largest factor order for the exhaustive rectangle check.
  std::size_t rectangle_factor_cap = 5;
  // Random draws of larger sets per projection check.
  std::size_t sample_size = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  ChoicePolicy choices;
  bool timing = false;
};

BoundReport check_cartesian(const Graph& g, const Graph& h, const HarnessOptions& options = {});
BoundReport check_cartesian_projection(const Graph& g, const Graph& h,
                                       const HarnessOptions& options = {});
BoundReport check_cartesian_rectangle(const Graph& g, const Graph& h,
                                      const HarnessOptions& options = {});
BoundReport check_strong(const Graph& g, const Graph& h, const HarnessOptions& options = {});
BoundReport check_strong_kn(const Graph& g, std::size_t n, const HarnessOptions& options = {});
BoundReport check_strong_kmn(const Graph& g, std::size_t m, std::size_t n,
                             const HarnessOptions& options = {});
BoundReport check_lexicographic(const Graph& g, const Graph& h,
                                const HarnessOptions& options = {});
BoundReport check_lexico_projection(const Graph& g, const Graph& h,
                                    const HarnessOptions& options = {});

}  // namespace owc

#endif  // OWC_HARNESS_HPP_

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

#ifndef OWC_SWEEP_HPP_
#define OWC_SWEEP_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "owc/graph.hpp"
#include "owc/harness.hpp"

namespace owc {

enum class CheckKind {
  cartesian,
  strong,
  strong_kn,
  strong_kmn,
  lex,
  projection,
  lex_projection,
  rectangle,
};

std::string_view check_name(CheckKind kind);
std::optional<CheckKind> parse_check_kind(std::string_view name);

struct SweepConfig {
  // Left factors, and right factors for the two-factor checks. An empty
  // right pool means "same as left".
  std::vector<Graph> pool;
  std::vector<Graph> right_pool;
  std::vector<CheckKind> checks;
  std::vector<std::size_t> kn_values{2, 3};
  std::vector<std::pair<std::size_t, std::size_t>> kmn_values{{2, 2}};
  HarnessOptions options;
};

// Config format, one key=value per line; '#' starts a comment.
//   family=cycle:3..5        append to the pool (repeatable)
//   right=complete:2         append to the right pool (repeatable)
//   checks=cartesian,strong  replaces the check list
//   cap=20  projection_cap=16  rectangle_cap=4  sample=0  seed=1
//   kn=2..3  kmn=2x2,2x3  timing=on|off  choice_seed=7|off
// Errors throw ParseError carrying the line number; the message names the
// offending field.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::filesystem::path& path);

// The pool {P2-P4, C3-C5, K2-K4, K1,3, K2,2}, the five bound checks and a
// product cap of 20.
SweepConfig default_sweep_config();

struct SweepInstance {
  CheckKind check;
  std::size_t left = 0;   // index into pool
  std::size_t right = 0;  // index into the right pool; unused for kn/kmn
  std::size_t m = 0;      // K_n or K_{m,n} parameters
  std::size_t n = 0;
};

// Deterministic instance order: checks in config order, then left factor,
// then right factor or parameter.
std::vector<SweepInstance> sweep_instances(const SweepConfig& config);

BoundReport run_instance(const SweepConfig& config, const SweepInstance& instance,
                         unsigned solver_workers = 1);

// Runs every instance, calling on_row in instance order. With workers > 1
// instances run concurrently and each solver is single-threaded.
void run_sweep(const SweepConfig& config, unsigned workers,
               const std::function<void(const BoundReport&)>& on_row);

}  // namespace owc

#endif  // OWC_SWEEP_HPP_

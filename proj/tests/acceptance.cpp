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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion, followed
// by indented detail lines for whatever went wrong. Time limits are part of
// each criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "owc/convexity.hpp"
#include "owc/domination.hpp"
#include "owc/families.hpp"
#include "owc/graph_io.hpp"
#include "owc/harness.hpp"
#include "owc/products.hpp"
#include "owc/report.hpp"
#include "owc/sweep.hpp"

using namespace owc;

namespace {

using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string why) {
    ok = false;
    details.push_back(std::move(why));
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

unsigned solver_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

HarnessOptions options(std::size_t cap) {
  HarnessOptions o;
  o.order_cap = cap;
  o.workers = solver_workers();
  return o;
}

// {P2-P4, C3-C5, K2-K4, K1,3}.
std::vector<Graph> factor_pool() {
  return {path_graph(2),     path_graph(3),     path_graph(4),     cycle_graph(3),
          cycle_graph(4),    cycle_graph(5),    complete_graph(2), complete_graph(3),
          complete_graph(4), star_graph(3)};
}

std::string instance(const BoundReport& r) {
  std::string s = r.check + " " + r.g_name + " x " + r.h_name + ": " +
                  std::string(verdict_name(r.verdict));
  if (r.exact) s += " exact=" + std::to_string(*r.exact);
  if (r.lower) s += " lower=" + std::to_string(*r.lower);
  if (r.upper) s += " upper=" + std::to_string(*r.upper);
  return s;
}

Outcome c1_oracle_equivalence() {
  Outcome out;
  std::size_t subsets = 0, disagreements = 0;
  auto compare = [&](const IntervalCache& cache, const VertexSet& s) {
    ++subsets;
    if (is_weakly_convex(cache, s) != is_weakly_convex_oracle(cache, s)) {
      if (++disagreements <= 5) {
        out.fail("disagreement on graph with edges " + std::to_string(cache.graph().edge_count()) +
                 ", set " + s.to_string());
      }
    }
  };
  std::size_t exhaustive_graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& edges : oracle::all_labeled_graphs(n)) {
      const Graph g(n, edges);
      if (!is_connected(g)) continue;
      ++exhaustive_graphs;
      const IntervalCache cache(g);
      for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) compare(cache, VertexSet::from_word(n, m));
    }
  }
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(6, 9)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const Graph g(n, oracle::random_connected_edges(n, p, rng));
    const IntervalCache cache(g);
    std::uniform_int_distribution<oracle::Mask> pick(0, (oracle::Mask{1} << n) - 1);
    for (int i = 0; i < 200; ++i) compare(cache, VertexSet::from_word(n, pick(rng)));
  }
  out.summary = std::to_string(exhaustive_graphs) + " exhaustive graphs + 500 random, " +
                std::to_string(subsets) + " subsets, " + std::to_string(disagreements) +
                " disagreements";
  return out;
}

Outcome c2_solver_sanity() {
  Outcome out;
  std::size_t checked = 0;
  auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
    ++checked;
    if (got != want) out.fail(what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    expect("gamma_wcon(K" + std::to_string(n) + ")", owc_domination_number(complete_graph(n)).value, 1);
  }
  expect("gamma_wcon(P3)", owc_domination_number(path_graph(3)).value, 2);
  expect("gamma_wcon(P4)", owc_domination_number(path_graph(4)).value, 2);
  expect("gamma_wcon(C4)", owc_domination_number(cycle_graph(4)).value, 2);
  expect("gamma_wcon(K1,3)", owc_domination_number(star_graph(3)).value, 3);
  expect("gamma(P3)", domination_number(path_graph(3)).value, 1);
  expect("gamma(C4)", domination_number(cycle_graph(4)).value, 2);
  expect("script_p(P3)", script_p(path_graph(3)), 0);
  expect("script_p(K1,3)", script_p(star_graph(3)), 0);
  expect("script_p(K2)", script_p(complete_graph(2)), 1);
  out.summary = std::to_string(checked) + " pinned values";
  return out;
}

// Runs `check` on every ordered pool pair with product order <= cap and
// requires PASS with every construction verified.
Outcome pool_bounds(const std::function<BoundReport(const Graph&, const Graph&)>& check,
                     std::size_t cap) {
  Outcome out;
  std::size_t instances = 0, constructions = 0;
  const auto pool = factor_pool();
  for (const Graph& g : pool) {
    for (const Graph& h : pool) {
      if (g.order() * h.order() > cap) continue;
      const BoundReport r = check(g, h);
      ++instances;
      bool covers_ok = !r.constructions.empty();
      for (const auto& c : r.constructions) {
        ++constructions;
        covers_ok &= c.ok;
      }
      if (r.verdict != Verdict::pass || !covers_ok) out.fail(instance(r));
    }
  }
  out.summary = std::to_string(instances) + " instances, " + std::to_string(constructions) +
                " constructions";
  return out;
}

Outcome c3_cartesian() {
  return pool_bounds([](const Graph& g, const Graph& h) { return check_cartesian(g, h, options(20)); },
                      20);
}

Outcome c4_complete_factor() {
  Outcome out;
  for (const Graph& h : {path_graph(3), cycle_graph(3)}) {
    const BoundReport r = check_cartesian(complete_graph(3), h, options(20));
    if (r.exact != 3u) out.fail(instance(r));
  }
  out.summary = "K3 x P3, K3 x C3";
  return out;
}

Outcome c5_strong() {
  return pool_bounds([](const Graph& g, const Graph& h) { return check_strong(g, h, options(20)); },
                      20);
}

Outcome c6_strong_kn() {
  Outcome out;
  std::size_t instances = 0;
  for (const Graph& g : {path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5), star_graph(3)}) {
    for (std::size_t n : {2u, 3u}) {
      if (g.order() * n > 18) continue;
      ++instances;
      const BoundReport r = check_strong_kn(g, n, options(18));
      const std::size_t want = owc_domination_number(g).value;
      if (r.exact != want) {
        out.fail(r.g_name + " [x] K" + std::to_string(n) + ": exact " + std::to_string(*r.exact) +
                 " != gamma_wcon(" + r.g_name + ") = " + std::to_string(want));
      }
    }
  }
  out.summary = std::to_string(instances) + " instances";
  return out;
}

// Connected graphs on 2..4 vertices up to isomorphism.
std::vector<Graph> small_connected_graphs() {
  auto make = [](std::size_t n, std::vector<Edge> edges, std::string name) {
    return Graph(n, edges, std::move(name));
  };
  return {
      make(2, {{0, 1}}, "K2"),
      make(3, {{0, 1}, {1, 2}}, "P3"),
      make(3, {{0, 1}, {1, 2}, {0, 2}}, "K3"),
      make(4, {{0, 1}, {1, 2}, {2, 3}}, "P4"),
      make(4, {{0, 1}, {0, 2}, {0, 3}}, "K1,3"),
      make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, "C4"),
      make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, "paw"),
      make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, "diamond"),
      make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "K4"),
  };
}

Outcome c7_kmn() {
  Outcome out;
  std::size_t instances = 0;
  for (const Graph& g : small_connected_graphs()) {
    ++instances;
    const BoundReport r = check_strong_kmn(g, 2, 2, options(16));
    const std::size_t gamma = domination_number(g).value;
    if (*r.exact > 2 * gamma) {
      out.fail(g.name() + " [x] K2,2: exact " + std::to_string(*r.exact) + " > 2*gamma = " +
               std::to_string(2 * gamma));
    }
  }
  for (const Graph& g : {complete_graph(2), complete_graph(3)}) {
    const BoundReport r = check_strong_kmn(g, 2, 2, options(16));
    if (r.exact != 2u) out.fail("sharpness " + instance(r));
  }
  out.summary = std::to_string(instances) + " graphs of order <= 4, 2 sharpness instances";
  return out;
}

Outcome c8_lexicographic() {
  Outcome out;
  std::size_t instances = 0;
  const auto pool = factor_pool();
  for (const Graph& g : pool) {
    const std::size_t p = script_p(g);
    for (const Graph& h : pool) {
      if (g.order() * h.order() > 20) continue;
      ++instances;
      const BoundReport r = check_lexicographic(g, h, options(20));
      if (*r.exact < *r.lower || *r.exact > *r.upper) out.fail("bounds: " + instance(r));
      if (p == 0 && *r.exact != *r.lower) out.fail("equality when script_p=0: " + instance(r));
    }
  }
  out.summary = std::to_string(instances) + " instances";
  return out;
}

Outcome c9_projection_rectangle() {
  Outcome out;
  std::size_t rows = 0, claims = 0;
  auto record = [&](const BoundReport& r) {
    ++rows;
    if (r.verdict == Verdict::fail_claim) {
      ++claims;
      if (r.counterexamples.empty()) out.fail("FAIL without counterexample: " + instance(r));
      else if (claims <= 3) out.details.push_back("counterexample (" + instance(r) + "): " + r.counterexamples[0]);
    } else if (r.verdict != Verdict::pass) {
      out.fail("unexpected verdict: " + instance(r));
    }
  };
  HarnessOptions o = options(16);
  o.projection_cap = 16;
  o.rectangle_factor_cap = 4;
  const auto pool = factor_pool();
  for (const Graph& g : pool) {
    for (const Graph& h : pool) {
      if (g.order() * h.order() <= 16) {
        record(check_cartesian_projection(g, h, o));
        record(check_lexico_projection(g, h, o));
      }
      if (g.order() <= 4 && h.order() <= 4) record(check_cartesian_rectangle(g, h, o));
    }
  }
  out.summary = std::to_string(rows) + " verdict rows, " + std::to_string(claims) +
                " with serialized counterexamples";
  return out;
}

struct SweepRun {
  std::string bytes;
  std::vector<BoundReport> rows;
};

SweepRun sweep_default(unsigned workers) {
  SweepRun run;
  std::ostringstream csv;
  ReportWriter writer(csv, ReportFormat::csv);
  run_sweep(default_sweep_config(), workers, [&](const BoundReport& r) {
    writer.write(r);
    run.rows.push_back(r);
  });
  run.bytes = csv.str();
  return run;
}

Outcome c10_determinism() {
  Outcome out;
  const SweepRun a = sweep_default(1), b = sweep_default(1), c = sweep_default(8);
  if (a.bytes != b.bytes) out.fail("workers=1 runs differ byte-wise");
  if (a.rows.size() != c.rows.size()) out.fail("row counts differ between workers=1 and workers=8");
  for (std::size_t i = 0; i < std::min(a.rows.size(), c.rows.size()); ++i) {
    const BoundReport &x = a.rows[i], &y = c.rows[i];
    if (x.exact != y.exact || x.verdict != y.verdict || x.witness != y.witness) {
      out.fail("row " + std::to_string(i) + " differs: " + instance(x) + " vs " + instance(y));
    }
  }
  out.summary = std::to_string(a.rows.size()) + " rows compared";
  return out;
}

Outcome c11_formats() {
  Outcome out;
  std::mt19937_64 rng(11);
  std::size_t roundtrips = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 12;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const std::string text = to_graph6(g);
    const Graph back = graph_from_graph6(text);
    ++roundtrips;
    if (!(back == g) || to_graph6(back) != text) out.fail("graph6 round trip failed for " + text);
  }
  std::size_t products = 0;
  for (const BoundReport& r : sweep_default(solver_workers()).rows) {
    if (r.skipped) continue;
    ++products;
    if (r.product_edges != r.expected_edges) {
      out.fail(instance(r) + ": " + std::to_string(r.product_edges) + " edges, formula " +
               std::to_string(r.expected_edges));
    }
  }
  // Sweep rows cover cartesian, strong and lexicographic; check the three
  // formulas directly on the pool as well.
  const auto pool = factor_pool();
  for (const Graph& g : pool)
    for (const Graph& h : pool)
      for (ProductKind k : {ProductKind::cartesian, ProductKind::strong, ProductKind::lexicographic}) {
        ++products;
        const ProductGraph p = make_product(k, g, h);
        if (p.graph().edge_count() != expected_edge_count(k, g, h)) {
          out.fail(p.graph().name() + ": edge count mismatch");
        }
      }
  out.summary = std::to_string(roundtrips) + " graph6 round trips, " + std::to_string(products) +
                " product edge counts";
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "oracle equivalence", 60, c1_oracle_equivalence},
      {2, "solver sanity", 5, c2_solver_sanity},
      {3, "cartesian bounds and covers", 600, c3_cartesian},
      {4, "complete-factor cartesian value", 60, c4_complete_factor},
      {5, "strong bounds and covers", 600, c5_strong},
      {6, "strong K_n equality", 600, c6_strong_kn},
      {7, "strong K_{m,n} bound and sharpness", 300, c7_kmn},
      {8, "lexicographic bounds and script_p=0 equality", 600, c8_lexicographic},
      {9, "projection and rectangle reporting", 600, c9_projection_rectangle},
      {10, "sweep determinism", 600, c10_determinism},
      {11, "graph6 and edge-count fidelity", 600, c11_formats},
  };
  return all;
}

bool run_criterion(const Criterion& c) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = c.body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double seconds = Seconds(Clock::now() - start).count();
  if (seconds > c.limit_seconds) out.fail("time limit exceeded");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / limit %.0fs", seconds, c.limit_seconds);
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " ("
            << out.summary << "; " << timing << ")\n";
  for (const auto& d : out.details) std::cout << "    " << d << '\n';
  std::cout.flush();
  return out.ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-11); all when omitted")
      ->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ok &= run_criterion(c);
  }
  return ok ? 0 : 1;
}

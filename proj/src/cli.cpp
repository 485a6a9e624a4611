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

#include "owc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <thread>

#include "CLI11.hpp"
#include "owc/domination.hpp"
#include "owc/error.hpp"
#include "owc/graph_io.hpp"
#include "owc/graph_spec.hpp"
#include "owc/products.hpp"
#include "owc/report.hpp"
#include "owc/sweep.hpp"

namespace owc::cli {
namespace {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// "-" is standard output.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error("cannot open " + path + " for writing");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

struct ComputeArgs {
  std::string family;
  std::string input;
  std::string invariant = "owcon";
  std::size_t cap = kDefaultOrderCap;
  unsigned workers = default_workers();
};

struct ProductArgs {
  std::string kind;
  std::string left;
  std::string right;
  std::string out = "-";
  std::string format = "edges";
  std::string map;
};

struct CheckArgs {
  std::string name;
  std::string left;
  std::string right;
  std::size_t m = 2;
  std::size_t n = 2;
  std::string kind = "cartesian";
  std::string format = "text";
  std::string out = "-";
  std::size_t cap = kDefaultOrderCap;
  unsigned workers = default_workers();
  std::uint64_t seed = 1;
  std::size_t sample = 0;
  std::size_t projection_cap = 16;
  std::size_t rectangle_cap = 5;
  std::uint64_t choice_seed = 0;
  bool timing = false;
};

struct SweepArgs {
  std::string config;
  std::string format = "csv";
  std::string out = "-";
  unsigned workers = default_workers();
  std::uint64_t seed = 1;
  std::size_t cap = 20;
  std::size_t sample = 0;
  bool timing = false;
};

Graph load_graph(const std::string& family, const std::string& input) {
  if (!input.empty()) return load_graph_file(input);
  return parse_graph_spec(family);
}

int do_compute(const ComputeArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.family, a.input);
  const SearchOptions options{.order_cap = a.cap, .workers = a.workers};
  const bool all = a.invariant == "all";
  if (all || a.invariant == "owcon") {
    const OwcResult r = owc_domination_number(g, options);
    out << "gamma_wcon=" << r.value << " witness=" << r.witness.to_string() << '\n';
  }
  if (all || a.invariant == "gamma") {
    const OwcResult r = domination_number(g, options);
    out << "gamma=" << r.value << " witness=" << r.witness.to_string() << '\n';
  }
  if (all || a.invariant == "script-p") {
    const auto p = compute_script_p(g, ScriptPReading::weakly_convex, options);
    out << "script_p=" << p->value << " realizer=" << p->realizer.to_string() << '\n';
  }
  if (all || a.invariant == "script-p-convex") {
    const auto p = compute_script_p(g, ScriptPReading::convex, options);
    if (p) {
      out << "script_p_convex=" << p->value << " realizer=" << p->realizer.to_string() << '\n';
    } else {
      out << "script_p_convex=undefined\n";
    }
  }
  if (a.invariant == "min-sets") {
    const auto sets = enumerate_min_owc_sets(g, options);
    out << "gamma_wcon=" << sets.front().count() << " count=" << sets.size() << '\n';
    for (const VertexSet& s : sets) out << s.to_string() << '\n';
  }
  return kExitOk;
}

int do_product(const ProductArgs& a, std::ostream& stdout_stream) {
  const ProductKind kind = *parse_product_kind(a.kind);
  const ProductGraph p = make_product(kind, parse_graph_spec(a.left), parse_graph_spec(a.right));
  Output out(a.out, stdout_stream);
  if (a.format == "graph6") {
    out.get() << to_graph6(p.graph()) << '\n';
  } else {
    write_edge_list(out.get(), p.graph());
  }
  if (!a.map.empty()) {
    Output map(a.map, stdout_stream);
    for (Vertex v = 0; v < p.graph().order(); ++v) {
      const auto [g, h] = p.unpair(v);
      map.get() << v << ' ' << g << ' ' << h << '\n';
    }
  }
  return kExitOk;
}

int do_check(const CheckArgs& a, std::ostream& stdout_stream) {
  HarnessOptions options;
  options.order_cap = a.cap;
  options.projection_cap = a.projection_cap;
  options.rectangle_factor_cap = a.rectangle_cap;
  options.sample_size = a.sample;
  options.seed = a.seed;
  options.workers = a.workers;
  options.timing = a.timing;
  if (a.choice_seed != 0) options.choices.seed = a.choice_seed;

  const Graph g = parse_graph_spec(a.left);
  const bool needs_right = a.name != "strong-kn" && a.name != "strong-kmn";
  if (needs_right && a.right.empty()) throw CLI::ValidationError("--right", "required by " + a.name);
  BoundReport report;
  if (a.name == "strong-kn") {
    report = check_strong_kn(g, a.n, options);
  } else if (a.name == "strong-kmn") {
    report = check_strong_kmn(g, a.m, a.n, options);
  } else {
    const Graph h = parse_graph_spec(a.right);
    if (a.name == "cartesian") report = check_cartesian(g, h, options);
    else if (a.name == "strong") report = check_strong(g, h, options);
    else if (a.name == "lex") report = check_lexicographic(g, h, options);
    else if (a.name == "rectangle") report = check_cartesian_rectangle(g, h, options);
    else if (a.kind == "cartesian") report = check_cartesian_projection(g, h, options);
    else report = check_lexico_projection(g, h, options);
  }
  Output out(a.out, stdout_stream);
  ReportWriter writer(out.get(), *parse_report_format(a.format));
  writer.write(report);
  return writer.any_fail() ? kExitFail : kExitOk;
}

int do_sweep(const SweepArgs& a, const CLI::App& cmd, std::ostream& stdout_stream,
             std::ostream& err) {
  SweepConfig config = a.config.empty() ? default_sweep_config() : load_sweep_config(a.config);
  if (cmd.count("--seed")) config.options.seed = a.seed;
  if (cmd.count("--cap")) config.options.order_cap = a.cap;
  if (cmd.count("--sample")) config.options.sample_size = a.sample;
  if (a.timing) config.options.timing = true;

  Output out(a.out, stdout_stream);
  ReportWriter writer(out.get(), *parse_report_format(a.format));
  run_sweep(config, a.workers, [&](const BoundReport& r) {
    writer.write(r);
    out.get().flush();
  });
  err << summary_line(writer) << '\n';
  return writer.any_fail() ? kExitFail : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outer-weakly convex domination in graph products"};
  app.name("owc");
  app.require_subcommand(1);
  app.set_version_flag("--version", "owc 0.1.0");

  const auto positive = CLI::Range(std::size_t{1}, std::size_t{kMaxOrder});
  const auto worker_range = CLI::Range(1u, 1024u);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Exact invariants of one graph");
  auto* fam = c->add_option("--family", compute.family, "Graph spec, e.g. cycle:4 or @file.g6");
  auto* inp = c->add_option("--input", compute.input, "Graph file (.g6 or edge list)")
                  ->check(CLI::ExistingFile);
  fam->excludes(inp);
  c->add_option("--invariant", compute.invariant, "What to compute")
      ->check(CLI::IsMember({"owcon", "gamma", "script-p", "script-p-convex", "min-sets", "all"}))
      ->capture_default_str();
  c->add_option("--cap", compute.cap, "Largest order searched exactly")
      ->check(positive)
      ->capture_default_str();
  c->add_option("--workers", compute.workers, "Solver threads")->check(worker_range);

  ProductArgs product;
  auto* p = app.add_subcommand("product", "Write a product graph");
  p->add_option("--kind", product.kind, "cartesian, strong or lex")
      ->required()
      ->check(CLI::IsMember({"cartesian", "strong", "lex", "lexicographic"}));
  p->add_option("--left", product.left, "Left factor spec")->required();
  p->add_option("--right", product.right, "Right factor spec")->required();
  p->add_option("--out", product.out, "Output path, - for stdout")->capture_default_str();
  p->add_option("--format", product.format, "edges or graph6")
      ->check(CLI::IsMember({"edges", "graph6"}))
      ->capture_default_str();
  p->add_option("--map", product.map, "Sidecar file with lines 'index g h'");

  CheckArgs check;
  auto* k = app.add_subcommand("check", "Check one bound on one instance");
  k->add_option("name", check.name, "Which check")
      ->required()
      ->check(CLI::IsMember({"cartesian", "strong", "strong-kn", "strong-kmn", "lex", "projection",
                             "rectangle"}));
  k->add_option("--left", check.left, "Left factor spec (G)")->required();
  k->add_option("--right", check.right, "Right factor spec (H); unused by strong-kn/strong-kmn");
  k->add_option("--m", check.m, "First part of K_{m,n} for strong-kmn")
      ->check(CLI::Range(std::size_t{2}, std::size_t{kMaxOrder}))
      ->capture_default_str();
  k->add_option("--n", check.n, "K_n order for strong-kn, second part for strong-kmn")
      ->check(CLI::Range(std::size_t{2}, std::size_t{kMaxOrder}))
      ->capture_default_str();
  k->add_option("--kind", check.kind, "Product for the projection check")
      ->check(CLI::IsMember({"cartesian", "lex"}))
      ->capture_default_str();
  k->add_option("--format", check.format, "text, csv or jsonl")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}))
      ->capture_default_str();
  k->add_option("--out", check.out, "Output path, - for stdout")->capture_default_str();
  k->add_option("--cap", check.cap, "Largest product order solved exactly")
      ->check(positive)
      ->capture_default_str();
  k->add_option("--workers", check.workers, "Solver threads")->check(worker_range);
  k->add_option("--seed", check.seed, "Seed for sampled projection sets")->capture_default_str();
  k->add_option("--sample", check.sample, "Sampled larger sets per projection check")
      ->capture_default_str();
  k->add_option("--projection-cap", check.projection_cap, "Largest product for projection checks")
      ->capture_default_str();
  k->add_option("--rectangle-cap", check.rectangle_cap, "Largest factor for the rectangle check")
      ->check(CLI::Range(std::size_t{1}, std::size_t{20}))
      ->capture_default_str();
  k->add_option("--choice-seed", check.choice_seed,
                "Pick construction anchors pseudo-randomly (0 = smallest index)")
      ->capture_default_str();
  k->add_flag("--timing", check.timing, "Record elapsed_ms");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Run a configured batch of checks");
  s->add_option("--config", sweep.config, "Sweep config; the built-in default when omitted")
      ->check(CLI::ExistingFile);
  s->add_option("--format", sweep.format, "csv, jsonl or text")
      ->check(CLI::IsMember({"csv", "jsonl", "text"}))
      ->capture_default_str();
  s->add_option("--out", sweep.out, "Output path, - for stdout")->capture_default_str();
  s->add_option("--workers", sweep.workers, "Instances run in parallel")->check(worker_range);
  s->add_option("--seed", sweep.seed, "Override the config seed for sampled sets");
  s->add_option("--cap", sweep.cap, "Override the config product cap")->check(positive);
  s->add_option("--sample", sweep.sample, "Override the config sample size");
  s->add_flag("--timing", sweep.timing, "Record elapsed_ms (breaks byte identity)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) {
      if (compute.family.empty() && compute.input.empty()) {
        throw CLI::RequiredError("--family or --input");
      }
      return do_compute(compute, out);
    }
    if (p->parsed()) return do_product(product, out);
    if (k->parsed()) return do_check(check, out);
    return do_sweep(sweep, *s, out, err);
  } catch (const CLI::Error& e) {
    err << "owc: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "owc: parse error: " << e.what() << " (at " << e.position() << ")\n";
  } catch (const std::exception& e) {
    err << "owc: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace owc::cli

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

#include "owc/sweep.hpp"

#include <atomic>
#include <charconv>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>

#include "owc/error.hpp"
#include "owc/families.hpp"
#include "owc/graph_spec.hpp"

namespace owc {
namespace {

constexpr CheckKind kAllChecks[] = {CheckKind::cartesian,  CheckKind::strong,
                                    CheckKind::strong_kn,  CheckKind::strong_kmn,
                                    CheckKind::lex,        CheckKind::projection,
                                    CheckKind::lex_projection, CheckKind::rectangle};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

class LineParser {
 public:
  LineParser(std::size_t line, std::string_view key) : line_(line), key_(key) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("line " + std::to_string(line_) + ", field '" + std::string(key_) +
                         "': " + why,
                     line_);
  }

  std::uint64_t number(std::string_view text) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      fail("expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
  }

  bool on_off(std::string_view text) const {
    if (text == "on" || text == "true" || text == "1") return true;
    if (text == "off" || text == "false" || text == "0") return false;
    fail("expected on or off, got '" + std::string(text) + "'");
  }

  // "2", "2..4" or "2,3,5".
  std::vector<std::size_t> counts(std::string_view text) const {
    std::vector<std::size_t> out;
    for (std::string_view item : split(text, ',')) {
      const auto dots = item.find("..");
      if (dots == std::string_view::npos) {
        out.push_back(number(item));
        continue;
      }
      const auto lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
      if (lo > hi) fail("empty range '" + std::string(item) + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
  }

  std::vector<Graph> graphs(std::string_view text) const {
    std::vector<Graph> out;
    try {
      out = expand_graph_spec(text);
    } catch (const Error& e) {
      fail(e.what());
    }
    for (const Graph& g : out) {
      if (g.order() < 2 || !is_connected(g)) {
        fail("factor " + g.name() + " must be connected with at least two vertices");
      }
    }
    return out;
  }

 private:
  std::size_t line_;
  std::string_view key_;
};

void apply(SweepConfig& c, std::size_t line, std::string_view key, std::string_view value) {
  const LineParser p(line, key);
  if (key == "family") {
    for (Graph& g : p.graphs(value)) c.pool.push_back(std::move(g));
  } else if (key == "right") {
    for (Graph& g : p.graphs(value)) c.right_pool.push_back(std::move(g));
  } else if (key == "checks") {
    c.checks.clear();
    for (std::string_view name : split(value, ',')) {
      const auto kind = parse_check_kind(name);
      if (!kind) p.fail("unknown check '" + std::string(name) + "'");
      c.checks.push_back(*kind);
    }
  } else if (key == "cap") {
    c.options.order_cap = p.number(value);
    if (c.options.order_cap < 1) p.fail("cap must be at least 1");
  } else if (key == "projection_cap") {
    c.options.projection_cap = p.number(value);
  } else if (key == "rectangle_cap") {
    c.options.rectangle_factor_cap = p.number(value);
  } else if (key == "sample") {
    c.options.sample_size = p.number(value);
  } else if (key == "seed") {
    c.options.seed = p.number(value);
  } else if (key == "timing") {
    c.options.timing = p.on_off(value);
  } else if (key == "choice_seed") {
    if (value == "off") {
      c.options.choices.seed.reset();
    } else {
      c.options.choices.seed = p.number(value);
    }
  } else if (key == "kn") {
    c.kn_values = p.counts(value);
    for (auto n : c.kn_values)
      if (n < 2) p.fail("K_n needs n >= 2");
  } else if (key == "kmn") {
    c.kmn_values.clear();
    for (std::string_view item : split(value, ',')) {
      const auto x = item.find('x');
      if (x == std::string_view::npos) p.fail("expected MxN, got '" + std::string(item) + "'");
      const auto m = p.number(item.substr(0, x)), n = p.number(item.substr(x + 1));
      if (m < 2 || n < 2) p.fail("K_{m,n} needs m, n >= 2");
      c.kmn_values.emplace_back(m, n);
    }
  } else {
    p.fail("unknown key");
  }
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::cartesian: return "cartesian";
    case CheckKind::strong: return "strong";
    case CheckKind::strong_kn: return "strong-kn";
    case CheckKind::strong_kmn: return "strong-kmn";
    case CheckKind::lex: return "lex";
    case CheckKind::projection: return "projection";
    case CheckKind::lex_projection: return "lex-projection";
    case CheckKind::rectangle: return "rectangle";
  }
  return "?";
}

std::optional<CheckKind> parse_check_kind(std::string_view name) {
  for (CheckKind k : kAllChecks)
    if (check_name(k) == name) return k;
  return std::nullopt;
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig c;
  c.options.order_cap = 20;
  bool saw_checks = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line) + ": expected key=value", line);
    }
    const std::string_view key = trim(text.substr(0, eq));
    apply(c, line, key, trim(text.substr(eq + 1)));
    saw_checks |= key == "checks";
  }
  if (c.pool.empty()) throw ParseError("config declares no family", 0);
  if (!saw_checks) {
    c.checks = {CheckKind::cartesian, CheckKind::strong, CheckKind::strong_kn,
                CheckKind::strong_kmn, CheckKind::lex};
  }
  return c;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  return parse_sweep_config(in);
}

SweepConfig default_sweep_config() {
  SweepConfig c;
  for (std::size_t n = 2; n <= 4; ++n) c.pool.push_back(path_graph(n));
  for (std::size_t n = 3; n <= 5; ++n) c.pool.push_back(cycle_graph(n));
  for (std::size_t n = 2; n <= 4; ++n) c.pool.push_back(complete_graph(n));
  c.pool.push_back(star_graph(3));
  c.pool.push_back(complete_bipartite_graph(2, 2));
  c.checks = {CheckKind::cartesian, CheckKind::strong, CheckKind::strong_kn,
              CheckKind::strong_kmn, CheckKind::lex};
  c.options.order_cap = 20;
  return c;
}

std::vector<SweepInstance> sweep_instances(const SweepConfig& config) {
  const std::size_t rights = config.right_pool.empty() ? config.pool.size() : config.right_pool.size();
  std::vector<SweepInstance> out;
  for (CheckKind check : config.checks) {
    for (std::size_t g = 0; g < config.pool.size(); ++g) {
      if (check == CheckKind::strong_kn) {
        for (auto n : config.kn_values) out.push_back({check, g, 0, 0, n});
      } else if (check == CheckKind::strong_kmn) {
        for (auto [m, n] : config.kmn_values) out.push_back({check, g, 0, m, n});
      } else {
        for (std::size_t h = 0; h < rights; ++h) out.push_back({check, g, h, 0, 0});
      }
    }
  }
  return out;
}

BoundReport run_instance(const SweepConfig& config, const SweepInstance& in,
                         unsigned solver_workers) {
  HarnessOptions options = config.options;
  options.workers = solver_workers;
  const Graph& g = config.pool.at(in.left);
  const auto& rights = config.right_pool.empty() ? config.pool : config.right_pool;
  switch (in.check) {
    case CheckKind::strong_kn: return check_strong_kn(g, in.n, options);
    case CheckKind::strong_kmn: return check_strong_kmn(g, in.m, in.n, options);
    default: break;
  }
  const Graph& h = rights.at(in.right);
  switch (in.check) {
    case CheckKind::cartesian: return check_cartesian(g, h, options);
    case CheckKind::strong: return check_strong(g, h, options);
    case CheckKind::lex: return check_lexicographic(g, h, options);
    case CheckKind::projection: return check_cartesian_projection(g, h, options);
    case CheckKind::lex_projection: return check_lexico_projection(g, h, options);
    case CheckKind::rectangle: return check_cartesian_rectangle(g, h, options);
    default: break;
  }
  throw Error("unhandled check");
}

void run_sweep(const SweepConfig& config, unsigned workers,
               const std::function<void(const BoundReport&)>& on_row) {
  const std::vector<SweepInstance> instances = sweep_instances(config);
  if (workers <= 1 || instances.size() <= 1) {
    for (const auto& in : instances) on_row(run_instance(config, in, 1));
    return;
  }

  std::vector<std::optional<BoundReport>> results(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable ready;
  std::vector<bool> done(instances.size(), false);

  {
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, instances.size()));
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; !stop && (i = next++) < instances.size();) {
          std::optional<BoundReport> r;
          std::exception_ptr err;
          try {
            r = run_instance(config, instances[i], 1);
          } catch (...) {
            err = std::current_exception();
          }
          {
            std::lock_guard lock(mu);
            results[i] = std::move(r);
            errors[i] = err;
            done[i] = true;
          }
          ready.notify_all();
        }
      });
    }

    // Emit rows in instance order as they complete.
    std::exception_ptr first_error;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i]; });
      if (errors[i]) {
        first_error = errors[i];
        stop = true;
        break;
      }
      BoundReport row = std::move(*results[i]);
      results[i].reset();
      lock.unlock();
      try {
        on_row(row);
      } catch (...) {
        first_error = std::current_exception();
        stop = true;
        break;
      }
    }
    pool.clear();
    if (first_error) std::rethrow_exception(first_error);
  }
}

}  // namespace owc

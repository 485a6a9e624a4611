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

#include "owc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "owc/domination.hpp"
#include "owc/error.hpp"
#include "owc/families.hpp"
#include "owc/products.hpp"

namespace owc {
namespace {

using Clock = std::chrono::steady_clock;

SearchOptions solver_options(const HarnessOptions& o) {
  return SearchOptions{.order_cap = o.order_cap, .workers = o.workers};
}

// Factor-level searches are tiny; never let the product cap block them.
SearchOptions factor_options(const HarnessOptions& o, const Graph& g) {
  return SearchOptions{.order_cap = std::max(o.order_cap, g.order()), .workers = 1};
}

std::string display_name(const Graph& g) { return g.name().empty() ? "G" : g.name(); }

class ReportBuilder {
 public:
  ReportBuilder(std::string check, ProductKind kind, const Graph& g, const Graph& h,
                const HarnessOptions& options)
      : options_(options), start_(Clock::now()) {
    report_.check = std::move(check);
    report_.kind = std::string(product_kind_name(kind));
    report_.g_name = display_name(g);
    report_.g_order = g.order();
    report_.h_name = display_name(h);
    report_.h_order = h.order();
  }

  BoundReport& report() { return report_; }

  bool too_large(std::size_t order, std::size_t cap, const char* which) {
    if (order <= cap) return false;
    report_.skipped = true;
    report_.notes.push_back(std::string(which) + " " + std::to_string(order) + " exceeds cap " +
                            std::to_string(cap));
    return true;
  }

  void record_product(const ProductGraph& p) {
    report_.product_edges = p.graph().edge_count();
    report_.expected_edges = expected_edge_count(p.kind(), p.left(), p.right());
    if (report_.product_edges != report_.expected_edges) {
      report_.notes.push_back("edge count differs from closed form");
    }
  }

  // Builds a construction and tests it against the product predicate. A
  // hypothesis failure is recorded as a failed construction.
  void construct(const ProductGraph& p, const DistanceMatrix& dist, Recipe recipe,
                 const std::function<ConstructionSet()>& build) {
    ConstructionOutcome out;
    out.recipe = std::string(recipe_name(recipe));
    try {
      const ConstructionSet c = build();
      out.size = c.set.count();
      out.expected_size = c.expected_size;
      out.witness = format_pairs(p, c.set);
      out.ok = is_owc_dominating(p.graph(), dist, c.set);
      if (!out.ok) out.note = "not outer-weakly convex dominating in the product";
      if (out.size != out.expected_size) {
        out.note += (out.note.empty() ? "" : "; ") + std::string("size differs from closed form");
      }
    } catch (const HypothesisError& e) {
      out.ok = false;
      out.note = std::string("hypothesis unmet: ") + e.what();
    }
    report_.constructions.push_back(std::move(out));
  }

  BoundReport finish() {
    report_.verdict = decide_verdict(report_);
    if (options_.timing) {
      report_.elapsed_ms =
          std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }
    return std::move(report_);
  }

 private:
  const HarnessOptions& options_;
  Clock::time_point start_;
  BoundReport report_;
};

// Solves the product exactly and stores value and witness.
void solve_product(BoundReport& r, const ProductGraph& p, const HarnessOptions& options) {
  const OwcResult best = owc_domination_number(p.graph(), solver_options(options));
  r.exact = best.value;
  r.witness = format_pairs(p, best.witness);
}

std::string owc_failure_reason(const Graph& g, const VertexSet& s) {
  const bool dom = is_dominating(g, s);
  const bool wc = is_weakly_convex(g, distance_matrix(g), s.complement());
  return std::string("dominating=") + (dom ? "yes" : "no") +
         ", complement weakly convex=" + (wc ? "yes" : "no");
}

// Tests the projections of every minimum OWC set of the product (plus a
// seeded sample of larger passing sets) against the factor predicate.
BoundReport projection_check(const char* check, ProductKind kind, bool both_sides,
                             const Graph& g, const Graph& h, const HarnessOptions& options) {
  ReportBuilder b(check, kind, g, h, options);
  BoundReport& r = b.report();
  const std::size_t cap = std::min(options.projection_cap, options.order_cap);
  if (b.too_large(g.order() * h.order(), cap, "product order")) return b.finish();

  const ProductGraph p = make_product(kind, g, h);
  b.record_product(p);
  const DistanceMatrix dist = distance_matrix(p.graph());
  const std::vector<VertexSet> minimum = enumerate_min_owc_sets(p.graph(), solver_options(options));
  r.exact = minimum.front().count();
  r.witness = format_pairs(p, minimum.front());

  std::size_t tested = 0;
  auto test = [&](const VertexSet& s, const char* origin) {
    ++tested;
    const VertexSet left = project_left(p, s);
    if (!is_owc_dominating(g, left)) {
      r.counterexamples.push_back(std::string(origin) + " S=" + format_pairs(p, s) + " pi_G(S)=" +
                                  left.to_string() + " fails in " + display_name(g) + " (" +
                                  owc_failure_reason(g, left) + ")");
    }
    if (!both_sides) return;
    const VertexSet right = project_right(p, s);
    if (!is_owc_dominating(h, right)) {
      r.counterexamples.push_back(std::string(origin) + " S=" + format_pairs(p, s) + " pi_H(S)=" +
                                  right.to_string() + " fails in " + display_name(h) + " (" +
                                  owc_failure_reason(h, right) + ")");
    }
  };
  for (const VertexSet& s : minimum) test(s, "minimum");

  std::size_t sampled = 0;
  if (options.sample_size > 0) {
    std::mt19937_64 rng(options.seed);
    const std::size_t n = p.graph().order();
    const std::size_t min_size = minimum.front().count();
    std::vector<Vertex> ids(n);
    for (Vertex v = 0; v < n; ++v) ids[v] = v;
    for (std::size_t draw = 0; draw < options.sample_size && min_size < n; ++draw) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(min_size + 1, n)(rng);
      std::shuffle(ids.begin(), ids.end(), rng);
      VertexSet s(n);
      for (std::size_t i = 0; i < k; ++i) s.insert(ids[i]);
      if (is_owc_dominating(p.graph(), dist, s)) {
        ++sampled;
        test(s, "sampled");
      }
    }
  }
  r.notes.push_back("coverage: " + std::to_string(minimum.size()) + " minimum sets, " +
                    std::to_string(sampled) + " sampled passing sets of " +
                    std::to_string(options.sample_size) + " draws");
  (void)tested;
  return b.finish();
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail_lower: return "FAIL_LOWER";
    case Verdict::fail_upper: return "FAIL_UPPER";
    case Verdict::fail_construction: return "FAIL_CONSTRUCTION";
    case Verdict::fail_claim: return "FAIL_CLAIM";
    case Verdict::skipped_too_large: return "SKIPPED_TOO_LARGE";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::pass, Verdict::fail_lower, Verdict::fail_upper,
                    Verdict::fail_construction, Verdict::fail_claim, Verdict::skipped_too_large}) {
    if (verdict_name(v) == name) return v;
  }
  return std::nullopt;
}

Verdict decide_verdict(const BoundReport& r) {
  if (r.skipped) return Verdict::skipped_too_large;
  if (r.exact && r.lower && *r.exact < *r.lower) return Verdict::fail_lower;
  if (r.exact && r.upper && *r.exact > *r.upper) return Verdict::fail_upper;
  for (const auto& c : r.constructions)
    if (!c.ok) return Verdict::fail_construction;
  if (!r.counterexamples.empty()) return Verdict::fail_claim;
  return Verdict::pass;
}

BoundReport check_cartesian(const Graph& g, const Graph& h, const HarnessOptions& options) {
  ReportBuilder b("cartesian", ProductKind::cartesian, g, h, options);
  BoundReport& r = b.report();
  if (b.too_large(g.order() * h.order(), options.order_cap, "product order")) return b.finish();

  const ProductGraph p = cartesian(g, h);
  b.record_product(p);
  const std::size_t m = g.order(), n = h.order();
  const OwcResult gs = owc_domination_number(g, factor_options(options, g));
  const OwcResult hs = owc_domination_number(h, factor_options(options, h));
  r.lower = std::min(m, n);
  r.upper = std::min(gs.value * n, hs.value * m);
  solve_product(r, p, options);

  const DistanceMatrix dist = distance_matrix(p.graph());
  b.construct(p, dist, Recipe::cartesian_right_cover,
              [&] { return cartesian_right_cover(p, hs.witness); });
  b.construct(p, dist, Recipe::cartesian_left_cover,
              [&] { return cartesian_left_cover(p, gs.witness); });

  // K_n [] H with |V(H)| >= n >= 2 is claimed to have value exactly n; the
  // stated hypothesis on H is always satisfied.
  const Graph* kn = is_complete(g) ? &g : is_complete(h) ? &h : nullptr;
  if (kn != nullptr) {
    const Graph& other = kn == &g ? h : g;
    if (other.order() >= kn->order()) {
      r.notes.push_back("complete factor: predicted " + std::to_string(kn->order()) + ", " +
                        (*r.exact == kn->order() ? "holds" : "fails") +
                        " (hypothesis gamma_wcon(H) >= ceil(n/m) = 1 is vacuous)");
    }
  }
  return b.finish();
}

BoundReport check_cartesian_projection(const Graph& g, const Graph& h,
                                       const HarnessOptions& options) {
  return projection_check("projection", ProductKind::cartesian, true, g, h, options);
}

BoundReport check_lexico_projection(const Graph& g, const Graph& h,
                                    const HarnessOptions& options) {
  return projection_check("lex-projection", ProductKind::lexicographic, false, g, h, options);
}

BoundReport check_cartesian_rectangle(const Graph& g, const Graph& h,
                                      const HarnessOptions& options) {
  ReportBuilder b("rectangle", ProductKind::cartesian, g, h, options);
  BoundReport& r = b.report();
  const std::size_t cap = std::min<std::size_t>(options.rectangle_factor_cap, 20);
  if (b.too_large(std::max(g.order(), h.order()), cap, "factor order")) return b.finish();

  const ProductGraph p = cartesian(g, h);
  b.record_product(p);
  const DistanceMatrix dist = distance_matrix(p.graph());
  const std::size_t m = g.order(), n = h.order();
  std::size_t tested = 0;
  // Every pair of proper subsets, the empty set included.
  for (std::uint64_t a = 0; a + 1 < (std::uint64_t{1} << m); ++a) {
    const VertexSet s1 = VertexSet::from_word(m, a);
    for (std::uint64_t c = 0; c + 1 < (std::uint64_t{1} << n); ++c) {
      const VertexSet s2 = VertexSet::from_word(n, c);
      const VertexSet rect = product_set(p, s1, s2);
      ++tested;
      if (is_owc_dominating(p.graph(), dist, rect)) {
        r.counterexamples.push_back("S1=" + s1.to_string() + " S2=" + s2.to_string() +
                                    " S1xS2=" + format_pairs(p, rect) +
                                    " is outer-weakly convex dominating");
      }
    }
  }
  r.notes.push_back("coverage: " + std::to_string(tested) + " proper rectangles");
  return b.finish();
}

BoundReport check_strong(const Graph& g, const Graph& h, const HarnessOptions& options) {
  ReportBuilder b("strong", ProductKind::strong, g, h, options);
  BoundReport& r = b.report();
  if (b.too_large(g.order() * h.order(), options.order_cap, "product order")) return b.finish();

  const ProductGraph p = strong(g, h);
  b.record_product(p);
  const std::size_t m = g.order(), n = h.order();
  const OwcResult gs = owc_domination_number(g, factor_options(options, g));
  const OwcResult hs = owc_domination_number(h, factor_options(options, h));
  const std::size_t gamma_g = domination_number(g, factor_options(options, g)).value;
  const std::size_t gamma_h = domination_number(h, factor_options(options, h)).value;
  r.lower = std::max(gamma_g, gamma_h);
  r.upper = std::min(gs.value * n, hs.value * m);
  solve_product(r, p, options);

  const DistanceMatrix dist = distance_matrix(p.graph());
  b.construct(p, dist, Recipe::strong_right_cover, [&] { return strong_right_cover(p, hs.witness); });
  b.construct(p, dist, Recipe::strong_left_cover, [&] { return strong_left_cover(p, gs.witness); });
  return b.finish();
}

BoundReport check_strong_kn(const Graph& g, std::size_t n, const HarnessOptions& options) {
  if (n < 2) throw GraphError("strong-kn needs n >= 2");
  const Graph kn = complete_graph(n);
  ReportBuilder b("strong-kn", ProductKind::strong, g, kn, options);
  BoundReport& r = b.report();
  if (b.too_large(g.order() * n, options.order_cap, "product order")) return b.finish();

  const ProductGraph p = strong(g, kn);
  b.record_product(p);
  const OwcResult gs = owc_domination_number(g, factor_options(options, g));
  // Claimed equality: both bounds are the factor's value.
  r.lower = gs.value;
  r.upper = gs.value;
  solve_product(r, p, options);

  const DistanceMatrix dist = distance_matrix(p.graph());
  const Vertex h = choose_vertex(kn, options.choices);
  b.construct(p, dist, Recipe::strong_kn_slice,
              [&] { return strong_kn_slice(p, gs.witness, h, factor_options(options, g)); });
  r.notes.push_back("gamma_wcon(G)=" + std::to_string(gs.value));
  return b.finish();
}

BoundReport check_strong_kmn(const Graph& g, std::size_t m, std::size_t n,
                             const HarnessOptions& options) {
  if (m < 2 || n < 2) throw GraphError("strong-kmn needs m, n >= 2");
  const Graph kmn = complete_bipartite_graph(m, n);
  ReportBuilder b("strong-kmn", ProductKind::strong, g, kmn, options);
  BoundReport& r = b.report();
  if (b.too_large(g.order() * kmn.order(), options.order_cap, "product order")) return b.finish();

  const ProductGraph p = strong(g, kmn);
  b.record_product(p);
  const SearchOptions fo = factor_options(options, g);
  const OwcResult dom = domination_number(g, fo);
  const std::size_t gamma_h = domination_number(kmn, factor_options(options, kmn)).value;
  const std::size_t wcon_g = owc_domination_number(g, fo).value;
  // The strong-product lower bound; for complete G it equals the claimed
  // sharp value 2.
  r.lower = std::max(dom.value, gamma_h);
  r.upper = 2 * dom.value;
  solve_product(r, p, options);

  const DistanceMatrix dist = distance_matrix(p.graph());
  const auto [h, h_prime] = choose_edge(kmn, options.choices);
  b.construct(p, dist, Recipe::strong_kmn_pair,
              [&] { return strong_kmn_pair(p, dom.witness, h, h_prime, fo); });
  r.notes.push_back("bound 2*gamma_wcon(G)=" + std::to_string(2 * wcon_g) + " " +
                    (*r.exact <= 2 * wcon_g ? "holds" : "fails"));
  if (is_complete(g)) {
    r.notes.push_back(std::string("sharpness (complete G): exact ") +
                      (*r.exact == 2 ? "= 2" : "!= 2"));
  }
  return b.finish();
}

BoundReport check_lexicographic(const Graph& g, const Graph& h, const HarnessOptions& options) {
  ReportBuilder b("lex", ProductKind::lexicographic, g, h, options);
  BoundReport& r = b.report();
  if (b.too_large(g.order() * h.order(), options.order_cap, "product order")) return b.finish();

  const ProductGraph p = lexicographic(g, h);
  b.record_product(p);
  const SearchOptions fo = factor_options(options, g);
  const OwcResult gs = owc_domination_number(g, fo);
  const ScriptP sp = *compute_script_p(g, ScriptPReading::weakly_convex, fo);
  r.lower = gs.value;
  r.upper = gs.value + sp.value;
  solve_product(r, p, options);

  const DistanceMatrix dist = distance_matrix(p.graph());
  const Vertex anchor = choose_vertex(h, options.choices);
  b.construct(p, dist, Recipe::lexico_anchor,
              [&] { return lexico_anchor(p, sp.realizer, anchor, options.choices, fo); });

  r.notes.push_back("script_p=" + std::to_string(sp.value));
  if (sp.value == 0) {
    r.notes.push_back(std::string("equality when script_p=0: ") +
                      (*r.exact == gs.value ? "holds" : "fails"));
  }
  const auto convex = compute_script_p(g, ScriptPReading::convex, fo);
  if (!convex) {
    r.notes.push_back("script_p (outer-convex reading) undefined: no such set of size " +
                      std::to_string(gs.value));
  } else if (convex->value != sp.value) {
    r.notes.push_back("script_p (outer-convex reading)=" + std::to_string(convex->value));
  }
  return b.finish();
}

}  // namespace owc

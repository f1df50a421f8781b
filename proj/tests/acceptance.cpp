// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All sizes and limits are pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eso/classify.hpp"
#include "eso/csp.hpp"
#include "eso/enumerate.hpp"
#include "eso/formula.hpp"
#include "eso/mcheck.hpp"
#include "eso/pattern.hpp"
#include "eso/reductions.hpp"
#include "support/oracles.hpp"

using namespace eso;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kClassifyLimitSeconds = 1.0;
constexpr double kEquivalenceLimitSeconds = 300.0;
constexpr int kMinClassifyPins = 24;
constexpr int kTwoColorExhaustiveN = 5;
constexpr int kTwoColorRandom = 10000;
constexpr int kTwoColorRandomMaxN = 9;
constexpr int kCspRandom = 10000;
constexpr int kCspRandomMaxN = 12;
constexpr int kCompileCspMatrices = 200;
constexpr int kCompilePatternMatrices = 100;
constexpr int kCompileMaxN = 5;
constexpr int kUnreachMaxN = 4;
constexpr int kUnreachSoOracleMaxN = 3;
constexpr int kPhiMaxN = 6;
constexpr int kPhiA2MaxN = 4;
constexpr int kEvenCycleMaxN = 7;
constexpr int kMonoMatrices = 200;
constexpr int kMonoMaxN = 5;
constexpr int kDualityInstances = 10000;

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t bad = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (bad++ == 0) first = what();
  }
  std::string detail() const {
    std::string s = std::to_string(cases) + " cases, " + std::to_string(bad) + " disagreements";
    if (bad) s += "; first: " + first;
    return s;
  }
};

std::string edges_of(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " {";
  for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s + " }";
}

struct Result {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1 -------------------------------------------------------------------------

struct Pin {
  const char* prefix;
  GraphMode mode;
  ComplexityClass klass;
};

std::vector<Pin> classification_pins() {
  using C = ComplexityClass;
  std::vector<Pin> pins = {
      // basic graphs: lower-bound entries
      {"E1E1ae", GraphMode::Basic, C::L},
      {"E2ae", GraphMode::Basic, C::L},
      {"E1aa", GraphMode::Basic, C::L},
      {"E1eaa", GraphMode::Basic, C::NL},
      {"E1aaa", GraphMode::Basic, C::NP},
      {"E1E1aa", GraphMode::Basic, C::NP},
      {"E2eaa", GraphMode::Basic, C::NP},
      {"E1eae", GraphMode::Basic, C::NP},
      {"E1aee", GraphMode::Basic, C::NP},
      {"E1aea", GraphMode::Basic, C::NP},
      {"E1aae", GraphMode::Basic, C::NP},
      // basic graphs: instances of upper-bound entries
      {"aeaeae", GraphMode::Basic, C::FO},
      {"E3E2E1eeea", GraphMode::Basic, C::FO},
      {"E1ae", GraphMode::Basic, C::FO},
      {"E3E3E2ae", GraphMode::Basic, C::L},
      {"E3aa", GraphMode::Basic, C::L},
      {"E1eeeaa", GraphMode::Basic, C::NL},
      {"E3E3aeaeae", GraphMode::Basic, C::NP},
  };
  for (GraphMode mode : {GraphMode::Undirected, GraphMode::Directed}) {
    std::vector<Pin> general = {
        {"E1aa", mode, C::NL},        {"E1aaa", mode, C::NP},      {"E1E1aa", mode, C::NP},
        {"E2eaa", mode, C::NP},       {"E1ae", mode, C::NP},       {"aeaeae", mode, C::FO},
        {"E3E2E1eeea", mode, C::FO},  {"E1eeeaa", mode, C::NL},    {"E3aa", mode, C::NL},
        {"E3E3aeaeae", mode, C::NP},
    };
    pins.insert(pins.end(), general.begin(), general.end());
  }
  return pins;
}

Result criterion_classify() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Pin> pins = classification_pins();
  Tally tally;
  for (const Pin& p : pins) {
    ComplexityClass got = classify(parse_prefix(p.prefix), p.mode).klass;
    tally.check(got == p.klass, [&] {
      return std::string(p.prefix) + " in " + to_string(p.mode) + " gave " + to_string(got);
    });
  }
  double secs = seconds_since(t0);
  bool pass = tally.bad == 0 && static_cast<int>(pins.size()) >= kMinClassifyPins && secs < kClassifyLimitSeconds;
  return {pass, tally.detail()};
}

// 2 -------------------------------------------------------------------------

Result criterion_two_color() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> size(1, kTwoColorRandomMaxN);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::vector<Graph> graphs;
  for (int n = 1; n <= kTwoColorExhaustiveN; ++n) for_each_basic_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  for (int i = 0; i < kTwoColorRandom; ++i) graphs.push_back(random_basic_graph(size(rng), density(rng), rng));
  Tally tally;
  for (unsigned code = 0; code < 256; ++code) {
    PatternGraph p = PatternGraph::two_color(code);
    for (const Graph& g : graphs) {
      TwoColorDecision d = fo_decide_two_color(g, p);
      bool exact = saturate_exact(g, p).has_value();
      bool ok = d.saturable == exact && (!d.certificate || verify_certificate(g, p, *d.certificate));
      tally.check(ok, [&] { return "pattern " + std::to_string(code) + " " + edges_of(g) + " via " + d.branch; });
    }
  }
  return {tally.bad == 0 && seconds_since(t0) < kEquivalenceLimitSeconds, tally.detail()};
}

// 3 -------------------------------------------------------------------------

Result criterion_sample_pattern() {
  enum { a, b, c, d, e, f };
  constexpr int black = 0;
  constexpr int white = 1;
  Graph g = graph_from_edges(6, {{d, a}, {a, b}, {b, f}, {f, c}, {c, b}});
  PatternGraph p({"black", "white"});
  p.add_plus(black, black);
  p.add_plus(white, black);
  p.add_minus(black, white);

  SaturationCertificate reference;
  reference.coloring = {black, black, black, white, black, black};
  reference.witness = {b, c, f, a, d, b};

  auto found = saturate_exact(g, p);
  bool found_ok = found && verify_certificate(g, p, *found);
  bool reference_ok = verify_certificate(g, p, reference);
  return {found_ok && reference_ok, std::string("certificate found: ") + (found_ok ? "yes" : "no") +
                                        ", reference colouring accepted: " + (reference_ok ? "yes" : "no")};
}

// 4 -------------------------------------------------------------------------

Result criterion_csp() {
  auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  auto run = [&](const CdCsp& p) {
    auto fast = solve_csp(p);
    auto slow = brute_csp(p);
    bool ok = fast.has_value() == slow.has_value() && (!fast || verify_solution(p, *fast)) &&
              (!slow || verify_solution(p, *slow)) && slow.has_value() == oracle::csp_solvable(p.c_set, p.d_set, p.b);
    tally.check(ok, [&] {
      return "C=" + card_set_to_string(p.c_set) + " D=" + card_set_to_string(p.d_set) + " " + edges_of(p.b);
    });
  };
  for (int n : {4, 5}) {
    for (CardSet c = 0; c < 8; ++c) {
      for (CardSet d = 0; d < 8; ++d) for_each_basic_graph(n, [&](const Graph& g) { run({c, d, g}); });
    }
  }
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_int_distribution<int> size(2, kCspRandomMaxN);
  std::uniform_int_distribution<int> set(0, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < kCspRandom; ++i) {
    auto c = static_cast<CardSet>(set(rng));
    auto d = static_cast<CardSet>(set(rng));
    int n = size(rng);
    run({c, d, random_basic_graph(n, density(rng), rng)});
  }
  return {tally.bad == 0 && seconds_since(t0) < kEquivalenceLimitSeconds, tally.detail()};
}

// 5 -------------------------------------------------------------------------

Result criterion_compilation() {
  std::mt19937_64 rng(kSeed + 5);
  Tally csp;
  for (int i = 0; i < kCompileCspMatrices; ++i) {
    Formula f = random_e1aa_formula(rng);
    CspSets sets = compile_csp(f);
    for (int n = 2; n <= kCompileMaxN; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        bool ok = models(f, g).has_value() == solve_csp({sets.c_set, sets.d_set, g}).has_value();
        csp.check(ok, [&] { return to_string(f) + " on " + edges_of(g); });
      });
    }
  }
  Tally pattern;
  for (int i = 0; i < kCompilePatternMatrices; ++i) {
    bool guarded = i % 2 == 1;
    int k = 1 + (i / 2) % 2;
    Formula f = random_e1k_ae_formula(k, rng, guarded);
    PatternGraph p = compile_pattern(f);
    for (int n = guarded ? 1 : 2; n <= kCompileMaxN; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        bool ok = models(f, g).has_value() == saturate_exact(g, p).has_value();
        pattern.check(ok, [&] { return to_string(f) + " on " + edges_of(g); });
      });
    }
  }
  return {csp.bad == 0 && pattern.bad == 0,
          "E1aa: " + std::to_string(kCompileCspMatrices) + " matrices, " + csp.detail() + "; E1^k ae: " +
              std::to_string(kCompilePatternMatrices) + " matrices, " + pattern.detail()};
}

// 6 -------------------------------------------------------------------------

Result criterion_unreach() {
  Formula phi = build_unreach_formulas().phi_shadow;
  Tally tally;
  Tally so;
  for (int n = 2; n <= kUnreachMaxN; ++n) {
    for (std::uint64_t code = 0; code < directed_graph_count(n); ++code) {
      Graph g = directed_graph_from_code(n, code);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (s == t) continue;
          UnreachInstance inst{g, s, t, {}};
          GadgetOutput out = reduce_unreach_shadow(inst);
          bool unreachable = !oracle::reaches(g, s, t);
          bool found = solve_mono_forall2(phi, out.graph).has_value();
          tally.check(found == unreachable, [&] { return edges_of(g) + " s=" + std::to_string(s) + " t=" + std::to_string(t); });
          if (n <= kUnreachSoOracleMaxN) {
            so.check(oracle::models(phi, out.graph) == unreachable,
                     [&] { return edges_of(g) + " s=" + std::to_string(s) + " t=" + std::to_string(t); });
          }
        }
      }
    }
  }
  UnreachInstance sample = sample_unreach_instance();
  bool sample_absent = !solve_mono_forall2(phi, reduce_unreach_shadow(sample).graph).has_value() &&
                       !models(phi, reduce_unreach_shadow(sample).graph).has_value();
  sample.g.remove_edge(2, sample.t);  // b = 2
  bool cut_found = solve_mono_forall2(phi, reduce_unreach_shadow(sample).graph).has_value();
  return {tally.bad == 0 && so.bad == 0 && sample_absent && cut_found,
          "gadget vs reachability: " + tally.detail() + "; exhaustive SO search (n<=" +
              std::to_string(kUnreachSoOracleMaxN) + "): " + so.detail() + "; sample " +
              (sample_absent ? "absent" : "FOUND") + ", (b,t) cut " + (cut_found ? "found" : "ABSENT")};
}

// 7 -------------------------------------------------------------------------

Result criterion_phi_m() {
  Tally tally;
  for (int m : {3, 4}) {
    Formula phi = build_phi_m(m);
    for (int n = 1; n <= kPhiMaxN; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        tally.check(models(phi, g).has_value() == oracle::cycle_mod(g, m, true),
                    [&] { return "m=" + std::to_string(m) + " " + edges_of(g); });
      });
    }
  }
  Tally a2;
  Formula phi_a2 = build_phi_A2();
  for (int n = 1; n <= kPhiA2MaxN; ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      a2.check(models(phi_a2, g).has_value() == oracle::cycle_mod(g, 2, true), [&] { return edges_of(g); });
    });
  }
  return {tally.bad == 0 && a2.bad == 0, "m in {3,4}: " + tally.detail() + "; A2: " + a2.detail()};
}

// 8 -------------------------------------------------------------------------

Result criterion_even_cycle() {
  Tally tally;
  for (int n = 1; n <= kEvenCycleMaxN; ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      tally.check(decide_even_cycle(g) == oracle::even_cycle(g), [&] { return edges_of(g); });
    });
  }
  return {tally.bad == 0, tally.detail()};
}

// 9 -------------------------------------------------------------------------

Result criterion_mono_forall2() {
  std::mt19937_64 rng(kSeed + 9);
  Tally tally;
  for (int i = 0; i < kMonoMatrices; ++i) {
    Formula f = random_e1aa_formula(rng);
    for (int n = 1; n <= kMonoMaxN; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        auto fast = solve_mono_forall2(f, g);
        bool ok = fast.has_value() == models(f, g).has_value() &&
                  (!fast || satisfies(f, g, monadic_assignment("M", *fast)));
        tally.check(ok, [&] { return to_string(f) + " on " + edges_of(g); });
      });
    }
  }
  return {tally.bad == 0, std::to_string(kMonoMatrices) + " matrices, " + tally.detail()};
}

// 10 ------------------------------------------------------------------------

PatternGraph random_pattern(int colours, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < colours; ++i) names.push_back("c" + std::to_string(i));
  PatternGraph p(names);
  std::bernoulli_distribution coin(0.3);
  for (int x = 0; x < colours; ++x) {
    for (int y = 0; y < colours; ++y) {
      if (coin(rng)) p.add_plus(x, y);
      if (coin(rng)) p.add_minus(x, y);
    }
  }
  return p;
}

Result criterion_duality() {
  std::mt19937_64 rng(kSeed + 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  Tally sat;
  for (int i = 0; i < kDualityInstances; ++i) {
    PatternGraph p = random_pattern(2 + i % 2, rng);
    Graph g = random_basic_graph(1 + static_cast<int>(rng() % 8), density(rng), rng);
    auto direct = saturate_exact(g, p);
    auto dual = saturate_exact(complement(g), swap_arcs(p));
    bool ok = direct.has_value() == dual.has_value() &&
              (!direct || verify_certificate(complement(g), swap_arcs(p), *direct));
    sat.check(ok, [&] { return edges_of(g); });
  }
  Tally csp;
  for (int i = 0; i < kDualityInstances; ++i) {
    auto c = static_cast<CardSet>(rng() % 8);
    auto d = static_cast<CardSet>(rng() % 8);
    Graph g = random_basic_graph(2 + static_cast<int>(rng() % (kCspRandomMaxN - 1)), density(rng), rng);
    CdCsp p{c, d, g};
    CdCsp flipped{flip_card_set(c), flip_card_set(d), g};
    auto x = solve_csp(p);
    bool ok = x.has_value() == solve_csp(flipped).has_value();
    if (x) {
      CspSolution rest;
      for (int v = 0; v < g.n(); ++v) {
        if (std::find(x->x_set.begin(), x->x_set.end(), v) == x->x_set.end()) rest.x_set.push_back(v);
      }
      ok = ok && verify_solution(flipped, rest);
    }
    csp.check(ok, [&] { return "C=" + card_set_to_string(c) + " D=" + card_set_to_string(d) + " " + edges_of(g); });
  }
  return {sat.bad == 0 && csp.bad == 0, "saturation: " + sat.detail() + "; CSP: " + csp.detail()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {"classification table", criterion_classify},
      {"two-colour decider vs exact saturation", criterion_two_color},
      {"sample saturation certificate", criterion_sample_pattern},
      {"CSP solver vs brute force", criterion_csp},
      {"compilation soundness", criterion_compilation},
      {"unreachability reduction", criterion_unreach},
      {"cycle-mod-m formulas", criterion_phi_m},
      {"even cycle decider", criterion_even_cycle},
      {"implication-graph solver vs model checker", criterion_mono_forall2},
      {"duality invariants", criterion_duality},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::printf("Criterion %d: %s  %s (%.1fs; %s)\n", index, r.pass ? "PASS" : "FAIL", c.name, seconds_since(t0),
                r.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

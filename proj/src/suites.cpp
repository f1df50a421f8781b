#include "eso/suites.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "eso/csp.hpp"
#include "eso/enumerate.hpp"
#include "eso/error.hpp"
#include "eso/mcheck.hpp"
#include "eso/pattern.hpp"
#include "eso/reductions.hpp"

namespace eso {

namespace {

constexpr std::size_t kMaxNotes = 5;

class Tally {
 public:
  explicit Tally(std::string suite) { report_.suite = std::move(suite); }

  void check(bool agree, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (agree) return;
    ++report_.disagreements;
    if (report_.notes.size() < kMaxNotes) report_.notes.push_back(describe());
  }

  SuiteReport& report() { return report_; }

 private:
  SuiteReport report_;
};

std::string edges_of(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  out << "]";
  return out.str();
}

std::string agreement_summary(const SuiteReport& r) {
  return std::to_string(r.cases - r.disagreements) + "/" + std::to_string(r.cases) + " cases agree";
}

int size_or(int value, int fallback) { return value > 0 ? value : fallback; }
int count_or(int value, int fallback) { return value >= 0 ? value : fallback; }

SuiteReport two_color_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 5);
  int random = count_or(o.random, 100);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size(1, 9);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n) for_each_basic_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  for (int i = 0; i < random; ++i) graphs.push_back(random_basic_graph(size(rng), density(rng), rng));

  Tally tally("two-color");
  std::uint64_t before = two_color_fallback_count();
  int patterns_agree = 0;
  for (unsigned code = 0; code < 256; ++code) {
    PatternGraph p = PatternGraph::two_color(code);
    std::uint64_t bad = tally.report().disagreements;
    for (const Graph& g : graphs) {
      TwoColorDecision d = fo_decide_two_color(g, p);
      bool exact = saturate_exact(g, p).has_value();
      tally.check(d.saturable == exact, [&] {
        return "pattern " + std::to_string(code) + " on " + edges_of(g) + ": decider " +
               (d.saturable ? "yes" : "no") + " via " + d.branch;
      });
    }
    if (tally.report().disagreements == bad) ++patterns_agree;
  }
  auto& r = tally.report();
  r.summary = std::to_string(patterns_agree) + "/256 patterns agree";
  r.notes.push_back("graphs per pattern: " + std::to_string(graphs.size()));
  r.notes.push_back("fallback uses: " + std::to_string(two_color_fallback_count() - before));
  return r;
}

SuiteReport csp_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 5);
  int random = count_or(o.random, 1000);
  Tally tally("csp");
  auto run = [&](const CdCsp& p) {
    auto fast = solve_csp(p);
    auto slow = brute_csp(p);
    bool agree = fast.has_value() == slow.has_value() && (!fast || verify_solution(p, *fast));
    tally.check(agree, [&] {
      return "C=" + card_set_to_string(p.c_set) + " D=" + card_set_to_string(p.d_set) + " " + edges_of(p.b);
    });
  };
  for (int n = 2; n <= max_n; ++n) {
    for (CardSet c = 0; c < 8; ++c) {
      for (CardSet d = 0; d < 8; ++d) {
        for_each_basic_graph(n, [&](const Graph& g) { run(CdCsp{c, d, g}); });
      }
    }
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size(2, 12);
  std::uniform_int_distribution<int> set(0, 7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < random; ++i) {
    auto c = static_cast<CardSet>(set(rng));
    auto d = static_cast<CardSet>(set(rng));
    int n = size(rng);
    run(CdCsp{c, d, random_basic_graph(n, density(rng), rng)});
  }
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

SuiteReport compile_csp_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 5);
  int random = count_or(o.random, 200);
  std::mt19937_64 rng(o.seed);
  std::vector<Graph> graphs;
  for (int n = 2; n <= max_n; ++n) for_each_basic_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  Tally tally("compile-csp");
  for (int i = 0; i < random; ++i) {
    Formula f = random_e1aa_formula(rng);
    CspSets sets = compile_csp(f);
    for (const Graph& g : graphs) {
      bool direct = models(f, g).has_value();
      bool via_csp = solve_csp(CdCsp{sets.c_set, sets.d_set, g}).has_value();
      tally.check(direct == via_csp, [&] { return to_string(f) + " on " + edges_of(g); });
    }
  }
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

SuiteReport compile_pattern_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 5);
  int random = count_or(o.random, 100);
  std::mt19937_64 rng(o.seed);
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n) for_each_basic_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  Tally tally("compile-pattern");
  for (int i = 0; i < random; ++i) {
    int k = 1 + i % 2;
    bool guarded = (i / 2) % 2 == 1;
    Formula f = random_e1k_ae_formula(k, rng, guarded);
    PatternGraph p = compile_pattern(f);
    for (const Graph& g : graphs) {
      // Unguarded matrices may be satisfied by y = x, which no witness map can express on K1.
      if (g.n() == 1 && !guarded) continue;
      bool direct = models(f, g).has_value();
      bool via_pattern = saturate_exact(g, p).has_value();
      tally.check(direct == via_pattern, [&] { return to_string(f) + " on " + edges_of(g); });
    }
  }
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

SuiteReport mono_forall2_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 5);
  int random = count_or(o.random, 200);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> big(6, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n) for_each_basic_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  Tally tally("mono-forall2");
  auto run = [&](const Formula& f, const Graph& g) {
    auto fast = solve_mono_forall2(f, g);
    bool slow = models(f, g).has_value();
    bool agree = fast.has_value() == slow && (!fast || satisfies(f, g, monadic_assignment("M", *fast)));
    tally.check(agree, [&] { return to_string(f) + " on " + edges_of(g); });
  };
  for (int i = 0; i < random; ++i) {
    Formula f = random_e1aa_formula(rng);
    for (const Graph& g : graphs) run(f, g);
    for (int j = 0; j < 3; ++j) run(f, random_basic_graph(big(rng), density(rng), rng));
  }
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

SuiteReport unreach_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 4);
  Tally tally("unreach");
  for (int n = 2; n <= max_n; ++n) {
    std::uint64_t total = directed_graph_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
      Graph g = directed_graph_from_code(n, code);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          if (s == t) continue;
          UnreachInstance inst{g, s, t, {}};
          bool truth = !reachable(g, s, t);
          tally.check(decide_unreach_shadow(inst) == truth, [&] {
            return "shadow: directed code " + std::to_string(code) + " n=" + std::to_string(n) +
                   " s=" + std::to_string(s) + " t=" + std::to_string(t);
          });
          if (n <= 3) {
            tally.check(decide_unreach_undirected(inst) == truth, [&] {
              return "undirected: code " + std::to_string(code) + " s=" + std::to_string(s);
            });
            tally.check(decide_unreach_e1eaa(inst) == truth, [&] {
              return "e1eaa: code " + std::to_string(code) + " s=" + std::to_string(s);
            });
          }
        }
      }
    }
  }
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

SuiteReport even_cycle_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 6);
  int random = count_or(o.random, 200);
  Tally tally("even-cycle");
  auto run = [&](const Graph& g) {
    tally.check(decide_even_cycle(g) == has_cycle_mod(g, 2, false), [&] { return edges_of(g); });
  };
  for (int n = 1; n <= max_n; ++n) for_each_basic_graph(n, run);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size(8, 10);
  std::uniform_real_distribution<double> density(0.0, 0.5);
  for (int i = 0; i < random; ++i) run(random_basic_graph(size(rng), density(rng), rng));
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

SuiteReport phi_m_suite(const SuiteOptions& o) {
  int max_n = size_or(o.max_n, 5);
  Tally tally("phi-m");
  for (int m : {3, 4}) {
    Formula f = build_phi_m(m);
    for (int n = 1; n <= max_n; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        tally.check(models(f, g).has_value() == has_cycle_mod(g, m, true),
                    [&] { return "m=" + std::to_string(m) + " " + edges_of(g); });
      });
    }
  }
  Formula a2 = build_phi_A2();
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      tally.check(models(a2, g).has_value() == has_cycle_mod(g, 2, true),
                  [&] { return "A2 " + edges_of(g); });
    });
  }
  tally.report().summary = agreement_summary(tally.report());
  return tally.report();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"two-color", "csp",        "compile-csp",
                                                 "compile-pattern", "mono-forall2", "unreach",
                                                 "even-cycle", "phi-m"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "two-color") return two_color_suite(options);
  if (name == "csp") return csp_suite(options);
  if (name == "compile-csp") return compile_csp_suite(options);
  if (name == "compile-pattern") return compile_pattern_suite(options);
  if (name == "mono-forall2") return mono_forall2_suite(options);
  if (name == "unreach") return unreach_suite(options);
  if (name == "even-cycle") return even_cycle_suite(options);
  if (name == "phi-m") return phi_m_suite(options);
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace eso

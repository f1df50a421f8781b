#include <doctest.h>

#include <random>

#include "eso/enumerate.hpp"
#include "eso/error.hpp"
#include "eso/formula.hpp"
#include "eso/mcheck.hpp"
#include "eso/pattern.hpp"
#include "support/oracles.hpp"

using namespace eso;

namespace {

constexpr int kBlack = 0;
constexpr int kWhite = 1;
enum { a, b, c, d, e, f };

Graph sample_graph() { return graph_from_edges(6, {{d, a}, {a, b}, {b, f}, {f, c}, {c, b}}); }

PatternGraph sample_pattern() {
  PatternGraph p({"black", "white"});
  p.add_plus(kBlack, kBlack);
  p.add_plus(kWhite, kBlack);
  p.add_minus(kBlack, kWhite);
  return p;
}

SaturationCertificate reference_colouring() {
  SaturationCertificate cert;
  cert.coloring = {kBlack, kBlack, kBlack, kWhite, kBlack, kBlack};
  cert.witness.assign(6, 0);
  cert.witness[e] = d;
  cert.witness[d] = a;
  cert.witness[a] = b;
  cert.witness[b] = c;
  cert.witness[c] = f;
  cert.witness[f] = b;
  return cert;
}

PatternGraph two(std::initializer_list<std::pair<int, int>> plus, std::initializer_list<std::pair<int, int>> minus) {
  PatternGraph p({"black", "white"});
  for (auto [x, y] : plus) p.add_plus(x, y);
  for (auto [x, y] : minus) p.add_minus(x, y);
  return p;
}

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

}  // namespace

TEST_CASE("reference colourings of the sample graph are legal") {
  Graph g = sample_graph();
  PatternGraph p = sample_pattern();
  CHECK(verify_certificate(g, p, reference_colouring()));

  SaturationCertificate second;
  second.coloring = {kBlack, kWhite, kWhite, kWhite, kBlack, kBlack};
  second.witness = {c, f, f, a, d, d};
  CHECK(verify_certificate(g, p, second));

  CHECK(saturate_exact(g, p));
  CHECK(oracle::saturable(g, p));
}

TEST_CASE("certificate violations") {
  Graph g = sample_graph();
  PatternGraph p = sample_pattern();
  SaturationCertificate self = reference_colouring();
  self.witness[d] = d;
  CHECK_FALSE(verify_certificate(g, p, self));
  SaturationCertificate non_edge = reference_colouring();
  non_edge.witness[e] = a;  // (black, black) is not a minus arc
  CHECK_FALSE(verify_certificate(g, p, non_edge));
  SaturationCertificate partial = reference_colouring();
  partial.witness.pop_back();
  CHECK_THROWS_AS(verify_certificate(g, p, partial), ValidationError);
}

TEST_CASE("self-saturating cycles in the sample graph") {
  Graph g = sample_graph();
  PatternGraph p = sample_pattern();
  CHECK(check_self_saturating_cycle(g, p, {{b, c, f}, {kBlack, kBlack, kBlack}, false}));
  CHECK(check_self_saturating_cycle(g, p, {{a, c, f, d}, {kBlack, kWhite, kBlack, kWhite}, true}));
  auto pure = find_self_saturating_cycle(g, p, 6, CycleKind::Pure);
  REQUIRE(pure);
  CHECK_FALSE(pure->mixed);
  CHECK(check_self_saturating_cycle(g, p, *pure));
  auto mixed = find_self_saturating_cycle(g, p, 6, CycleKind::Mixed);
  REQUIRE(mixed);
  CHECK(mixed->mixed);
  CHECK(check_self_saturating_cycle(g, p, *mixed));
}

TEST_CASE("saturation edge cases") {
  PatternGraph full = two({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK_FALSE(saturate_exact(Graph(1), full));
  CHECK_FALSE(saturate_exact(cycle_graph(5), PatternGraph({"only"})));
  CHECK_THROWS_AS(saturate_exact(complete_graph(30), full, 1000), BudgetExceeded);
}

TEST_CASE("pattern compilation") {
  PatternGraph one = compile_pattern(parse_formula("E1:M a:x e:y . E(x,y) & M(x) & M(y)"));
  REQUIRE(one.size() == 2);
  CHECK(one.colors[1] == "{M}");
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(one.has_plus(x, y) == (x == 1 && y == 1));
      CHECK_FALSE(one.has_minus(x, y));
    }
  }
  PatternGraph phi3 = compile_pattern(build_phi_m(3));
  REQUIRE(phi3.size() == 8);
  int c1 = phi3.color_index("{C1}");
  int c2 = phi3.color_index("{C2}");
  int c3 = phi3.color_index("{C3}");
  CHECK(phi3.has_plus(c1, c2));
  CHECK(phi3.has_plus(c2, c3));
  CHECK(phi3.has_plus(c3, c1));
  CHECK_FALSE(phi3.has_plus(c2, c1));
  CHECK_FALSE(phi3.has_minus(c1, c2));
  CHECK_THROWS_AS(compile_pattern(build_phi_A2()), PreconditionError);
  CHECK_THROWS_AS(compile_pattern(parse_formula("E1:M a:x a:y . M(x)")), PreconditionError);
}

TEST_CASE("compiled patterns decide the same graphs as the formula") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    bool guarded = i % 2 == 1;
    Formula f = random_e1k_ae_formula(1 + i % 3 / 2, rng, guarded);
    PatternGraph p = compile_pattern(f);
    for (int n = guarded ? 1 : 2; n <= 5; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        CHECK(models(f, g).has_value() == saturate_exact(g, p).has_value());
      });
    }
  }
}

TEST_CASE("two-colour decider examples") {
  CHECK(fo_decide_two_color(complete_graph(2), two({{0, 0}}, {{1, 1}})).saturable);
  PatternGraph alt = two({{0, 1}}, {{1, 0}});
  Graph two_k2 = graph_from_edges(4, {{0, 1}, {2, 3}});
  TwoColorDecision yes = fo_decide_two_color(two_k2, alt);
  CHECK(yes.saturable);
  CHECK(yes.branch == "alternating");
  CHECK(has_alternating_four_cycle(two_k2));
  CHECK_FALSE(fo_decide_two_color(complete_graph(2), alt).saturable);
  CHECK_FALSE(saturate_exact(complete_graph(2), alt));
  PatternGraph acyclic = two({{0, 1}}, {});
  CHECK(fo_decide_two_color(Graph(1), acyclic).branch == "single-vertex");
  for (int n = 2; n <= 4; ++n) {
    for_each_basic_graph(n, [&](const Graph& g) {
      TwoColorDecision dd = fo_decide_two_color(g, acyclic);
      CHECK_FALSE(dd.saturable);
      CHECK(dd.branch == "acyclic");
    });
  }
  CHECK_THROWS_AS(fo_decide_two_color(complete_graph(2), PatternGraph({"x", "y", "z"})), PreconditionError);
}

TEST_CASE("two-colour decider agrees with the definitional oracle on small graphs") {
  for (unsigned code = 0; code < 256; ++code) {
    PatternGraph p = PatternGraph::two_color(code);
    for (int n = 1; n <= 4; ++n) {
      for_each_basic_graph(n, [&](const Graph& g) {
        TwoColorDecision dd = fo_decide_two_color(g, p);
        CHECK(dd.saturable == oracle::saturable(g, p));
        if (dd.certificate) CHECK(verify_certificate(g, p, *dd.certificate));
      });
    }
  }
}

TEST_CASE("exact saturation agrees with the definitional oracle on three colours") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    PatternGraph p = random_pattern(3, rng);
    Graph g = random_basic_graph(1 + i % 6, 0.5, rng);
    auto cert = saturate_exact(g, p);
    CHECK(cert.has_value() == oracle::saturable(g, p));
    if (cert) CHECK(verify_certificate(g, p, *cert));
  }
}

TEST_CASE("complement duality") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 1000; ++i) {
    PatternGraph p = random_pattern(2 + i % 2, rng);
    Graph g = random_basic_graph(1 + i % 7, 0.5, rng);
    CHECK(saturate_exact(g, p).has_value() == saturate_exact(complement(g), swap_arcs(p)).has_value());
  }
}

TEST_CASE("saturated graphs contain self-saturating cycles") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 500; ++i) {
    PatternGraph p = random_pattern(2 + i % 2, rng);
    Graph g = random_basic_graph(2 + i % 6, 0.5, rng);
    auto cert = saturate_exact(g, p);
    if (!cert) continue;
    SelfSaturatingCycle cyc = cycle_from_certificate(g, *cert, static_cast<int>(rng() % g.n()));
    CHECK(check_self_saturating_cycle(g, p, cyc));
    CHECK(find_self_saturating_cycle(g, p, g.n()));
  }
}

TEST_CASE("alternating pattern: mixed cycles of length four suffice") {
  PatternGraph alt = two({{0, 1}}, {{1, 0}});
  std::mt19937_64 rng(35);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_basic_graph(2 + i % 7, 0.5, rng);
    bool short_cycle = find_self_saturating_cycle(g, alt, 4, CycleKind::Mixed).has_value();
    bool any_cycle = find_self_saturating_cycle(g, alt, g.n(), CycleKind::Mixed).has_value();
    CHECK(short_cycle == any_cycle);
    CHECK(any_cycle == has_alternating_four_cycle(g));
  }
}

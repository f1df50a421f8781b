#include "eso/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "eso/classify.hpp"
#include "eso/csp.hpp"
#include "eso/error.hpp"
#include "eso/formula.hpp"
#include "eso/io.hpp"
#include "eso/mcheck.hpp"
#include "eso/pattern.hpp"
#include "eso/reductions.hpp"
#include "eso/suites.hpp"

namespace eso {

using nlohmann::json;

namespace {

struct Outcome {
  json body;
  int code = kExitYes;
};

Outcome verdict(json body, bool yes) {
  body["verdict"] = yes;
  return {std::move(body), yes ? kExitYes : kExitNo};
}

Formula load_formula(const std::string& path) { return parse_formula(read_text_file(path)); }

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

// classify ------------------------------------------------------------------

struct ClassifyArgs {
  std::string mode = "basic";
  std::string prefix;
};

Outcome do_classify(const ClassifyArgs& a) {
  GraphMode mode = parse_graph_mode(a.mode);
  PrefixType w = parse_prefix(a.prefix);
  Classification c = classify(w, mode);
  return {json{{"prefix", to_string(w)},
               {"mode", to_string(mode)},
               {"class", to_string(c.klass)},
               {"matched_pattern", to_string(c.matched_pattern)},
               {"row", c.row}},
          kExitYes};
}

// check ---------------------------------------------------------------------

struct CheckArgs {
  std::string formula;
  std::string graph;
  std::uint64_t budget = kDefaultModelBudget;
  bool certificate = false;
};

Outcome do_check(const CheckArgs& a) {
  Formula f = load_formula(a.formula);
  Graph g = load_graph(a.graph);
  auto found = models(f, g, a.budget);
  json body{{"formula", to_string(f)},
            {"prefix", to_string(prefix_type(f))},
            {"class", to_string(classify(prefix_type(f), g.mode()).klass)}};
  if (found) {
    if (!satisfies(f, g, *found)) throw std::logic_error("model check produced an invalid witness");
    if (a.certificate) body["witness"] = assignment_to_json(*found);
  }
  return verdict(std::move(body), found.has_value());
}

// saturate / compile-pattern --------------------------------------------------

struct SaturateArgs {
  std::string pattern;
  std::string graph;
  std::string method = "auto";
  bool certificate = false;
  std::uint64_t budget = kDefaultSaturationBudget;
};

Outcome do_saturate(const SaturateArgs& a) {
  PatternGraph p = pattern_from_json(read_json_file(a.pattern));
  Graph g = load_graph(a.graph);
  bool two = p.size() == 2 && a.method != "exact";
  if (a.method == "two-color" && p.size() != 2) {
    throw ValidationError("--method two-color needs a pattern with two colours");
  }
  json body{{"method", two ? "two-color" : "exact"}};
  std::optional<SaturationCertificate> cert;
  bool yes = false;
  if (two) {
    TwoColorDecision d = fo_decide_two_color(g, p);
    body["branch"] = d.branch;
    yes = d.saturable;
    cert = d.certificate;
    if (yes && !cert && a.certificate) cert = saturate_exact(g, p, a.budget);
  } else {
    cert = saturate_exact(g, p, a.budget);
    yes = cert.has_value();
  }
  if (a.certificate && cert) {
    if (!verify_certificate(g, p, *cert)) throw std::logic_error("saturation produced an invalid certificate");
    body["certificate"] = certificate_to_json(p, *cert);
  }
  return verdict(std::move(body), yes);
}

Outcome do_compile_pattern(const std::string& path) {
  return {pattern_to_json(compile_pattern(load_formula(path))), kExitYes};
}

// csp -----------------------------------------------------------------------

struct CspArgs {
  std::string c_set;
  std::string d_set;
  std::string graph;
  std::string formula;
  bool witness = false;
};

Outcome do_csp_solve(const CspArgs& a) {
  CdCsp p{parse_card_set(a.c_set), parse_card_set(a.d_set), load_graph(a.graph)};
  CspDecision d = solve_csp_explained(p);
  json body{{"C", card_set_to_string(p.c_set)}, {"D", card_set_to_string(p.d_set)}, {"branch", d.branch}};
  if (d.solution) {
    if (!verify_solution(p, *d.solution)) throw std::logic_error("CSP solver produced an invalid solution");
    if (a.witness) body["witness"] = d.solution->x_set;
  }
  return verdict(std::move(body), d.solution.has_value());
}

Outcome do_csp_compile(const CspArgs& a) {
  CspSets s = compile_csp(load_formula(a.formula));
  return {json{{"C", card_set_to_string(s.c_set)}, {"D", card_set_to_string(s.d_set)}}, kExitYes};
}

// reduce --------------------------------------------------------------------

struct ReduceArgs {
  std::string graph;
  int s = 0;
  int t = 0;
  std::string variant = "shadow";
  std::string out;
  std::string dot;
};

Outcome do_reduce_unreach(const ReduceArgs& a) {
  Graph g = load_graph(a.graph);
  if (g.mode() != GraphMode::Directed) throw ValidationError("unreach needs a directed graph");
  UnreachInstance inst{g, a.s, a.t, {}};
  validate(inst);
  GadgetOutput gadget;
  bool unreachable = false;
  if (a.variant == "shadow") {
    gadget = reduce_unreach_shadow(inst);
    unreachable = decide_unreach_shadow(inst);
  } else if (a.variant == "undirected") {
    gadget = reduce_unreach_undirected(inst);
    unreachable = decide_unreach_undirected(inst);
  } else if (a.variant == "e1eaa") {
    gadget = reduce_unreach_e1eaa(inst);
    unreachable = decide_unreach_e1eaa(inst);
  } else {
    throw ValidationError("unknown variant '" + a.variant + "'");
  }
  if (unreachable == reachable(g, a.s, a.t)) throw std::logic_error("reduction disagrees with reachability");
  json graph_json = graph_to_json(gadget.graph);
  json body{{"variant", a.variant}, {"roles", gadget.roles}, {"unreachable", unreachable}};
  if (a.out.empty()) {
    body["graph"] = graph_json;
  } else {
    write_text_file(a.out, graph_json.dump(2) + "\n");
    body["out"] = a.out;
  }
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(gadget.graph, gadget.roles));
  return verdict(std::move(body), unreachable);
}

Outcome do_reduce_even_cycle(const ReduceArgs& a) {
  Graph g = load_graph(a.graph);
  if (!a.dot.empty()) write_text_file(a.dot, to_dot(subdivide(g)));
  return verdict(json{{"property", "even-cycle"}}, decide_even_cycle(g));
}

// oracle-compare ------------------------------------------------------------

struct CompareArgs {
  std::string suite;
  SuiteOptions options;
};

Outcome do_oracle_compare(const CompareArgs& a) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else {
    names = {a.suite};
  }
  json reports = json::array();
  bool ok = true;
  for (const auto& name : names) {
    SuiteReport r = run_suite(name, a.options);
    ok = ok && r.ok();
    reports.push_back({{"suite", r.suite},
                       {"cases", r.cases},
                       {"disagreements", r.disagreements},
                       {"report", r.summary},
                       {"notes", r.notes}});
  }
  json body = names.size() == 1 ? reports[0] : json{{"suites", reports}};
  body["seed"] = a.options.seed;
  return {std::move(body), ok ? kExitYes : kExitNo};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prenex ESO formulas over graphs: classification and deciders", "eso"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Class of a prefix type");
  classify_cmd->add_option("--mode", classify_args.mode, "basic|undirected|directed")
      ->check(CLI::IsMember({"basic", "undirected", "directed"}));
  classify_cmd->add_option("prefix", classify_args.prefix, "Prefix such as \"E1 a e\"")->required();

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Model check a formula on a graph");
  check_cmd->add_option("--formula", check_args.formula)->required();
  check_cmd->add_option("--graph", check_args.graph)->required();
  check_cmd->add_option("--budget", check_args.budget, "Largest SO search space");
  check_cmd->add_flag("--certificate", check_args.certificate, "Emit the SO witness");

  SaturateArgs sat_args;
  auto* sat_cmd = app.add_subcommand("saturate", "Pattern-graph saturation");
  sat_cmd->add_option("--pattern", sat_args.pattern)->required();
  sat_cmd->add_option("--graph", sat_args.graph)->required();
  sat_cmd->add_option("--method", sat_args.method)->check(CLI::IsMember({"auto", "exact", "two-color"}));
  sat_cmd->add_option("--budget", sat_args.budget, "Largest number of colourings");
  sat_cmd->add_flag("--certificate", sat_args.certificate, "Emit colouring and witness map");

  std::string compile_formula;
  auto* compile_cmd = app.add_subcommand("compile-pattern", "Pattern graph of an E1..E1 a e formula");
  compile_cmd->add_option("--formula", compile_formula)->required();

  CspArgs csp_args;
  auto* csp_cmd = app.add_subcommand("csp", "{C,D}-CSP tools");
  csp_cmd->require_subcommand(1);
  auto* csp_solve = csp_cmd->add_subcommand("solve", "Solve a {C,D}-CSP");
  csp_solve->add_option("--c", csp_args.c_set, "e.g. 1 or 0,1,2")->required();
  csp_solve->add_option("--d", csp_args.d_set)->required();
  csp_solve->add_option("--graph", csp_args.graph, "Pairs carrying C")->required();
  csp_solve->add_flag("--witness", csp_args.witness);
  auto* csp_compile = csp_cmd->add_subcommand("compile", "Cardinality sets of an E1 a a formula");
  csp_compile->add_option("--formula", csp_args.formula)->required();

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Gadget reductions");
  reduce_cmd->require_subcommand(1);
  auto* unreach_cmd = reduce_cmd->add_subcommand("unreach", "Unreachability gadget");
  unreach_cmd->add_option("--graph", reduce_args.graph)->required();
  unreach_cmd->add_option("--s", reduce_args.s)->required();
  unreach_cmd->add_option("--t", reduce_args.t)->required();
  unreach_cmd->add_option("--variant", reduce_args.variant)
      ->check(CLI::IsMember({"shadow", "undirected", "e1eaa"}));
  unreach_cmd->add_option("--out", reduce_args.out, "Write the gadget graph here");
  unreach_cmd->add_option("--dot", reduce_args.dot, "Write Graphviz DOT here");
  auto* even_cmd = reduce_cmd->add_subcommand("even-cycle", "Even simple cycle via subdivision");
  even_cmd->add_option("--graph", reduce_args.graph)->required();
  even_cmd->add_option("--dot", reduce_args.dot, "Write the subdivided graph as DOT");

  CompareArgs compare_args;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* compare_cmd = app.add_subcommand("oracle-compare", "Differential test suites");
  compare_cmd->add_option("--suite", compare_args.suite)->required()->check(CLI::IsMember(suites));
  compare_cmd->add_option("--max-n", compare_args.options.max_n, "Largest exhaustive size");
  compare_cmd->add_option("--seed", compare_args.options.seed);
  compare_cmd->add_option("--random", compare_args.options.random, "Number of random cases");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Outcome result;
    if (*classify_cmd) {
      result = do_classify(classify_args);
    } else if (*check_cmd) {
      result = do_check(check_args);
    } else if (*sat_cmd) {
      result = do_saturate(sat_args);
    } else if (*compile_cmd) {
      result = do_compile_pattern(compile_formula);
    } else if (*csp_solve) {
      result = do_csp_solve(csp_args);
    } else if (*csp_compile) {
      result = do_csp_compile(csp_args);
    } else if (*unreach_cmd) {
      result = do_reduce_unreach(reduce_args);
    } else if (*even_cmd) {
      result = do_reduce_even_cycle(reduce_args);
    } else {
      result = do_oracle_compare(compare_args);
    }
    out << result.body.dump(2) << "\n";
    return result.code;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace eso

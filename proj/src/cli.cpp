#include "freeprod/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "freeprod/bass_serre.hpp"
#include "freeprod/closure_checker.hpp"
#include "freeprod/constructions.hpp"
#include "freeprod/error.hpp"
#include "freeprod/spec_io.hpp"
#include "freeprod/verification.hpp"
#include "freeprod/words.hpp"

namespace freeprod::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

constexpr std::string_view kDefaultC2C3 = "factors: cyclic 2; cyclic 3 / labels: a; b";
constexpr std::string_view kDefaultS3Z2 = "factors: dihedral 3; cyclic 2 / labels: a,b; c";
constexpr std::string_view kDefaultC2C2C2 = "factors: cyclic 2; cyclic 2; cyclic 2 / labels: a; b; c";
constexpr std::string_view kDefaultLemma5 = "factors: product [cyclic 2, cyclic 3]; cyclic 2 / labels: a,b; c";

// A spec argument is a file path when such a file exists, else inline text.
std::string load_text(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string render_order(const ElementOrder& o) { return o.is_infinite() ? "infinite" : std::to_string(*o.finite); }

std::string render_substitution(const FreeProduct& ambient, const Substitution& s) {
  std::string out;
  for (const auto& [index, value] : s) {
    if (!out.empty()) out += ", ";
    out += "x" + std::to_string(index) + " = " + ambient.render(value);
  }
  return out;
}

Substitution parse_assignments(const std::string& text, const FreeProduct& ambient) {
  Substitution s;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::SyntaxError, "assignment \"" + item + "\" needs '='");
    auto name = item.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    if (name.size() < 2 || name[0] != 'x') throw Error(ErrorKind::SyntaxError, "bad variable name \"" + name + "\"");
    std::uint32_t index = 0;
    try {
      index = static_cast<std::uint32_t>(std::stoul(name.substr(1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::SyntaxError, "bad variable name \"" + name + "\"");
    }
    s.insert_or_assign(index, parse_element(item.substr(eq + 1), ambient));
  }
  return s;
}

json report(const std::string& verdict, double ms) {
  return json{{"verdict", verdict}, {"violations", json::array()}, {"witnesses", json::array()},
              {"timings", {{"total_ms", ms}}}};
}

json trial_json(const std::string& name, const TrialSummary& t) {
  return json{{"suite", name}, {"trials", t.trials}, {"checks", t.checks}, {"failures", t.failures},
              {"notes", t.failure_notes}};
}

void print_trials(std::ostream& out, const std::string& name, const TrialSummary& t) {
  out << name << ": " << t.trials << " trials, " << t.checks << " checks, " << t.failures << " failures\n";
  for (const auto& note : t.failure_notes) out << "  " << note << "\n";
}

json violation_json(const KuroshData& data, const Violation& v) {
  const auto& ambient = data.ambient;
  json j{{"condition", to_string(v.kind)}, {"verified", verify_witness(data, v)}};
  if (v.kind == ConditionKind::Condition1) {
    j["free_rank"] = data.free_rank;
    return j;
  }
  j["parts"] = {v.part1, v.part2};
  j["factor"] = v.factor;
  j["f"] = ambient.render(ambient.element(v.factor, v.f));
  j["g"] = ambient.render(ambient.element(v.factor, v.g));
  j["k1"] = v.k1;
  j["k2"] = v.k2;
  if (v.kind == ConditionKind::Condition3) {
    json inter = json::array();
    for (auto x : v.intersection) inter.push_back(ambient.render(ambient.element(v.factor, x)));
    j["intersection"] = inter;
  }
  return j;
}

std::string describe(const KuroshData& data, const Violation& v) {
  const auto& ambient = data.ambient;
  if (v.kind == ConditionKind::Condition1) return "Condition1: free rank " + std::to_string(data.free_rank) + " > 0";
  std::string s = to_string(v.kind) + ": parts " + std::to_string(v.part1) + ", " + std::to_string(v.part2) +
                  " in factor " + std::to_string(v.factor) + ", f = " + ambient.render(ambient.element(v.factor, v.f)) +
                  ", g = " + ambient.render(ambient.element(v.factor, v.g));
  if (v.kind == ConditionKind::Condition2) s += ", k1 = " + std::to_string(v.k1) + ", k2 = " + std::to_string(v.k2);
  return s;
}

struct Context {
  std::ostream& out;
  bool json_output = false;
};

// Subcommand bodies return an exit code and may throw freeprod::Error.

int cmd_eval(Context& ctx, const std::string& group, const std::string& word, const std::string& assign) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto w = parse_word(word, ambient);
  const auto value = evaluate(w, assign.empty() ? Substitution{} : parse_assignments(assign, ambient));
  if (ctx.json_output) {
    auto r = report("ok", elapsed_ms(start));
    r["value"] = ambient.render(value);
    r["norm"] = value.norm();
    ctx.out << r.dump(2) << "\n";
  } else {
    ctx.out << ambient.render(value) << "\n";
  }
  return kPass;
}

int cmd_order(Context& ctx, const std::string& group, const std::string& word) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto u = parse_element(word, ambient);
  const auto o = order(u);
  if (ctx.json_output) {
    auto r = report("ok", elapsed_ms(start));
    r["order"] = o.is_infinite() ? json("infinite") : json(*o.finite);
    ctx.out << r.dump(2) << "\n";
  } else {
    ctx.out << render_order(o) << "\n";
  }
  return kPass;
}

int cmd_reduce(Context& ctx, const std::string& group, const std::string& word) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto red = cyclic_reduce(parse_element(word, ambient));
  if (ctx.json_output) {
    auto r = report("ok", elapsed_ms(start));
    r["conjugator"] = ambient.render(red.conjugator);
    r["core"] = ambient.render(red.core);
    r["core_norm"] = red.core.norm();
    ctx.out << r.dump(2) << "\n";
  } else {
    ctx.out << "conjugator: " << ambient.render(red.conjugator) << "\ncore: " << ambient.render(red.core)
            << "\nnorm: " << red.core.norm() << "\n";
  }
  return kPass;
}

int cmd_check(Context& ctx, const std::string& group, const std::string& subgroup) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto data = parse_subgroup_spec(load_text(subgroup), ambient);
  const auto verdict = check_all(data);
  const auto ms = elapsed_ms(start);
  const bool fails = verdict.kind == VerdictKind::FailsNecessary;
  if (ctx.json_output) {
    auto r = report(to_string(verdict.kind), ms);
    r["inconclusive"] = verdict.inconclusive;
    for (const auto& v : verdict.violations) {
      r["violations"].push_back(violation_json(data, v));
      if (v.kind != ConditionKind::Condition1) {
        r["witnesses"].push_back({{"f", ambient.render(ambient.element(v.factor, v.f))},
                                  {"g", ambient.render(ambient.element(v.factor, v.g))},
                                  {"k1", v.k1},
                                  {"k2", v.k2}});
      }
    }
    ctx.out << r.dump(2) << "\n";
  } else {
    ctx.out << to_string(verdict.kind) << "\n";
    for (const auto& v : verdict.violations) ctx.out << "  " << describe(data, v) << "\n";
  }
  return fails ? kFail : kPass;
}

int cmd_solve(Context& ctx, const std::string& group, const std::string& eq_text, const std::string& ball,
              const std::string& subgroup, std::size_t depth, bool all) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto eq = parse_equation(eq_text, ambient);
  if (ball.empty() == subgroup.empty()) throw Error(ErrorKind::UsageError, "give exactly one of --ball or --subgroup");
  std::vector<Part> parts;
  if (!ball.empty()) {
    parts = parse_part_list(ball, ambient);
  } else {
    const auto data = parse_subgroup_spec(load_text(subgroup), ambient);
    if (data.free_rank != 0) throw Error(ErrorKind::UsageError, "ball search needs a subgroup with free rank 0");
    parts = data.parts;
  }
  const auto candidates_list = enumerate_ball(ambient, parts, depth);
  CandidateLists candidates;
  for (auto index : eq.lhs.variables()) candidates.emplace(index, candidates_list);
  const auto result = solve_bounded(eq, candidates, all ? SolveMode::All : SolveMode::First);
  const auto ms = elapsed_ms(start);
  if (ctx.json_output) {
    auto r = report(result.found() ? "Solved" : "NoSolutionInSet", ms);
    r["ball_size"] = candidates_list.size();
    r["tuples_checked"] = result.tuples_checked;
    for (const auto& s : result.solutions) {
      json w;
      for (const auto& [index, value] : s) w["x" + std::to_string(index)] = ambient.render(value);
      r["witnesses"].push_back(w);
    }
    ctx.out << r.dump(2) << "\n";
  } else if (result.found()) {
    for (const auto& s : result.solutions) ctx.out << render_substitution(ambient, s) << "\n";
  } else {
    ctx.out << "no solution in set (" << candidates_list.size() << " candidates per variable, " << result.tuples_checked
            << " tuples checked)\n";
  }
  return result.found() ? kPass : kFail;
}

int cmd_theorem2(Context& ctx, int range) {
  if (range < 0) throw Error(ErrorKind::UsageError, "--range must be non-negative");
  const auto start = Clock::now();
  const auto rep = theorem2_report(range);
  const auto ms = elapsed_ms(start);
  if (ctx.json_output) {
    auto r = report(rep.passed() ? "pass" : "fail", ms);
    r["evaluations"] = rep.evaluations();
    r["formula_mismatches"] = rep.formula_mismatches();
    r["target_hits"] = rep.target_hits();
    r["literal_target_hits"] = rep.literal_target_hits();
    r["g_side"] = {{"value", rep.g_side_value}, {"target", rep.g_side_target}, {"matches", rep.g_side_matches}};
    for (const auto& c : rep.cases) {
      json jc{{"case", c.number},
              {"eps", c.eps},
              {"printed", c.printed_formula},
              {"evaluations", c.evaluations},
              {"mismatches", c.formula_mismatches},
              {"target_hits", c.target_hits},
              {"literal_formula", c.literal_formula},
              {"literal_printed_mismatches", c.literal_printed_mismatches},
              {"literal_formula_mismatches", c.literal_formula_mismatches}};
      r["cases"].push_back(jc);
      if (c.formula_mismatches != 0 || c.target_hits != 0) r["violations"].push_back(jc);
    }
    ctx.out << r.dump(2) << "\n";
  } else {
    for (const auto& c : rep.cases) {
      ctx.out << "case " << c.number << " (" << c.eps[0] << "," << c.eps[1] << "," << c.eps[2] << "): (ba)^n, n = "
              << c.printed_formula << "; " << c.evaluations << " evaluations, " << c.formula_mismatches
              << " mismatches, " << c.target_hits << " hits\n";
      if (c.literal_printed_mismatches != 0) {
        ctx.out << "  with x1 = (ba)^k a^e1 the exponent is " << c.literal_formula << " (differs from n on "
                << c.literal_printed_mismatches << " inputs, " << c.literal_formula_mismatches << " mismatches)\n";
      }
    }
    ctx.out << "(C2 x C2) * C2 at (a, c d c, c): " << rep.g_side_value << " vs " << rep.g_side_target
            << (rep.g_side_matches ? " (equal)" : " (different)") << "\n";
    ctx.out << rep.target_hits() << " matches / "
            << (rep.formula_mismatches() == 0 ? "all case formulas confirmed"
                                              : std::to_string(rep.formula_mismatches()) + " formula mismatches")
            << " (" << rep.evaluations() << " evaluations, " << static_cast<long>(ms) << " ms)\n";
  }
  return rep.passed() ? kPass : kFail;
}

int finish_trials(Context& ctx, Clock::time_point start, const std::vector<std::pair<std::string, TrialSummary>>& runs) {
  bool ok = true;
  for (const auto& [name, t] : runs) ok = ok && t.passed();
  const auto ms = elapsed_ms(start);
  if (ctx.json_output) {
    auto r = report(ok ? "pass" : "fail", ms);
    for (const auto& [name, t] : runs) {
      r["suites"].push_back(trial_json(name, t));
      for (const auto& note : t.failure_notes) r["violations"].push_back({{"suite", name}, {"note", note}});
    }
    ctx.out << r.dump(2) << "\n";
  } else {
    for (const auto& [name, t] : runs) print_trials(ctx.out, name, t);
    ctx.out << (ok ? "pass" : "fail") << " (" << static_cast<long>(ms) << " ms)\n";
  }
  return ok ? kPass : kFail;
}

int cmd_lemma4(Context& ctx, const std::vector<std::string>& groups, std::uint64_t trials, std::uint64_t seed,
               std::size_t max_norm) {
  const auto start = Clock::now();
  std::vector<std::string> texts = groups;
  if (texts.empty()) texts = {std::string(kDefaultC2C3), std::string(kDefaultS3Z2)};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, TrialSummary>> runs;
  for (const auto& g : texts) {
    const auto ambient = parse_group_spec(load_text(g));
    runs.emplace_back("lemma4 " + g, run_lemma4_trials(ambient, trials, max_norm, rng));
  }
  return finish_trials(ctx, start, runs);
}

int cmd_lemma7(Context& ctx, const std::vector<std::string>& groups, std::uint64_t trials, std::uint64_t axis_trials,
               std::uint64_t seed) {
  const auto start = Clock::now();
  std::vector<std::string> texts = groups;
  if (texts.empty()) texts = {std::string(kDefaultC2C3), std::string(kDefaultC2C2C2)};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, TrialSummary>> runs;
  for (const auto& g : texts) {
    const auto ambient = parse_group_spec(load_text(g));
    runs.emplace_back("norm bound " + g, run_lemma7_trials(ambient, trials, 6, rng));
    runs.emplace_back("axes " + g, run_axis_trials(ambient, axis_trials, 6, rng));
  }
  return finish_trials(ctx, start, runs);
}

int cmd_lemma5(Context& ctx, const std::string& group, const std::string& f, const std::string& g, std::uint64_t k1,
               std::uint64_t k2, std::size_t depth) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto c = build_lemma5(ambient, f, g, k1, k2);
  const bool solution_ok = satisfies(c.equation, c.solution);

  // H = <f^k1> * <f^k2>^g needs f inside one factor.
  if (c.f.norm() != 1) throw Error(ErrorKind::UsageError, "f must lie in a single factor");
  const auto factor = c.f.syllables()[0].factor;
  const auto& G = ambient.factor(factor);
  auto part_for = [&](std::uint64_t k, const FPElement& conj) {
    const auto fk = power(c.f, static_cast<std::int64_t>(k));
    IdSet gens;
    if (!fk.is_identity()) gens.push_back(fk.syllables()[0].elem);
    return Part{factor, G.generated_subgroup(gens), conj};
  };
  const std::vector<Part> parts{part_for(k1, ambient.identity()), part_for(k2, c.g)};
  const auto ball = enumerate_ball(ambient, parts, depth);
  CandidateLists candidates;
  for (auto index : c.equation.lhs.variables()) candidates.emplace(index, ball);
  const auto result = solve_bounded(c.equation, candidates, SolveMode::First);
  const bool ok = solution_ok && !result.found();
  const auto ms = elapsed_ms(start);

  if (ctx.json_output) {
    auto r = report(ok ? "pass" : "fail", ms);
    r["N"] = c.N;
    r["a"] = ambient.render(c.a);
    r["b"] = ambient.render(c.b);
    r["generator_substitution_solves"] = solution_ok;
    r["ball_size"] = ball.size();
    r["tuples_checked"] = result.tuples_checked;
    r["search"] = result.found() ? "SolutionFound" : "NoSolutionInSet";
    for (const auto& s : result.solutions) r["violations"].push_back({{"solution", render_substitution(ambient, s)}});
    ctx.out << r.dump(2) << "\n";
  } else {
    ctx.out << "N = " << c.N << ", a = " << ambient.render(c.a) << ", b = " << ambient.render(c.b) << "\n";
    ctx.out << "generator substitution " << (solution_ok ? "solves" : "does not solve") << " the equation\n";
    ctx.out << "ball of length " << depth << ": " << ball.size() << " elements, " << result.tuples_checked
            << " tuples checked, " << (result.found() ? "solution found: " + render_substitution(ambient, result.solutions[0])
                                                      : std::string("NoSolutionInSet"))
            << "\n";
    ctx.out << (ok ? "pass" : "fail") << " (" << static_cast<long>(ms) << " ms)\n";
  }
  return ok ? kPass : kFail;
}

int cmd_axis(Context& ctx, const std::string& group, const std::string& word, std::uint64_t window) {
  const auto start = Clock::now();
  const auto ambient = parse_group_spec(load_text(group));
  const auto u = parse_element(word, ambient);
  const auto c = classify(u);
  const auto ms = elapsed_ms(start);
  if (const auto* e = std::get_if<Elliptic>(&c)) {
    if (ctx.json_output) {
      auto r = report("Elliptic", ms);
      r["fixed_vertex"] = e->fixed_vertex.render();
      ctx.out << r.dump(2) << "\n";
    } else {
      ctx.out << "elliptic, fixes " << e->fixed_vertex.render() << "\n";
    }
    return kPass;
  }
  const auto& axis = std::get<Hyperbolic>(c).axis;
  const auto vertices = axis_vertices(u, window);
  if (ctx.json_output) {
    auto r = report("Hyperbolic", elapsed_ms(start));
    r["translation_length_edges"] = axis.translation_length_edges;
    r["conjugator"] = ambient.render(axis.conjugator);
    r["core"] = ambient.render(axis.core);
    for (const auto& v : vertices) r["axis"].push_back(v.render());
    ctx.out << r.dump(2) << "\n";
  } else {
    ctx.out << "hyperbolic, translation length " << axis.translation_length_edges << " edges\n";
    ctx.out << "conjugator: " << ambient.render(axis.conjugator) << "\ncore: " << ambient.render(axis.core) << "\n";
    ctx.out << "axis:";
    for (const auto& v : vertices) ctx.out << " " << v.render();
    ctx.out << "\n";
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in free products of finite groups", "freeprod"};
  app.require_subcommand(1);
  Context ctx{out};

  std::string group, subgroup, word, assign, eq, ball, f_word = "a b", g_word = "c";
  std::vector<std::string> groups;
  std::uint64_t trials = 0, axis_trials = 200, seed = 0, window = 2, k1 = 3, k2 = 2;
  std::size_t depth = 1, max_norm = 5;
  int range = 6;
  bool all = false;
  std::function<int()> action;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ctx.json_output, "Emit a JSON report"); };

  auto* eval = app.add_subcommand("eval", "Evaluate a word, optionally substituting variables");
  eval->add_option("--group", group, "Group spec file or text")->required();
  eval->add_option("--word", word, "Word over generators and variables")->required();
  eval->add_option("--assign", assign, "Assignments such as \"x1=a, x2=b c\"");
  add_json(eval);
  eval->callback([&] { action = [&] { return cmd_eval(ctx, group, word, assign); }; });

  auto* ord = app.add_subcommand("order", "Order of an element");
  ord->add_option("--group", group)->required();
  ord->add_option("--word", word)->required();
  add_json(ord);
  ord->callback([&] { action = [&] { return cmd_order(ctx, group, word); }; });

  auto* reduce = app.add_subcommand("reduce", "Cyclic reduction u = c D c^-1");
  reduce->add_option("--group", group)->required();
  reduce->add_option("--word", word)->required();
  add_json(reduce);
  reduce->callback([&] { action = [&] { return cmd_reduce(ctx, group, word); }; });

  auto* check = app.add_subcommand("check", "Necessary conditions for verbal closedness");
  check->add_option("--group", group)->required();
  check->add_option("--subgroup", subgroup, "Subgroup spec file or text")->required();
  add_json(check);
  check->callback([&] { action = [&] { return cmd_check(ctx, group, subgroup); }; });

  auto* solve = app.add_subcommand("solve", "Bounded search for solutions in a subgroup ball");
  solve->add_option("--group", group)->required();
  solve->add_option("--eq", eq, "Equation \"lhs = rhs\"")->required();
  solve->add_option("--ball", ball, "Parts such as \"a; b@c\"");
  solve->add_option("--subgroup", subgroup, "Subgroup spec file or text");
  solve->add_option("--depth", depth, "Ball length")->capture_default_str();
  solve->add_flag("--all", all, "Report every solution");
  add_json(solve);
  solve->callback([&] { action = [&] { return cmd_solve(ctx, group, eq, ball, subgroup, depth, all); }; });

  auto* t2 = app.add_subcommand("verify-theorem2", "Exhaustive check of the C2 * C2 case table");
  t2->add_option("--range", range, "Check k, t, s in [-range, range]")->capture_default_str();
  add_json(t2);
  t2->callback([&] { action = [&] { return cmd_theorem2(ctx, range); }; });

  auto* l4 = app.add_subcommand("verify-lemma4", "Random x1^p ... xm^p = f instances");
  l4->add_option("--group", groups, "Group spec (repeatable)");
  l4->add_option("--trials", trials, "Trials per group (default 100)");
  l4->add_option("--seed", seed)->capture_default_str();
  l4->add_option("--max-norm", max_norm)->capture_default_str();
  add_json(l4);
  l4->callback([&] { action = [&] { return cmd_lemma4(ctx, groups, trials ? trials : 100, seed, max_norm); }; });

  auto* l5 = app.add_subcommand("verify-lemma5", "Generator substitution and ball search for one instance");
  l5->add_option("--group", group, "Group spec (default (C2 x C3) * C2)");
  l5->add_option("--f", f_word)->capture_default_str();
  l5->add_option("--g", g_word)->capture_default_str();
  l5->add_option("--k1", k1)->capture_default_str();
  l5->add_option("--k2", k2)->capture_default_str();
  l5->add_option("--depth", depth, "Ball length (default 6)");
  add_json(l5);
  l5->callback([&] {
    action = [&] {
      const auto spec = group.empty() ? std::string(kDefaultLemma5) : group;
      const auto d = l5->count("--depth") ? depth : std::size_t{6};
      return cmd_lemma5(ctx, spec, f_word, g_word, k1, k2, d);
    };
  });

  auto* l7 = app.add_subcommand("verify-lemma7", "Random norm-bound and axis trials");
  l7->add_option("--group", groups, "Group spec (repeatable)");
  l7->add_option("--trials", trials, "Norm-bound trials per group (default 1000)");
  l7->add_option("--axis-trials", axis_trials, "Axis trials per group")->capture_default_str();
  l7->add_option("--seed", seed)->capture_default_str();
  add_json(l7);
  l7->callback([&] { action = [&] { return cmd_lemma7(ctx, groups, trials ? trials : 1000, axis_trials, seed); }; });

  auto* axis = app.add_subcommand("axis", "Classify an element acting on the tree");
  axis->add_option("--group", group)->required();
  axis->add_option("--word", word)->required();
  axis->add_option("--window", window, "Periods of the axis to list on each side")->capture_default_str();
  add_json(axis);
  axis->callback([&] { action = [&] { return cmd_axis(ctx, group, word, window); }; });

  std::vector<std::string> argv_store{"freeprod"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace freeprod::cli

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gel/affine.hpp"
#include "gel/bounds.hpp"
#include "gel/chib.hpp"
#include "gel/editdist.hpp"
#include "gel/errors.hpp"
#include "gel/genspec.hpp"
#include "gel/graph6.hpp"
#include "gel/heuristic.hpp"
#include "gel/rational.hpp"
#include "gel/regularity.hpp"
#include "gel/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::optional<std::uint64_t> budget;
  double timeout = 0.0;
  std::uint64_t seed = 0;
  bool table = false;
  bool as_json = false;
};

// --h is a real option here, so help must not own the h name
CLI::App* make_sub(CLI::App& app, const std::string& name,
                   const std::string& desc) {
  CLI::App* sub = app.add_subcommand(name, desc);
  sub->set_help_flag("--help", "print help");
  return sub;
}

void attach_common(CLI::App* sub, Common& c) {
  sub->add_option("--budget", c.budget, "solver node budget (default 1e8)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--timeout", c.timeout, "solver wall clock limit, seconds")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "seed for seeded generators and editors");
  sub->add_flag("--table", c.table, "plain key: value output");
  sub->add_flag("--json", c.as_json, "JSON output");
}

gel::SearchLimits make_limits(const Common& c) {
  gel::SearchLimits lim;
  if (c.budget) {
    lim.node_budget = *c.budget;
  } else if (const char* env = std::getenv("GEL_NODE_BUDGET")) {
    try {
      std::size_t used = 0;
      lim.node_budget = std::stoull(env, &used);
      if (used != std::string(env).size() || lim.node_budget == 0)
        throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "GEL_NODE_BUDGET must be a positive integer");
    }
  }
  lim.timeout_seconds = c.timeout;
  return lim;
}

void flat_print(const json& j, const std::string& prefix = "") {
  for (auto& [key, value] : j.items()) {
    if (value.is_object()) {
      flat_print(value, prefix + key + ".");
    } else {
      std::cout << prefix << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const json& j, const Common& c) {
  if (c.table)
    flat_print(j);
  else
    std::cout << j.dump(2) << "\n";
}

gel::FamilyMode mode_of(const std::string& s) {
  return s == "subgraph" ? gel::FamilyMode::subgraph
                         : gel::FamilyMode::induced;
}

json edits_json(const gel::EditSet& edits) {
  json arr = json::array();
  for (const auto& t : edits.toggles) arr.push_back({t.u, t.v});
  return arr;
}

json partition_json(const gel::Partition& p) {
  json arr = json::array();
  for (const auto& b : p.blocks)
    arr.push_back({{"kind", gel::to_string(b.kind)},
                   {"vertices", b.vertices()}});
  return arr;
}

int cmd_chib(const std::string& arg, const Common& c) {
  gel::Graph g = gel::parse_graph_arg(arg, c.seed);
  auto lim = make_limits(c);
  int chi_b = gel::binary_chromatic(g, lim);
  json out{{"chi_b", chi_b}};
  if (chi_b >= 2) {
    gel::CMinMax cm = gel::c_min_c_max(g, lim);
    out["k"] = cm.k;
    out["c_min"] = cm.c_min;
    out["c_max"] = cm.c_max;
    out["feasibility"] = cm.feasible;
  }
  emit(out, c);
  return 0;
}

int cmd_dist(const std::string& ga, const std::string& ha, const Common& c) {
  gel::Graph g = gel::parse_graph_arg(ga, c.seed);
  gel::Graph h = gel::parse_graph_arg(ha, c.seed);
  auto res = gel::dist_graphs(g, h, make_limits(c));
  emit(json{{"distance", res.distance}, {"mapping", res.mapping}}, c);
  return 0;
}

int cmd_forb(const std::string& ga, const std::vector<std::string>& forbs,
             const std::string& mode, bool deletions_only, const Common& c) {
  gel::Graph g = gel::parse_graph_arg(ga, c.seed);
  gel::FamilyMode m = mode_of(mode);
  if (deletions_only) {
    if (m == gel::FamilyMode::induced && mode == "induced")
      throw std::invalid_argument(
          "--deletions-only applies to subgraph mode only");
    m = gel::FamilyMode::subgraph;
  }
  auto fam = gel::parse_family_arg(forbs, m);
  auto res = gel::dist_to_forb(g, fam, make_limits(c));
  emit(json{{"distance", res.distance},
            {"edits", edits_json(res.edits)},
            {"witness_graph6", gel::to_graph6(gel::apply_edits(g, res.edits))}},
       c);
  return 0;
}

int cmd_maxdist(int n, const std::vector<std::string>& forbs,
                const std::string& mode, int jobs, bool force,
                const Common& c) {
  auto fam = gel::parse_family_arg(forbs, mode_of(mode));
  auto res = gel::dist_n_forb(n, fam, jobs, force, make_limits(c));
  emit(json{{"distance", res.distance},
            {"extremal", res.extremal_g6},
            {"graphs_examined", res.graphs_examined}},
       c);
  return 0;
}

int cmd_edit(const std::string& ga, const std::string& ha,
             std::optional<int> kopt, std::optional<int> copt,
             bool derandomize, const Common& c) {
  gel::Graph g = gel::parse_graph_arg(ga, c.seed);
  auto lim = make_limits(c);
  int k, cc;
  std::optional<gel::Graph> h;
  if (!ha.empty()) {
    h = gel::parse_member_name(ha);
    gel::CMinMax cm = gel::c_min_c_max(*h, lim);
    k = kopt.value_or(cm.k);
    gel::Rational d =
        g.n() < 2 ? gel::Rational(0)
                  : gel::Rational(g.m(), std::int64_t{g.n()} * (g.n() - 1) / 2);
    cc = copt.value_or(gel::choose_c(d, k, cm.c_min, cm.c_max));
  } else {
    if (!kopt || !copt)
      throw std::invalid_argument("edit needs --h, or both --k and --c");
    k = *kopt;
    cc = *copt;
  }
  gel::EditorRun run = derandomize ? gel::derandomized_edit(g, k, cc)
                                   : gel::randomized_edit(g, k, cc, c.seed);
  gel::Rational expected = gel::expected_edits(run.plan.d, g.n(), k, cc);
  json out{{"plan",
            {{"k", run.plan.k},
             {"c", run.plan.c},
             {"p", run.plan.p.str()},
             {"q", run.plan.q.str()},
             {"d", run.plan.d.str()},
             {"degenerate", run.plan.degenerate}}},
           {"edit_count", run.edits.toggles.size()},
           {"edits", edits_json(run.edits)},
           {"expected", expected.str()},
           {"expected_real", static_cast<double>(expected.num()) /
                                 static_cast<double>(expected.den())},
           {"edited_graph6", gel::to_graph6(run.edited)},
           {"colors", run.colors},
           {"partition", partition_json(run.partition)}};
  if (h && h->n() <= 5)
    out["family_free"] = gel::is_family_free(
        run.edited, gel::make_family({*h}, gel::FamilyMode::induced));
  emit(out, c);
  return 0;
}

json upper_bound_json(const gel::UpperBound& ub) {
  json j{{"value", ub.value},
         {"case", ub.which == gel::UbCase::ub1 ? "ub1" : "ub2"}};
  if (ub.which == gel::UbCase::ub2) j["c0"] = ub.c0;
  if (ub.has_exact) j["exact"] = ub.exact.str();
  return j;
}

int cmd_bounds(int n, const std::string& ha, bool use_q, bool no_exact,
               int jobs, const Common& c) {
  auto lim = make_limits(c);
  gel::BoundsReport rep;
  if (use_q) {
    rep = gel::bounds_report_q(n, lim, !no_exact, jobs);
  } else {
    gel::Graph h = gel::parse_member_name(ha);
    rep = gel::bounds_report(n, h, ha, lim, !no_exact, jobs);
  }
  json out{{"n", rep.n}, {"h", rep.h_name}};
  if (rep.chi_b) out["chi_b"] = *rep.chi_b;
  if (rep.k) out["k"] = *rep.k;
  if (rep.c_min) out["c_min"] = *rep.c_min;
  if (rep.c_max) out["c_max"] = *rep.c_max;
  if (rep.turan_eq1) out["turan_eq1"] = *rep.turan_eq1;
  if (rep.lb_thm13) out["lb_thm13"] = rep.lb_thm13->str();
  if (rep.ub_thm14) out["ub_thm14"] = upper_bound_json(*rep.ub_thm14);
  json curve = json::array();
  for (const auto& pt : rep.curve)
    curve.push_back({{"d", pt.d.str()}, {"value", pt.value.str()}});
  out["curve"] = curve;
  if (rep.thm51) out["thm51"] = *rep.thm51;
  if (rep.thm52) out["thm52"] = {rep.thm52->first, rep.thm52->second};
  if (rep.exact) out["exact"] = *rep.exact;
  out["exact_status"] = rep.exact_status;
  emit(out, c);
  return 0;
}

int cmd_construct(int k, const Common& c) {
  gel::AffineConstruction ac = gel::affine_construction(k);
  gel::audit_affine(ac);
  json parts = json::array();
  for (const auto& p : ac.partitions) parts.push_back(partition_json(p));
  emit(json{{"k", ac.k},
            {"n", ac.graph.n()},
            {"m", ac.graph.m()},
            {"graph6", gel::to_graph6(ac.graph)},
            {"partitions", parts},
            {"audit", "ok"}},
       c);
  return 0;
}

int cmd_regularity(int n, int ell, const std::string& f_str, int trials,
                   const Common& c) {
  gel::Rational f = gel::Rational::parse(f_str);
  auto res = gel::concentration_experiment(n, ell, f, trials, c.seed);
  double fr = static_cast<double>(f.num()) / static_cast<double>(f.den());
  double chernoff = gel::chernoff_bound_value(n, 1.0 / ell, fr);
  if (c.as_json) {
    json per = json::array();
    for (const auto& [lo, hi] : res.per_trial_min_max)
      per.push_back({lo, hi});
    emit(json{{"trials", res.trials},
              {"passes", res.passes},
              {"pass_fraction", res.pass_fraction},
              {"chernoff_union_bound", chernoff},
              {"per_trial_min_max", per}},
         c);
    return 0;
  }
  std::printf("trial,min_density,max_density\n");
  for (std::size_t t = 0; t < res.per_trial_min_max.size(); ++t)
    std::printf("%zu,%.6f,%.6f\n", t, res.per_trial_min_max[t].first,
                res.per_trial_min_max[t].second);
  std::fprintf(stderr, "passes %d/%d (fraction %.4f), union bound %.3e\n",
               res.passes, res.trials, res.pass_fraction, chernoff);
  return 0;
}

int cmd_verify(const std::vector<std::string>& only, int jobs,
               const Common& c) {
  gel::VerifyOptions opt;
  opt.limits = make_limits(c);
  opt.jobs = jobs;
  if (c.seed) opt.seed = c.seed;
  std::vector<std::string> ids =
      only.empty() ? gel::criterion_ids() : only;
  bool all_pass = true;
  json arr = json::array();
  for (const std::string& id : ids) {
    gel::CriterionResult res = gel::run_criterion(id, opt);
    all_pass = all_pass && res.pass;
    if (c.as_json) {
      arr.push_back({{"id", res.id},
                     {"title", res.title},
                     {"pass", res.pass},
                     {"detail", res.detail},
                     {"seconds", res.seconds}});
    } else {
      std::printf("[%s] %-13s %s | %s (%.2fs)\n",
                  res.pass ? "PASS" : "FAIL", res.id.c_str(),
                  res.title.c_str(), res.detail.c_str(), res.seconds);
      std::fflush(stdout);
    }
  }
  if (c.as_json) std::cout << arr.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"graph editing laboratory: partition levels, exact edit "
               "distance, randomized editors, bounds"};
  app.require_subcommand(1);

  Common c_chib, c_dist, c_forb, c_max, c_edit, c_bounds, c_constr, c_reg,
      c_ver;
  std::string g_arg, h_arg, mode = "induced", f_str = "0.1";
  std::vector<std::string> forbs, only;
  int n = 0, jobs = 1, ell = 4, trials = 100, k_constr = 2;
  std::optional<int> k_opt, c_opt;
  bool deletions_only = false, force = false, derandomize = false,
       use_q = false, no_exact = false;

  auto* chib = make_sub(app,
      "chib", "binary chromatic number with the level table below it");
  chib->add_option("--gen,--g", g_arg, "graph: generator spec or graph6")
      ->required();
  attach_common(chib, c_chib);

  auto* dist = make_sub(app,
      "dist", "exact editing distance between two graphs of equal order");
  dist->add_option("--g", g_arg, "first graph")->required();
  dist->add_option("--h", h_arg, "second graph")->required();
  attach_common(dist, c_dist);

  auto* forb = make_sub(app,
      "forb", "fewest edits to a graph avoiding every family member");
  forb->add_option("--gen,--g", g_arg, "graph")->required();
  forb->add_option("--forb", forbs,
                   "family member (name, forb:NAME or forbset:4v3e)")
      ->required();
  forb->add_option("--mode", mode, "induced or subgraph")
      ->check(CLI::IsMember({"induced", "subgraph"}));
  forb->add_flag("--deletions-only", deletions_only,
                 "subgraph mode, deletions alone");
  attach_common(forb, c_forb);

  auto* maxd = make_sub(app,
      "maxdist", "maximum family distance over all n-vertex graphs");
  maxd->add_option("--n", n, "order")->required()->check(CLI::Range(1, 8));
  maxd->add_option("--forb", forbs, "family member")->required();
  maxd->add_option("--mode", mode, "induced or subgraph")
      ->check(CLI::IsMember({"induced", "subgraph"}));
  maxd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  maxd->add_flag("--force", force, "allow n = 8 (12346 graphs)");
  attach_common(maxd, c_max);

  auto* edit = make_sub(app,
      "edit", "randomized or derandomized partition editor");
  edit->add_option("--gen,--g", g_arg, "graph")->required();
  edit->add_option("--h", h_arg,
                   "forbidden graph the plan is derived from");
  edit->add_option("--k", k_opt, "number of colors");
  edit->add_option("--c", c_opt, "number of clique colors");
  edit->add_flag("--derandomized", derandomize,
                 "method of conditional expectations");
  attach_common(edit, c_edit);

  auto* bounds = make_sub(app,
      "bounds", "every applicable bound and exact value at order n");
  bounds->add_option("--n", n, "order")->required()->check(CLI::Range(1, 64));
  bounds->add_option("--h", h_arg, "forbidden graph");
  bounds->add_flag("--q", use_q, "use the 4-vertex 3-edge family");
  bounds->add_flag("--no-exact", no_exact, "skip the exact solver");
  bounds->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  attach_common(bounds, c_bounds);

  auto* constr = make_sub(app,
      "construct", "grid graph whose level meets the general upper bound");
  constr->add_option("--k", k_constr, "2, 3, 5 or 7")->required();
  attach_common(constr, c_constr);

  auto* reg = make_sub(app,
      "regularity", "random graph cluster density concentration, CSV");
  reg->add_option("--n", n, "vertices")->required();
  reg->add_option("--l", ell, "clusters");
  reg->add_option("--f", f_str, "band half width (rational or decimal)");
  reg->add_option("--trials", trials, "independent trials")
      ->check(CLI::PositiveNumber);
  attach_common(reg, c_reg);

  auto* ver = make_sub(app,
      "verify", "run the acceptance criteria and print one line each");
  ver->add_option("--only", only, "criterion id (repeatable)");
  ver->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  attach_common(ver, c_ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (chib->parsed()) return cmd_chib(g_arg, c_chib);
  if (dist->parsed()) return cmd_dist(g_arg, h_arg, c_dist);
  if (forb->parsed())
    return cmd_forb(g_arg, forbs, mode, deletions_only, c_forb);
  if (maxd->parsed()) return cmd_maxdist(n, forbs, mode, jobs, force, c_max);
  if (edit->parsed())
    return cmd_edit(g_arg, h_arg, k_opt, c_opt, derandomize, c_edit);
  if (bounds->parsed()) {
    if (!use_q && h_arg.empty())
      throw std::invalid_argument("bounds needs --h or --q");
    if (use_q && !h_arg.empty())
      throw std::invalid_argument("--h and --q are mutually exclusive");
    return cmd_bounds(n, h_arg, use_q, no_exact, jobs, c_bounds);
  }
  if (constr->parsed()) return cmd_construct(k_constr, c_constr);
  if (reg->parsed()) return cmd_regularity(n, ell, f_str, trials, c_reg);
  if (ver->parsed()) return cmd_verify(only, jobs, c_ver);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gel::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

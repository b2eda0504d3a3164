#include "monpow/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "monpow/analysis.hpp"
#include "monpow/errors.hpp"
#include "monpow/io.hpp"

namespace monpow {

namespace {

using nlohmann::json;

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json integers(const std::vector<std::int64_t>& v) { return json(v); }

json hypergraph_json(const Hypergraph& H) { return json{{"vertices", H.vertices()}, {"edges", H.edges()}}; }

json monomials(const MonomialIdeal& I) {
  json out = json::array();
  for (const auto& g : I.generators()) out.push_back(g.monomial_string());
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string rational_list(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  return "(" + join(s, ",") + ")";
}

std::string edge_string(const Edge& e) {
  std::vector<std::string> s;
  for (int v : e) s.push_back(std::to_string(v));
  return "{" + join(s, ",") + "}";
}

std::string edges_string(const Hypergraph& H) {
  std::vector<std::string> s;
  for (const auto& e : H.edges()) s.push_back(edge_string(e));
  return join(s, " ");
}

struct Report {
  json query = json::object();
  json result = json::object();
  json witnesses = json::object();
  json box = nullptr;
  json seed = nullptr;
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc{{"query", query}, {"result", result}, {"witnesses", witnesses}, {"box", box}, {"seed", seed}};
      out << doc.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines) out << l << "\n";
  }
};

struct InputOptions {
  std::string ideal_file;
  std::string hypergraph_file;
  std::string gens;
  std::optional<std::size_t> vars;

  MonomialIdeal ideal() const {
    if (!ideal_file.empty()) return parse_ideal_json(read_file(ideal_file));
    if (!gens.empty()) return parse_generator_list(gens, vars);
    if (!hypergraph_file.empty()) return edge_ideal(parse_hypergraph_json(read_file(hypergraph_file)));
    throw std::invalid_argument("no input: pass --ideal FILE, --gens LIST or --hypergraph FILE");
  }

  Hypergraph hypergraph() const {
    if (!hypergraph_file.empty()) return parse_hypergraph_json(read_file(hypergraph_file));
    return ideal_to_hypergraph(ideal());
  }

  json describe() const {
    json q = json::object();
    if (!ideal_file.empty()) q["ideal_file"] = ideal_file;
    if (!hypergraph_file.empty()) q["hypergraph_file"] = hypergraph_file;
    if (!gens.empty()) q["gens"] = gens;
    return q;
  }
};

PowerKind parse_kind(const std::string& s) {
  if (s == "ordinary") return PowerKind::ordinary;
  if (s == "closure") return PowerKind::closure;
  if (s == "symbolic") return PowerKind::symbolic;
  throw std::invalid_argument("unknown power '" + s + "'");
}

void add_containment(Report& rep, const ContainmentReport& c, const std::string& key) {
  json j{{"lhs", c.lhs.str()},
         {"rhs", c.rhs.str()},
         {"holds", c.holds},
         {"lhs_generators", c.lhs_generators},
         {"generators_checked", c.generators_checked}};
  std::string text = c.lhs.str() + " in " + c.rhs.str() + ": " + (c.holds ? "holds" : "FAILS");
  text += " (" + std::to_string(c.generators_checked) + " of " + std::to_string(c.lhs_generators) + " generators checked)";
  rep.line(text);
  if (!c.holds) {
    j["counterexample"] = c.counterexample->entries();
    j["mu"] = c.mu->str();
    j["rho"] = c.rho->str();
    rep.witnesses[key] = {{"counterexample", c.counterexample->entries()},
                          {"monomial", c.counterexample->monomial_string()},
                          {"rhs_witness", rationals(c.rhs_witness)}};
    rep.line("  counterexample " + c.counterexample->monomial_string() + " " + c.counterexample->tuple_string() +
             ": lhs invariant " + c.mu->str() + ", rhs invariant " + c.rho->str() + " < " +
             std::to_string(c.rhs.k) + ", rhs witness " + rational_list(c.rhs_witness));
  }
  rep.result[key] = j;
}

void add_box_verdict(Report& rep, const BoxVerdict& v) {
  rep.box = v.box;
  rep.result[v.property] = {{"holds_on_box", v.holds}, {"points_checked", v.points_checked}};
  rep.line(v.property + " on box [0," + std::to_string(v.box) + "]^n: " +
           (v.holds ? "holds (evidence only)" : "FAILS") + ", " + std::to_string(v.points_checked) + " points");
  if (v.violation) {
    rep.result[v.property]["violation"] = v.violation->entries();
    rep.witnesses[v.property] = {{"a", v.violation->entries()}, {"values", v.detail}};
    rep.line("  violation at " + v.violation->tuple_string() + ": " + v.detail);
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Membership in powers, integral closures and symbolic powers of monomial ideals"};
  app.name("monpow");
  app.require_subcommand(1);
  app.fallthrough();

  InputOptions in;
  std::string format = "text";
  app.add_option("--ideal", in.ideal_file, "ideal JSON file");
  app.add_option("--hypergraph", in.hypergraph_file, "hypergraph JSON file");
  app.add_option("--gens", in.gens, "generators, e.g. \"x1*x2,x2*x3\"");
  app.add_option("--vars", in.vars, "number of variables for --gens");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string a_text, power_text, ones_text, zeros_text, lhs_text, rhs_text, property, experiment, parts_text;
  std::string f_text = "identity";
  int k = 1, box = 3, kmax = 2, hmax = 6, m = 2, samples = 200;
  std::optional<int> r_opt;
  std::uint64_t seed = 1;
  bool lemmas = false, scan = false, no_materialize = false;

  auto* inv = app.add_subcommand("invariants", "nu_a, nu*_a, tau_a and tau*_a");
  inv->add_option("-a", a_text, "exponent vector")->required();

  auto* mem = app.add_subcommand("member", "decide x^a in a power");
  mem->add_option("--power", power_text, "ordinary, closure or symbolic")
      ->required()
      ->check(CLI::IsMember({"ordinary", "closure", "symbolic"}));
  mem->add_option("-k", k, "order")->required();
  mem->add_option("-a", a_text, "exponent vector")->required();

  auto* sym = app.add_subcommand("symbolic", "generators of I^(k)");
  sym->add_option("-k", k, "order")->required();
  sym->add_flag("--lemmas", lemmas, "check tau_a = k, height(I_a) = k and the cover condition per generator");
  sym->add_flag("--scan", scan, "also compute I^(k) by the box scan and compare");

  auto* clg = app.add_subcommand("closure-gens", "generators of the integral closure of I^k");
  clg->add_option("-k", k, "order")->required();

  auto* blk = app.add_subcommand("blocker", "minimal vertex covers");

  auto* par = app.add_subcommand("parallelize", "parallelization H^a");
  par->add_option("-a", a_text, "multiplicities")->required();

  auto* mnr = app.add_subcommand("minor", "minor with V1 set to one and V2 set to zero");
  mnr->add_option("--ones", ones_text, "V1, e.g. 1,3");
  mnr->add_option("--zeros", zeros_text, "V2, e.g. 2");

  auto* cnt = app.add_subcommand("containment", "decide LHS in RHS, e.g. sym:2 ord:2");
  cnt->add_option("lhs", lhs_text, "ord:K, sym:K or cl:K")->required();
  cnt->add_option("rhs", rhs_text, "ord:K, sym:K or cl:K")->required();

  auto* chk = app.add_subcommand("check", "normal, mengerian, fulkersonian, konig or packing");
  chk->add_option("property", property)
      ->required()
      ->check(CLI::IsMember({"normal", "mengerian", "fulkersonian", "konig", "packing"}));
  chk->add_option("--box", box, "uniform box bound");

  auto* exp = app.add_subcommand("experiment", "ryser, cc, gaps, huneke, thm31 or equi");
  exp->add_option("name", experiment)
      ->required()
      ->check(CLI::IsMember({"ryser", "cc", "gaps", "huneke", "thm31", "equi"}));
  exp->add_option("--box", box, "uniform box bound");
  exp->add_option("--kmax", kmax, "largest k");
  exp->add_option("-r", r_opt, "partiteness (ryser; default: rank)");
  exp->add_option("--parts", parts_text, "0-based part of each vertex (ryser; default: searched)");
  exp->add_option("--samples", samples, "random instances per inequality (gaps)");
  exp->add_option("--seed", seed, "random seed (gaps)");
  exp->add_option("-m", m, "leaves per triangle vertex (huneke)");
  exp->add_flag("--no-materialize", no_materialize, "skip computing all of I^(2) (huneke)");
  exp->add_option("--f", f_text, "identity, affine:A,B or table:v1,... (equi)");

  auto* res = app.add_subcommand("resurgence", "violations I^(h) not in I^k and bounds for the resurgence");
  res->add_option("--hmax", hmax, "largest h");
  res->add_option("--kmax", kmax, "largest k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'monpow --help' for the command list\n";
    return 2;
  }

  Report rep;
  rep.query = in.describe();
  int code = 0;
  try {
    if (inv->parsed()) {
      const MonomialIdeal I = in.ideal();
      const ExponentVector a = parse_vector(a_text, I.vars());
      const IlpSolution ip = solve_ilp_packing(I.packing_program(a));
      const LpSolution lp = solve_lp_packing(I.packing_program(a));
      const IlpSolution ic = solve_ilp_covering(I.covering_program(a));
      const LpSolution lc = solve_lp_covering(I.covering_program(a));
      rep.query["command"] = "invariants";
      rep.query["a"] = a.entries();
      rep.result = {{"nu_a", ip.value}, {"nu_star_a", lp.value.str()}, {"tau_a", ic.value}, {"tau_star_a", lc.value.str()}};
      rep.witnesses = {{"nu_a", integers(ip.witness)},
                       {"nu_star_a", {{"primal", rationals(lp.primal)}, {"dual", rationals(lp.dual)}}},
                       {"tau_a", integers(ic.witness)},
                       {"tau_star_a", {{"primal", rationals(lc.primal)}, {"dual", rationals(lc.dual)}}}};
      rep.line("nu_a   = " + std::to_string(ip.value));
      rep.line("nu*_a  = " + lp.value.str());
      rep.line("tau*_a = " + lc.value.str());
      rep.line("tau_a  = " + std::to_string(ic.value));
      if (I.is_squarefree()) {
        const std::int64_t tb = tau_a_via_blocker(I, a);
        if (tb != ic.value) throw InvariantViolation("tau_a by covers differs from the covering program");
        rep.result["tau_a_via_blocker"] = tb;
      }
    } else if (mem->parsed()) {
      const MonomialIdeal I = in.ideal();
      const ExponentVector a = parse_vector(a_text, I.vars());
      const PowerKind kind = parse_kind(power_text);
      const MembershipVerdict v =
          kind == PowerKind::symbolic ? in_symbolic_power(SquarefreeIdeal(I), k, a) : membership(kind, I, k, a);
      rep.query["command"] = "member";
      rep.query["power"] = power_text;
      rep.query["k"] = k;
      rep.query["a"] = a.entries();
      rep.result = {{"member", v.member}, {"value", v.value.str()}, {"threshold", k}};
      rep.witnesses = {{"program", rationals(v.witness)}};
      const char* inv_name = kind == PowerKind::ordinary ? "nu_a" : kind == PowerKind::closure ? "nu*_a" : "tau_a";
      rep.line(a.monomial_string() + (v.member ? " is" : " is not") + " in the " + power_text + " power of order " +
               std::to_string(k));
      rep.line(std::string(inv_name) + " = " + v.value.str() + (v.member ? " >= " : " < ") + std::to_string(k));
      rep.line("witness " + rational_list(v.witness));
      code = v.member ? 0 : 1;
    } else if (sym->parsed()) {
      const SquarefreeIdeal sq(in.ideal());
      const SymbolicPower P = symbolic_power(sq, k);
      rep.query["command"] = "symbolic";
      rep.query["k"] = k;
      rep.result = {{"generators", monomials(P.generators)},
                    {"count", P.generators.size()},
                    {"max_degree", max_gen_degree(P.generators)}};
      rep.line("I^(" + std::to_string(k) + ") has " + std::to_string(P.generators.size()) +
               " minimal generators, max degree " + std::to_string(max_gen_degree(P.generators)));
      for (const auto& g : P.generators.generators()) rep.line("  " + g.monomial_string());
      if (scan) {
        const bool same = symbolic_power_by_scan(sq, k) == P.generators;
        rep.result["scan_agrees"] = same;
        rep.line(std::string("box scan ") + (same ? "agrees" : "DISAGREES"));
        if (!same) throw InvariantViolation("symbolic power: intersection and box scan disagree");
      }
      if (lemmas) {
        const GeneratorLemmaReport L = check_generator_lemmas(sq, k);
        json entries = json::array();
        for (const auto& e : L.entries) {
          entries.push_back({{"generator", e.generator.monomial_string()},
                             {"tau", e.tau},
                             {"parallel_height", e.parallel_height},
                             {"every_vertex_in_min_cover", e.every_vertex_in_min_cover},
                             {"ok", e.ok}});
          if (!e.ok) {
            rep.line("  lemma check fails at " + e.generator.monomial_string() + ": tau=" + std::to_string(e.tau) +
                     " height=" + std::to_string(e.parallel_height));
          }
        }
        rep.result["lemmas"] = {{"all_ok", L.all_ok}, {"entries", entries}};
        rep.line(std::string("generator lemmas: ") + (L.all_ok ? "all hold" : "FAIL"));
        code = L.all_ok ? 0 : 1;
      }
    } else if (clg->parsed()) {
      const MonomialIdeal I = in.ideal();
      const MonomialIdeal C = closure_power_generators(I, k);
      rep.query["command"] = "closure-gens";
      rep.query["k"] = k;
      const MonomialIdeal Ik = power(I, k);
      json outside = json::array();
      for (const auto& g : C.generators())
        if (!Ik.contains(g)) outside.push_back(g.monomial_string());
      rep.result = {{"generators", monomials(C)}, {"count", C.size()}, {"outside_ordinary_power", outside}};
      rep.line("closure of I^" + std::to_string(k) + " has " + std::to_string(C.size()) + " minimal generators");
      for (const auto& g : C.generators())
        rep.line("  " + g.monomial_string() + (Ik.contains(g) ? "" : "   (not in I^" + std::to_string(k) + ")"));
    } else if (blk->parsed()) {
      const Hypergraph H = in.hypergraph();
      const Hypergraph B = blocker(H);
      rep.query["command"] = "blocker";
      rep.result = hypergraph_json(B);
      rep.line(std::to_string(B.edge_count()) + " minimal covers: " + edges_string(B));
    } else if (par->parsed()) {
      const Hypergraph H = in.hypergraph();
      const ExponentVector a = parse_vector(a_text, static_cast<std::size_t>(H.vertices()));
      const ParallelHypergraph P = parallelization(H, a);
      rep.query["command"] = "parallelize";
      rep.query["a"] = a.entries();
      json labels = json::array();
      for (const auto& [i, j] : P.labels) labels.push_back({i, j});
      rep.result = hypergraph_json(P.graph);
      rep.result["labels"] = labels;
      rep.line("H^a has " + std::to_string(P.graph.vertices()) + " vertices and " +
               std::to_string(P.graph.edge_count()) + " edges");
      for (std::size_t v = 0; v < P.labels.size(); ++v)
        rep.line("  vertex " + std::to_string(v + 1) + " = (" + std::to_string(P.labels[v].first) + "," +
                 std::to_string(P.labels[v].second) + ")");
      rep.line("edges: " + edges_string(P.graph));
    } else if (mnr->parsed()) {
      const Hypergraph H = in.hypergraph();
      const Minor mi = minor(H, parse_int_set(ones_text), parse_int_set(zeros_text));
      const char* kind = mi.kind == MinorKind::regular ? "regular" : mi.kind == MinorKind::unit ? "unit" : "zero";
      rep.query["command"] = "minor";
      rep.query["ones"] = parse_int_set(ones_text);
      rep.query["zeros"] = parse_int_set(zeros_text);
      rep.result = {{"kind", kind}, {"graph", hypergraph_json(mi.graph)}, {"vertex_map", mi.vertex_map}};
      rep.line(std::string("minor kind: ") + kind);
      if (mi.kind == MinorKind::regular) rep.line("edges: " + edges_string(mi.graph));
    } else if (cnt->parsed()) {
      const MonomialIdeal I = in.ideal();
      const ContainmentReport c =
          check_containment(parse_power_expression(lhs_text, I), parse_power_expression(rhs_text, I));
      rep.query["command"] = "containment";
      rep.query["lhs"] = lhs_text;
      rep.query["rhs"] = rhs_text;
      add_containment(rep, c, "containment");
      code = c.holds ? 0 : 1;
    } else if (chk->parsed()) {
      rep.query["command"] = "check";
      rep.query["property"] = property;
      if (property == "konig" || property == "packing") {
        const Hypergraph H = in.hypergraph();
        if (property == "konig") {
          const auto n_ = nu(H), t_ = tau(H);
          rep.result = {{"konig", n_ == t_}, {"nu", n_}, {"tau", t_}};
          rep.line(std::string("konig: ") + (n_ == t_ ? "holds" : "FAILS") + " (nu=" + std::to_string(n_) +
                   ", tau=" + std::to_string(t_) + ")");
          code = n_ == t_ ? 0 : 1;
        } else {
          const PackingPropertyReport P = has_packing_property(H);
          rep.result = {{"packing", P.holds},
                        {"minors_checked", P.minors_checked},
                        {"unit_minors_skipped", P.unit_skipped},
                        {"zero_minors_skipped", P.zero_skipped}};
          rep.line(std::string("packing property: ") + (P.holds ? "holds" : "FAILS") + " (" +
                   std::to_string(P.minors_checked) + " regular minors, " + std::to_string(P.unit_skipped) +
                   " unit and " + std::to_string(P.zero_skipped) + " zero minors skipped)");
          if (P.violation) {
            rep.witnesses["minor"] = {{"ones", P.violation->first}, {"zeros", P.violation->second}};
            rep.line("  non-Konig minor: ones " + edge_string(P.violation->first) + ", zeros " +
                     edge_string(P.violation->second));
          }
          code = P.holds ? 0 : 1;
        }
      } else {
        const MonomialIdeal I = in.ideal();
        const BoxVerdict v = property == "normal"      ? check_normal(I, box)
                             : property == "mengerian" ? check_mengerian(I, box)
                                                       : check_fulkersonian(I, box);
        add_box_verdict(rep, v);
        code = v.holds ? 0 : 1;
      }
    } else if (exp->parsed()) {
      rep.query["command"] = "experiment";
      rep.query["name"] = experiment;
      if (experiment == "ryser") {
        const Hypergraph H = in.hypergraph();
        const int r = r_opt.value_or(H.rank());
        std::vector<int> parts;
        if (!parts_text.empty()) {
          parts = parse_int_set(parts_text);
        } else {
          const auto found = find_r_partition(H, r);
          if (!found) throw std::invalid_argument("the hypergraph is not " + std::to_string(r) + "-partite");
          parts = *found;
        }
        const RyserReport R = ryser_experiment(H, r, parts, box, kmax);
        rep.box = box;
        rep.query["r"] = r;
        rep.query["parts"] = parts;
        rep.query["kmax"] = kmax;
        rep.result["ryser_inequality"] = {{"holds_on_box", !R.ryser_violation}, {"points_checked", R.points_checked}};
        rep.line("tau(H^a) <= (r-1) nu(H^a) on box [0," + std::to_string(box) + "]^n: " +
                 (R.ryser_violation ? "VIOLATED" : "no violation") + " (" + std::to_string(R.points_checked) +
                 " points)");
        if (R.ryser_violation) rep.witnesses["ryser"] = R.ryser_violation->entries();
        for (std::size_t i = 0; i < R.conjectured.size(); ++i)
          add_containment(rep, R.conjectured[i], "conjectured_" + std::to_string(i + 1));
        for (std::size_t i = 0; i < R.proven.checks.size(); ++i)
          add_containment(rep, R.proven.checks[i], "proven_" + std::to_string(i + 1));
        code = R.no_violation() ? 0 : 1;
      } else if (experiment == "cc") {
        const MonomialIdeal I = in.ideal();
        const ConfortiCornuejolsReport C = conforti_cornuejols_experiment(I, box);
        rep.box = box;
        rep.result["hypothesis_holds"] = C.hypothesis_holds;
        rep.result["minors_checked"] = C.minors_checked;
        rep.line(std::string("mongrade = height on every minor: ") + (C.hypothesis_holds ? "yes" : "NO") + " (" +
                 std::to_string(C.minors_checked) + " minors)");
        if (C.violating_minor) {
          rep.witnesses["minor"] = {{"ones", C.violating_minor->first}, {"zeros", C.violating_minor->second}};
          rep.line("  minor with ones " + edge_string(C.violating_minor->first) + ", zeros " +
                   edge_string(C.violating_minor->second));
        }
        if (C.normality) add_box_verdict(rep, *C.normality);
        code = C.hypothesis_holds && (!C.normality || C.normality->holds) ? 0 : 1;
      } else if (experiment == "gaps") {
        const GapSuiteReport G = gap_property_suite(static_cast<std::size_t>(samples), seed);
        rep.seed = seed;
        rep.result = {{"nu_star_gap", G.bs_checked}, {"tau_h_nu", G.ha_checked}, {"tau_hstar_nu", G.tauhnu_checked}};
        rep.line("seed " + std::to_string(seed));
        rep.line("nu* < nu + min(m,n): " + std::to_string(G.bs_checked) + " instances hold");
        rep.line("tau_a <= h nu_a: " + std::to_string(G.ha_checked) + " instances hold");
        rep.line("tau <= h* nu: " + std::to_string(G.tauhnu_checked) + " instances hold");
      } else if (experiment == "huneke") {
        const HunekeReport Hk = huneke_counterexample(m, !no_materialize);
        rep.query["m"] = m;
        rep.result = {{"n", Hk.n},
                      {"height", Hk.height},
                      {"d", Hk.d},
                      {"ones_is_minimal_generator", Hk.ones_is_minimal_generator},
                      {"gap_lower_bound", Hk.gap_lower_bound},
                      {"ok", Hk.ok}};
        if (Hk.symbolic_degree) rep.result["symbolic_degree"] = *Hk.symbolic_degree;
        rep.witnesses["graph"] = hypergraph_json(Hk.graph);
        rep.line("n = " + std::to_string(Hk.n) + ", height = " + std::to_string(Hk.height) +
                 ", d(I) = " + std::to_string(Hk.d));
        rep.line(std::string("x1...xn is a minimal generator of I^(2): ") +
                 (Hk.ones_is_minimal_generator ? "yes" : "no"));
        if (Hk.symbolic_degree) rep.line("d(I^(2)) = " + std::to_string(*Hk.symbolic_degree));
        rep.line("d(I^(2)) - 2 d(I) >= " + std::to_string(Hk.gap_lower_bound));
        code = Hk.ok ? 0 : 1;
      } else if (experiment == "thm31") {
        const MonomialIdeal I = in.ideal();
        const TheoremContainmentReport T = verify_containment_theorem(I, kmax);
        rep.query["kmax"] = kmax;
        rep.result["r"] = T.r;
        rep.line("r = d(I) = " + std::to_string(T.r));
        for (std::size_t i = 0; i < T.checks.size(); ++i) add_containment(rep, T.checks[i], "check_" + std::to_string(i + 1));
      } else {
        const MonomialIdeal I = in.ideal();
        const EquiReport E = equi_condition_check(I, parse_numeric_function(f_text));
        rep.query["f"] = f_text;
        rep.result = {{"hypothesis_holds", E.hypothesis_holds},
                      {"n", E.n},
                      {"height", E.height},
                      {"d", E.d},
                      {"f_of_d", E.f_of_d},
                      {"inequality_holds", E.inequality_holds}};
        rep.line(std::string("every variable in a minimum minimal cover: ") + (E.hypothesis_holds ? "yes" : "no"));
        rep.line("n = " + std::to_string(E.n) + (E.inequality_holds ? " <= " : " > ") + std::to_string(E.height) +
                 " * f(" + std::to_string(E.d) + ") = " + std::to_string(E.height * E.f_of_d));
        code = E.hypothesis_holds && !E.inequality_holds ? 1 : 0;
      }
    } else if (res->parsed()) {
      const MonomialIdeal I = in.ideal();
      const ResurgenceReport R = resurgence_bounds(I, hmax, kmax);
      rep.query["command"] = "resurgence";
      rep.query["hmax"] = hmax;
      rep.query["kmax"] = kmax;
      json viol = json::array();
      std::vector<std::string> vs;
      for (const auto& [h, kk] : R.violations) {
        viol.push_back({h, kk});
        vs.push_back("(" + std::to_string(h) + "," + std::to_string(kk) + ")");
      }
      rep.result = {{"lower_bound", R.lower_bound.str()}, {"upper_bound", R.upper_bound.str()}, {"violations", viol}};
      rep.line("violations I^(h) not in I^k: " + (vs.empty() ? std::string("none") : join(vs, " ")));
      rep.line("resurgence >= " + R.lower_bound.str() + ", resurgence <= d(I) = " + R.upper_bound.str());
    }
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  rep.print(out, format == "json");
  return code;
}

}  // namespace monpow

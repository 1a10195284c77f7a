#include "cycloid/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "cycloid/cycles.hpp"
#include "cycloid/error.hpp"
#include "cycloid/net.hpp"
#include "cycloid/semantics.hpp"
#include "cycloid/transforms.hpp"

namespace cycloid::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CycloidParams params_from(const std::vector<Int>& v, std::size_t offset = 0) {
  return {v.at(offset), v.at(offset + 1), v.at(offset + 2), v.at(offset + 3)};
}

std::string coords(Point p) { return std::to_string(p.xi) + "," + std::to_string(p.eta); }

std::string flag(bool b) { return b ? "true" : "false"; }

std::string optional_value(std::optional<Int> v) { return v ? std::to_string(*v) : "n/a"; }

void print_witness(std::ostream& out, const CycleWitness& w) {
  out << "witness.i=" << w.i << "\nwitness.j=" << w.j << "\nwitness.u=" << w.u
      << "\nwitness.v=" << w.v << '\n';
}

std::string cycle_text(const GraphCycle& g) {
  std::string s;
  for (const auto& t : g.cycle) {
    if (!s.empty()) s += ';';
    s += node_key(Node::of(t));
  }
  return s;
}

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Integers following a "--" separator are lifted out before option parsing so
// that options may still follow them ("iso 1 1 2 1 -- 1 1 1 2 --oracle").
std::vector<Int> take_separated_integers(std::vector<std::string>& args) {
  std::vector<Int> lifted;
  auto sep = std::find(args.begin(), args.end(), "--");
  if (sep == args.end()) return lifted;
  auto it = sep + 1;
  for (; it != args.end() && is_integer_token(*it); ++it) {
    try {
      lifted.push_back(std::stoll(*it));
    } catch (const std::out_of_range&) {
      throw UsageError("integer out of range: " + *it);
    }
  }
  args.erase(sep, it);
  return lifted;
}

Int max_area_from_env() {
  const char* raw = std::getenv("CYCLOID_MAX_AREA");
  if (raw == nullptr || *raw == '\0') return kDefaultGraphMaxArea;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("CYCLOID_MAX_AREA must be a positive integer");
  return static_cast<Int>(v);
}

}  // namespace

VerifyReport verify_sweep(Int max, Int max_area) {
  VerifyReport report;
  auto fail = [&](const CycloidParams& p, const std::string& what) {
    report.violations.push_back("params=" + p.to_string() + " check=" + what);
  };
  for (Int a = 1; a <= max; ++a)
    for (Int b = 1; b <= max; ++b)
      for (Int g = 1; g <= max; ++g)
        for (Int d = 1; d <= max; ++d) {
          const CycloidParams p(a, b, g, d);
          ++report.checked;
          const CycloidNet net = build_net(p, max_area);
          if (static_cast<Int>(net.transitions().size()) != p.area() ||
              net.places().size() != 2 * net.transitions().size()) {
            fail(p, "area_law");
          }
          for (const auto& v : validate_net(net)) fail(p, std::string(to_string(v.kind)));

          const Int formula = cyc_formula_b(p).length();
          const Int lattice = cyc_lattice_min(p).length();
          const GraphCycle graph = shortest_cycle_graph(net, max_area);
          if (formula != lattice || formula != graph.length) {
            fail(p, "cyc_agreement formula=" + std::to_string(formula) + " lattice=" +
                        std::to_string(lattice) + " graph=" + std::to_string(graph.length));
          }
          if (!graph.acyclic.empty()) fail(p, "transition_on_no_cycle");
          if (formula > p.area()) fail(p, "cyc_bound");
          for (auto closed : {cyc_case_c(p), cyc_case_d(p), cyc_case_e(p)}) {
            if (closed && *closed != formula) fail(p, "closed_form");
          }
          const CycloidParams sym = symmetric_params(p);
          if (sym.area() != p.area() || cyc_formula_b(sym).length() != formula) {
            fail(p, "symmetric_invariance");
          }
          for (auto dir : {ShearDirection::reduce_gamma, ShearDirection::reduce_delta}) {
            if (!shear_applicable(p, dir)) continue;
            const CycloidParams sheared = shear(p, dir);
            if (sheared.area() != p.area() || cyc_formula_b(sheared).length() != formula) {
              fail(p, "shear_invariance");
            }
          }
        }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycloid Petri nets: construction, equivalence, isomorphism, minimal cycles"};
  app.name("cycloid");
  app.require_subcommand(1);

  std::vector<Int> values;
  std::string format = "dot";
  std::string out_path;
  std::string method = "formula";
  int steps = 8;
  bool with_oracle = false;
  std::string kinds = "preserve";
  std::string marking_text;
  int sim_steps = 10;
  std::uint64_t seed = 1;
  Int verify_max = 3;

  auto* info = app.add_subcommand("info", "area, minimal cycle, regularity and corners");
  info->add_option("params", values, "A B G D")->expected(0, 4);

  auto* net_cmd = app.add_subcommand("net", "export the built net");
  net_cmd->add_option("params", values, "A B G D")->expected(0, 4);
  net_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  net_cmd->add_option("--out", out_path, "output file (default: standard output)");

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two points");
  equiv->add_option("values", values, "A B G D -- X1 Y1 X2 Y2")->expected(0, 8);

  auto* canon = app.add_subcommand("canonical", "canonical representative of a point");
  canon->add_option("values", values, "A B G D -- X Y")->expected(0, 6);

  auto* cyc_cmd = app.add_subcommand("cyc", "minimal cycle length");
  cyc_cmd->add_option("params", values, "A B G D")->expected(0, 4);
  cyc_cmd->add_option("--method", method, "formula, lattice, graph or all")
      ->check(CLI::IsMember({"formula", "lattice", "graph", "all"}));

  auto* iso = app.add_subcommand("iso", "isomorphism of two cycloids");
  iso->add_option("values", values, "A1 B1 G1 D1 -- A2 B2 G2 D2")->expected(0, 8);
  iso->add_option("--steps", steps, "closure depth")->check(CLI::NonNegativeNumber);
  iso->add_flag("--oracle", with_oracle, "also run the exhaustive net isomorphism search");
  iso->add_option("--kinds", kinds, "place kind matching: preserve, swap or ignore")
      ->check(CLI::IsMember({"preserve", "swap", "ignore"}));

  auto* sim = app.add_subcommand("sim", "play the token game with random choices");
  sim->add_option("params", values, "A B G D")->expected(0, 4);
  sim->add_option("--marking", marking_text, "F:x,y,B:x,y,...")->required();
  sim->add_option("--steps", sim_steps, "number of firings")->check(CLI::NonNegativeNumber);
  sim->add_option("--seed", seed, "random seed");

  auto* verify = app.add_subcommand("verify", "exhaustive invariant sweep over [1,N]^4");
  verify->add_option("--max", verify_max, "largest parameter value")->check(CLI::PositiveNumber);

  std::vector<std::string> remaining = args;
  try {
    const std::vector<Int> separated = take_separated_integers(remaining);
    std::vector<std::string> reversed(remaining.rbegin(), remaining.rend());
    app.parse(reversed);
    values.insert(values.end(), separated.begin(), separated.end());
    const auto* chosen = app.get_subcommands().front();
    const std::size_t wanted = chosen == equiv || chosen == iso ? 8 : chosen == canon ? 6
                               : chosen == verify                 ? 0
                                                                  : 4;
    if (values.size() != wanted) {
      throw UsageError(chosen->get_name() + " expects " + std::to_string(wanted) +
                       " integers, got " + std::to_string(values.size()));
    }
  } catch (const UsageError& e) {
    err << "usage-error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage-error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Int max_area = max_area_from_env();

    if (info->parsed()) {
      const CycloidParams p = params_from(values);
      const CycleWitness w = cyc(p);
      const Corners c = corners(p);
      out << "params=" << p.alpha() << ',' << p.beta() << ',' << p.gamma() << ',' << p.delta() << '\n'
          << "area=" << p.area() << '\n'
          << "cyc=" << w.length() << '\n';
      print_witness(out, w);
      out << "regular=" << flag(p.regular()) << '\n'
          << "coregular=" << flag(p.coregular()) << '\n'
          << "case_c=" << optional_value(cyc_case_c(p)) << '\n'
          << "case_d=" << optional_value(cyc_case_d(p)) << '\n'
          << "case_e=" << optional_value(cyc_case_e(p)) << '\n'
          << "corner.O=" << coords(c.o) << '\n'
          << "corner.P=" << coords(c.p) << '\n'
          << "corner.R=" << coords(c.r) << '\n'
          << "corner.Q=" << coords(c.q) << '\n';
    } else if (net_cmd->parsed()) {
      const CycloidNet net = build_net(params_from(values), max_area);
      const std::string text = format == "dot" ? export_dot(net) : export_json(net);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        file << text;
        if (!file) {
          err << "io-error: cannot write " << out_path << '\n';
          return 1;
        }
        out << "written=" << out_path << '\n';
      }
    } else if (equiv->parsed()) {
      const CycloidParams p = params_from(values);
      const Point x1{values[4], values[5]}, x2{values[6], values[7]};
      if (const auto w = equivalence_witness(p, x1, x2)) {
        out << "equivalent (" << w->m << ',' << w->n << ")\n";
      } else {
        out << "not equivalent\n";
      }
    } else if (canon->parsed()) {
      const CycloidParams p = params_from(values);
      out << "canonical=" << coords(canonical(p, {values[4], values[5]})) << '\n';
    } else if (cyc_cmd->parsed()) {
      const CycloidParams p = params_from(values);
      if (method == "formula") {
        const CycleWitness w = cyc(p);
        out << "cyc=" << w.length() << '\n';
        print_witness(out, w);
      } else if (method == "lattice") {
        const CycleWitness w = cyc_lattice_min(p);
        out << "cyc=" << w.length() << '\n';
        print_witness(out, w);
      } else if (method == "graph") {
        const GraphCycle g = shortest_cycle_graph(build_net(p, max_area), max_area);
        out << "cyc=" << g.length << "\ncycle=" << cycle_text(g) << '\n';
      } else {
        const CycleWitness formula = cyc_formula_b(p);
        const CycleWitness lattice = cyc_lattice_min(p);
        const GraphCycle graph = shortest_cycle_graph(build_net(p, max_area), max_area);
        out << "cyc.formula=" << formula.length() << "\ncyc.lattice=" << lattice.length()
            << "\ncyc.graph=" << graph.length << '\n';
        if (formula.length() != lattice.length() || formula.length() != graph.length) {
          out << "agreement=no\n";
          err << "internal-error: methods disagree for " << p.to_string() << '\n';
          return 1;
        }
        out << "agreement=yes\ncyc=" << formula.length() << '\n';
        print_witness(out, cyc(p, {.cross_check_lattice = true}));
        out << "cycle=" << cycle_text(graph) << '\n';
      }
    } else if (iso->parsed()) {
      const CycloidParams p1 = params_from(values), p2 = params_from(values, 4);
      out << "area1=" << p1.area() << "\narea2=" << p2.area() << '\n';
      out << "closure=" << (are_isomorphic_by_closure(p1, p2, steps) ? "isomorphic" : "not-shown")
          << '\n';
      if (with_oracle) {
        const PlaceKindMatching mode = kinds == "preserve" ? PlaceKindMatching::preserve
                                       : kinds == "swap"   ? PlaceKindMatching::uniform_swap
                                                           : PlaceKindMatching::ignore;
        const Int cap = std::getenv("CYCLOID_MAX_AREA") ? max_area : kDefaultOracleMaxArea;
        const auto found = find_net_isomorphism(build_net(p1, cap), build_net(p2, cap), mode, cap);
        out << "oracle=" << (found ? "isomorphic" : "not-isomorphic") << '\n';
        if (found) out << "kinds_swapped=" << flag(found->kinds_swapped) << '\n';
      }
    } else if (sim->parsed()) {
      const CycloidParams p = params_from(values);
      const CycloidNet net = build_net(p, max_area);
      Marking m = parse_marking(p, marking_text);
      std::mt19937_64 rng(seed);
      out << "step=0 marking=" << format_marking(m) << '\n';
      int step = 1;
      for (; step <= sim_steps; ++step) {
        const auto choices = enabled_set(net, m);
        if (choices.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
        const TransitionId t = *std::next(choices.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
        m = fire(net, m, t);
        out << "step=" << step << " fire=" << node_key(Node::of(t)) << " marking=" << format_marking(m)
            << '\n';
      }
      out << "status=" << (step <= sim_steps ? "deadlock" : "completed") << '\n';
    } else if (verify->parsed()) {
      const VerifyReport report = verify_sweep(verify_max, max_area);
      for (const auto& v : report.violations) out << "violation: " << v << '\n';
      out << "checked=" << report.checked << "\nviolations=" << report.violations.size() << '\n';
      return report.violations.empty() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage-error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain-error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "internal-error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cycloid::cli

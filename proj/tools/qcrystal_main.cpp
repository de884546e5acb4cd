// Command-line driver: exposes every verification suite plus direct
// operator inspection, with JSON or text reports.  Exit code contract:
// 0 all pass, 1 any fail, 2 usage error.

#include <CLI11.hpp>
#include <iostream>

#include "qcrystal/checks.hpp"

using namespace qcrystal;
using namespace qcrystal::cli;

namespace {

int emit_and_exit(std::vector<CheckReport> reports, const std::string& format) {
  sort_reports(reports);
  std::cout << emit(reports, format);
  if (format == "json") std::cout << "\n";
  return all_pass(reports) ? 0 : 1;
}

// Direct inspection of a truncated operator entry image.
std::vector<CheckReport> soibelman_inspect(const SuiteParams& p) {
  using namespace soibelman;
  int i = 1, j = 1;
  if (!p.entry.empty()) {
    auto comma = p.entry.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--entry expects i,j");
    i = std::stoi(p.entry.substr(0, comma));
    j = std::stoi(p.entry.substr(comma + 1));
  }
  Context ctx(p.n, p.cutoff, p.window, p.weyl_word());
  std::map<std::string, std::string> params{
      {"n", std::to_string(p.n)},   {"q", p.q},
      {"cutoff", std::to_string(p.cutoff)}, {"window", std::to_string(p.window)},
      {"entry", std::to_string(i) + "," + std::to_string(j)}, {"mode", p.mode}};
  std::ostringstream witness;
  // a few interior columns as a sample of the operator's action
  int shown = 0;
  if (p.mode == "leading") {
    ctx.for_each_interior(1, [&](long col) {
      if (shown >= 5) return;
      auto lim = pi0_gp_column(ctx, i, j, col, p.scaled);
      witness << "col " << col << ": ";
      for (const auto& [r, v] : lim.entries) witness << "(" << r << ") " << rat_to_string(v) << " ";
      if (lim.entries.empty()) witness << "0";
      witness << "; ";
      ++shown;
    });
  } else if (p.mode == "float") {
    Rat qr = p.q_rat();
    FloatMode mode{static_cast<double>(numerator(qr)) / static_cast<double>(denominator(qr))};
    fnalg::Word w{fnalg::Gen{i, j}};
    MonomialOp<FloatMode> op(ctx, mode, w, 1.0);
    ctx.for_each_interior(1, [&](long col) {
      if (shown >= 5) return;
      witness << "col " << col << ": ";
      for (const auto& [r, v] : op.apply(col)) witness << "(" << r << ") " << v << " ";
      witness << "; ";
      ++shown;
    });
  } else if (p.mode == "exact") {
    ExactMode mode{p.q_rat()};
    fnalg::Word w{fnalg::Gen{i, j}};
    MonomialOp<ExactMode> op(ctx, mode, w, Rat(1));
    ctx.for_each_interior(1, [&](long col) {
      if (shown >= 5) return;
      witness << "col " << col << ": ";
      for (const auto& [r, v] : op.apply(col)) witness << "(" << r << ") " << rat_to_string(v) << " ";
      witness << "; ";
      ++shown;
    });
  } else {
    throw std::invalid_argument("unknown mode: " + p.mode);
  }
  return {pass_report("soibelman-entry", params, witness.str())};
}

std::vector<CheckReport> normal_form_command(const SuiteParams& p) {
  fnalg::Algebra alg(p.n);
  fnalg::FnAlgElem x = parse_algebra_expr(alg, p.expr);
  std::map<std::string, std::string> params{{"n", std::to_string(p.n)}, {"expr", p.expr}};
  return {pass_report("normal-form", params, x.to_string())};
}

std::vector<CheckReport> rep_command(const SuiteParams& p) {
  Rep r = parse_rep_expr(p.rep);
  auto rel = verify_uq_relations(r);
  std::map<std::string, std::string> params{{"rep", p.rep}};
  std::ostringstream witness;
  witness << "dim " << r.dim() << "; weights";
  for (const auto& w : r.weights) witness << " (" << w.to_string() << ")";
  if (rel.pass) return {pass_report("rep-info", params, witness.str())};
  return {fail_report("rep-info", params, rel.failed_relation + " " + rel.witness)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcrystal: exact crystal-lattice toolkit for quantized function algebras"};
  app.require_subcommand(1);

  SuiteParams p;
  std::string format = "json";
  app.add_option("--format", format, "output format: json|text")->capture_default_str();
  app.add_option("--seed", p.seed, "seed for randomized sampling")->capture_default_str();

  std::vector<std::string> suites{"uq-relations", "frt-confluence", "qdet",
                                  "star",         "dual-lattice",   "double-dual",
                                  "orthogonal-split", "triangular", "rstar",
                                  "scaled-generation", "commuting-square", "pipelines",
                                  "crystal-limit", "all"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : suites) {
    CLI::App* s = app.add_subcommand(name, "run the " + name + " suite");
    s->fallthrough();
    s->add_option("--n", p.n, "rank bound");
    s->add_option("--power", p.power, "tensor power bound");
    s->add_option("--q", p.q, "rational evaluation point, e.g. 1/10");
    s->add_option("--cutoff", p.cutoff, "half-line truncation N");
    s->add_option("--window", p.window, "window truncation M");
    s->add_option("--words", p.words, "number of sampled words");
    s->add_option("--max-len", p.max_len, "maximum sampled word length");
    s->add_option("--word", p.word, "reduced word override, e.g. 1,2,1");
    s->add_option("--rep", p.rep, "module expression, e.g. tensor(fund(1),fund(1))");
    s->add_flag("--scaled", p.scaled, "use scaled generators in limits");
    subs[name] = s;
  }
  CLI::App* soib = app.add_subcommand("soibelman", "inspect a truncated operator entry");
  soib->fallthrough();
  soib->add_option("--n", p.n, "rank");
  soib->add_option("--q", p.q, "rational q");
  soib->add_option("--cutoff", p.cutoff, "half-line truncation N");
  soib->add_option("--window", p.window, "window truncation M");
  soib->add_option("--entry", p.entry, "generator indices i,j");
  soib->add_option("--mode", p.mode, "exact|float|leading");
  soib->add_option("--word", p.word, "reduced word override");
  soib->add_flag("--scaled", p.scaled, "scale by t^{min(i-j,0)}");

  CLI::App* comp = app.add_subcommand("compare", "compare the two pipelines at fixed q");
  comp->fallthrough();
  comp->add_option("--n", p.n, "rank");
  comp->add_option("--q", p.q, "rational q");
  comp->add_option("--cutoff", p.cutoff, "half-line truncation N");
  comp->add_option("--window", p.window, "window truncation M");
  comp->add_option("--word", p.word, "reduced word override");

  CLI::App* nf = app.add_subcommand("normal-form", "canonical form of an algebra expression");
  nf->fallthrough();
  nf->add_option("--n", p.n, "rank");
  nf->add_option("--expr", p.expr, "expression, e.g. u(1,1)*u(2,2)")->required();

  CLI::App* repc = app.add_subcommand("rep", "inspect a module expression");
  repc->fallthrough();
  repc->add_option("--expr", p.rep, "module expression, e.g. hw(tensor(fund(1),fund(1)),2)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return emit_and_exit(run_suite(name, p), format);
    if (soib->parsed()) return emit_and_exit(soibelman_inspect(p), format);
    if (comp->parsed()) return emit_and_exit(suite_pipelines(p), format);
    if (nf->parsed()) return emit_and_exit(normal_form_command(p), format);
    if (repc->parsed()) return emit_and_exit(rep_command(p), format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

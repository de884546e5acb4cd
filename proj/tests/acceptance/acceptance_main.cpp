// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "qcrystal/checks.hpp"

using namespace qcrystal;
using namespace qcrystal::cli;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = untimed
  std::function<Outcome()> run;
};

Outcome from_reports(const std::vector<CheckReport>& reports) {
  Outcome o;
  o.pass = all_pass(reports);
  int passed = 0;
  for (const auto& r : reports)
    if (r.status == CheckReport::Status::Pass) ++passed;
  o.detail = std::to_string(passed) + "/" + std::to_string(reports.size()) + " checks";
  if (!o.pass) {
    for (const auto& r : reports)
      if (r.status == CheckReport::Status::Fail) {
        o.detail += "; first failure: " + r.check + " (" + params_key(r.params) + ")";
        if (r.witness) o.detail += " " + *r.witness;
        break;
      }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "U_t relation suite on tensor powers (n <= 3, m <= 3, exact)", 30.0, [] {
                        SuiteParams p;
                        p.n = 3;
                        p.power = 3;
                        return from_reports(suite_uq_relations(p));
                      }});
  criteria.push_back({2, "FRT confluence and pairing-oracle equivalence (200 seeded words)", 60.0,
                      [] {
                        SuiteParams p;
                        p.n = 2;
                        p.words = 200;
                        p.max_len = 6;
                        p.seed = 42;
                        return from_reports(suite_frt_confluence(p));
                      }});
  criteria.push_back({3, "quantum determinant: D = 1 and centrality (n <= 2, exact)", 0.0, [] {
                        SuiteParams p;
                        p.n = 2;
                        return from_reports(suite_qdet(p));
                      }});
  criteria.push_back({4, "star/cofactor involution and operator-adjoint oracle (1e-12)", 0.0, [] {
                        SuiteParams p;
                        p.n = 2;
                        return from_reports(suite_star(p));
                      }});
  criteria.push_back({5, "dual-lattice proposition with weight refinement and strictness", 0.0,
                      [] {
                        SuiteParams p;
                        p.n = 3;
                        return from_reports(suite_dual_lattice(p));
                      }});
  criteria.push_back({6, "double-dual lemma (exact)", 0.0, [] {
                        SuiteParams p;
                        p.n = 3;
                        return from_reports(suite_double_dual(p));
                      }});
  criteria.push_back({7, "orthogonal lattice decomposition and nondegeneracy", 0.0, [] {
                        SuiteParams p;
                        p.n = 2;
                        return from_reports(suite_orthogonal_split(p));
                      }});
  criteria.push_back({8, "triangular decomposition over R+/R- with A0 coefficients", 120.0, [] {
                        SuiteParams p;
                        p.n = 2;
                        return from_reports(suite_triangular(p));
                      }});
  criteria.push_back({9, "star scaling, R-span behaviour and O(G) in O(K) at generators", 0.0,
                      [] {
                        SuiteParams p;
                        p.n = 2;
                        return from_reports(suite_rstar(p));
                      }});
  criteria.push_back({10, "scaled generation certificates with nonnegative exponents", 0.0, [] {
                        SuiteParams p;
                        p.n = 2;
                        return from_reports(suite_scaled_generation(p));
                      }});
  criteria.push_back({11, "commuting square theta_q o phi_F = phi_F o theta_q (n <= 3)", 0.0, [] {
                        SuiteParams p;
                        p.n = 3;
                        p.q = "1/2";
                        return from_reports(suite_commuting_square(p));
                      }});
  criteria.push_back({12, "pipeline equality at fixed q (interior deviation <= 1e-12)", 0.0, [] {
                        SuiteParams p;
                        p.n = 2;
                        p.q = "1/2";  // the suite runs 1/2 and 1/10
                        p.cutoff = 16;
                        p.window = 8;
                        return from_reports(suite_pipelines(p));
                      }});
  criteria.push_back({13, "crystallization equality: exact leading-order limits + 1e-6", 120.0,
                      [] {
                        SuiteParams p;
                        p.n = 2;
                        p.cutoff = 16;
                        p.window = 8;
                        return from_reports(suite_crystal_limit(p));
                      }});

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = c.budget_seconds == 0.0 || elapsed < c.budget_seconds;
    bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%s; %.1f s%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str(), elapsed,
                in_budget ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria pass\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}

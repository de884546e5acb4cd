#include <catch2/catch_amalgamated.hpp>

#include "qcrystal/rep.hpp"

using namespace qcrystal;
using cartan::simple_root;

TEST_CASE("fundamental representation") {
  SECTION("dimension") { REQUIRE(fundamental_rep(2).dim() == 3); }
  SECTION("rank 1 actions") {
    Rep v = fundamental_rep(1);
    REQUIRE(v.E(1) * linalg::unit_vec(2, 1) == linalg::unit_vec(2, 0));
    REQUIRE(v.F(1) * linalg::unit_vec(2, 0) == linalg::unit_vec(2, 1));
    Vec ke1 = v.k(1) * linalg::unit_vec(2, 0);
    REQUIRE(ke1[0] == RatFunc::t_pow(1));
    REQUIRE(verify_uq_relations(v).pass);
  }
  SECTION("weight string") {
    for (int n = 1; n <= 3; ++n) {
      Rep v = fundamental_rep(n);
      REQUIRE(v.weights[0] == Weight::fundamental(n, 1));
      for (int j = 1; j <= n; ++j)
        REQUIRE(v.weights[j] == v.weights[j - 1] - simple_root(n, j));
    }
  }
}

TEST_CASE("relation verifier") {
  SECTION("fundamental reps pass") {
    for (int n = 1; n <= 3; ++n) REQUIRE(verify_uq_relations(fundamental_rep(n)).pass);
  }
  SECTION("tensor squares pass") {
    Rep v1 = fundamental_rep(1);
    REQUIRE(verify_uq_relations(tensor_rep(v1, v1)).pass);
  }
  SECTION("triple tensor for n=2 passes") {
    REQUIRE(verify_uq_relations(tensor_power(fundamental_rep(2), 3)).pass);
  }
  SECTION("perturbed action fails with a witness") {
    Rep v = tensor_rep(fundamental_rep(1), fundamental_rep(1));
    v.f[0].at(1, 0) += RatFunc::t();
    auto report = verify_uq_relations(v);
    REQUIRE_FALSE(report.pass);
    REQUIRE(report.failed_relation == "E F commutator");
    REQUIRE(!report.witness.empty());
  }
}

TEST_CASE("tensor products") {
  SECTION("dimensions multiply") {
    for (int n = 1; n <= 3; ++n)
      REQUIRE(tensor_rep(fundamental_rep(n), fundamental_rep(n)).dim() == (n + 1) * (n + 1));
  }
  SECTION("weight multiplicities of V (x) V for n=1") {
    Rep vv = tensor_rep(fundamental_rep(1), fundamental_rep(1));
    REQUIRE(vv.weight_space(Weight({2})).size() == 1);
    REQUIRE(vv.weight_space(Weight({0})).size() == 2);
    REQUIRE(vv.weight_space(Weight({-2})).size() == 1);
  }
}

TEST_CASE("sl2 divided power modules") {
  for (long m = 1; m <= 4; ++m) {
    Rep v = sl2_module(m);
    REQUIRE(v.dim() == m + 1);
    REQUIRE(verify_uq_relations(v).pass);
    REQUIRE(v.weights.front() == Weight({m}));
    REQUIRE(v.weights.back() == Weight({-m}));
  }
}

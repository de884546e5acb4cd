#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcrystal/fnalg.hpp"
#include "qcrystal/pairing.hpp"

using namespace qcrystal;
using namespace qcrystal::fnalg;

namespace {

Word random_word(int n, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, max_len), idx(1, n + 1);
  Word w(len(rng));
  for (auto& g : w) g = Gen{idx(rng), idx(rng)};
  return w;
}

}  // namespace

TEST_CASE("normal form basics") {
  Algebra alg(1);
  SECTION("empty word is the unit") {
    REQUIRE(alg.normal_form(Word{}) == alg.one());
    REQUIRE(alg.one().to_string() == "1");
  }
  SECTION("same-column straightening") {
    // u21 u11 = t^-1 u11 u21
    FnAlgElem x = alg.normal_form(Word{Gen{2, 1}, Gen{1, 1}});
    FnAlgElem expected = RatFunc::t_pow(-1) * alg.mul(alg.gen(1, 1), alg.gen(2, 1));
    REQUIRE(x == expected);
  }
  SECTION("diagonal substitution") {
    // u11 u22 = 1 + t u12 u21
    FnAlgElem x = alg.mul(alg.gen(1, 1), alg.gen(2, 2));
    FnAlgElem expected = alg.one() + RatFunc::t() * alg.mul(alg.gen(1, 2), alg.gen(2, 1));
    REQUIRE(x == expected);
  }
  SECTION("reversed diagonal without the determinant rule") {
    Algebra raw(1, false);
    // u22 u11 = u11 u22 - (t - 1/t) u12 u21
    FnAlgElem x = raw.normal_form(Word{Gen{2, 2}, Gen{1, 1}});
    FnAlgElem expected = raw.mul(raw.gen(1, 1), raw.gen(2, 2)) -
                         (RatFunc::t() - RatFunc::t_pow(-1)) * raw.mul(raw.gen(1, 2), raw.gen(2, 1));
    REQUIRE(x == expected);
  }
  SECTION("canonical text") {
    FnAlgElem x = alg.mul(alg.gen(1, 2), alg.gen(1, 2)) - RatFunc::t() * alg.gen(2, 1);
    REQUIRE(x.to_string() == "-t*u(2,1) + u(1,2)^2");
  }
}

TEST_CASE("quantum determinant") {
  SECTION("rank 1 expansion") {
    Algebra alg(1, false);
    FnAlgElem d = alg.qdet_raw();
    FnAlgElem expected =
        alg.mul(alg.gen(1, 1), alg.gen(2, 2)) - RatFunc::t() * alg.mul(alg.gen(1, 2), alg.gen(2, 1));
    REQUIRE(alg.normal_form(d) == expected);
  }
  SECTION("normal form of D is 1") {
    for (int n = 1; n <= 2; ++n) {
      Algebra alg(n);
      REQUIRE(alg.qdet() == alg.one());
    }
  }
  SECTION("D is central before imposing the relation") {
    for (int n = 1; n <= 2; ++n) {
      Algebra raw(n, false);
      FnAlgElem d = raw.normal_form(raw.qdet_raw());
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
          FnAlgElem u = raw.gen(i, j);
          REQUIRE(raw.mul(d, u) == raw.mul(u, d));
        }
    }
  }
}

TEST_CASE("star structure") {
  SECTION("rank 1 generator images") {
    Algebra alg(1);
    REQUIRE(alg.star(alg.gen(1, 1)) == alg.gen(2, 2));
    REQUIRE(alg.star(alg.gen(2, 1)) == -(RatFunc::t_pow(-1) * alg.gen(1, 2)));
    REQUIRE(alg.star(alg.gen(1, 2)) == -(RatFunc::t() * alg.gen(2, 1)));
    REQUIRE(alg.star(alg.gen(2, 2)) == alg.gen(1, 1));
  }
  SECTION("involutive on generators up to rank 2") {
    for (int n = 1; n <= 2; ++n) {
      Algebra alg(n);
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j)
          REQUIRE(alg.star(alg.star(alg.gen(i, j))) == alg.gen(i, j));
    }
  }
  SECTION("anti-multiplicative on sampled monomials") {
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 2; ++n) {
      Algebra alg(n);
      for (int trial = 0; trial < 6; ++trial) {
        FnAlgElem x = alg.normal_form(random_word(n, 2, rng));
        FnAlgElem y = alg.normal_form(random_word(n, 2, rng));
        REQUIRE(alg.star(alg.mul(x, y)) == alg.mul(alg.star(y), alg.star(x)));
      }
    }
  }
}

TEST_CASE("antipode") {
  SECTION("rank 1 generator image") {
    Algebra alg(1);
    REQUIRE(alg.antipode(alg.gen(1, 1)) == alg.gen(2, 2));
  }
  SECTION("counit identity for n=2") {
    Algebra alg(2);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        FnAlgElem acc;
        for (int k = 1; k <= 3; ++k)
          acc = acc + alg.mul(alg.antipode(alg.gen(i, k)), alg.gen(k, j));
        REQUIRE(acc == (i == j ? alg.one() : FnAlgElem()));
      }
  }
  SECTION("unit is fixed") {
    Algebra alg(2);
    REQUIRE(alg.antipode(alg.one()) == alg.one());
  }
}

TEST_CASE("confluence under randomized rewrite order") {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 2; ++n) {
    Algebra alg(n);
    for (int trial = 0; trial < 40; ++trial) {
      Word w = random_word(n, 6, rng);
      FnAlgElem nf = alg.normal_form(w);
      for (int rep = 0; rep < 3; ++rep) REQUIRE(alg.normal_form_randomized(w, rng) == nf);
    }
  }
}

TEST_CASE("pairing oracle") {
  SECTION("generator values") {
    Algebra alg(1);
    UtWord k1{{UtToken::Kind::K, 1}};
    REQUIRE(evaluate_pairing(1, alg.gen(1, 1), k1) == RatFunc::t());
    REQUIRE(evaluate_pairing(1, alg.gen(1, 2), UtWord{}) == RatFunc());
    UtWord f1{{UtToken::Kind::F, 1}};
    REQUIRE(evaluate_pairing(1, alg.gen(2, 1), f1) == RatFunc(1));
  }
  SECTION("normal form agrees with the raw word as a functional") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 2; ++n) {
      Algebra alg(n);
      auto family = ut_monomial_family(n, 2);
      for (int trial = 0; trial < 8; ++trial) {
        Word w = random_word(n, 4, rng);
        FnAlgElem raw;
        raw.add(w, RatFunc(1));
        FnAlgElem nf = alg.normal_form(w);
        for (const auto& a : family)
          REQUIRE(evaluate_pairing(n, raw, a) == evaluate_pairing(n, nf, a));
      }
    }
  }
  SECTION("determinant pairs as the counit") {
    std::mt19937_64 rng(11);
    Algebra alg(1, false);
    FnAlgElem d = alg.normal_form(alg.qdet_raw());
    std::uniform_int_distribution<int> kind(0, 3), count(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
      UtWord a;
      bool has_ef = false;
      for (int p = count(rng); p > 0; --p) {
        int k = kind(rng);
        if (k <= 1) has_ef = true;
        a.push_back({static_cast<UtToken::Kind>(k), 1});
      }
      REQUIRE(evaluate_pairing(1, d, a) == (has_ef ? RatFunc() : RatFunc(1)));
    }
  }
  SECTION("bialgebra compatibility on generators") {
    // (x y)(a) = sum x(a_(1)) y(a_(2)) for a in {E_i, F_i, K_i}
    for (int n = 1; n <= 2; ++n) {
      Algebra alg(n);
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j)
          for (int k = 1; k <= n + 1; ++k)
            for (int l = 1; l <= n + 1; ++l) {
              FnAlgElem x = alg.gen(i, j), y = alg.gen(k, l);
              FnAlgElem xy = alg.mul(x, y);
              for (int g = 1; g <= n; ++g) {
                UtWord eg{{UtToken::Kind::E, g}}, fg{{UtToken::Kind::F, g}},
                    kg{{UtToken::Kind::K, g}}, kginv{{UtToken::Kind::Kinv, g}};
                // Delta(E) = E (x) K^-1 + 1 (x) E
                REQUIRE(evaluate_pairing(n, xy, eg) ==
                        evaluate_pairing(n, x, eg) * evaluate_pairing(n, y, kginv) +
                            evaluate_pairing(n, x, UtWord{}) * evaluate_pairing(n, y, eg));
                // Delta(F) = F (x) 1 + K (x) F
                REQUIRE(evaluate_pairing(n, xy, fg) ==
                        evaluate_pairing(n, x, fg) * evaluate_pairing(n, y, UtWord{}) +
                            evaluate_pairing(n, x, kg) * evaluate_pairing(n, y, fg));
                // Delta(K) = K (x) K
                REQUIRE(evaluate_pairing(n, xy, kg) ==
                        evaluate_pairing(n, x, kg) * evaluate_pairing(n, y, kg));
              }
            }
    }
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "qcrystal/cartan.hpp"

using namespace qcrystal;
using namespace qcrystal::cartan;

TEST_CASE("cartan matrix of type A") {
  REQUIRE(cartan_matrix(1).a == std::vector<std::vector<long>>{{2}});
  REQUIRE(cartan_matrix(2).a == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});
  auto cd = cartan_matrix(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) REQUIRE(cd.a[i][j] == cd.a[j][i]);
}

TEST_CASE("weight pairing") {
  SECTION("(alpha_1, alpha_1) = 2 for several ranks") {
    for (int n = 1; n <= 4; ++n)
      REQUIRE(weight_pairing(simple_root(n, 1), simple_root(n, 1)) == Rat(2));
  }
  SECTION("defining property against fundamentals, n=2") {
    Weight w1 = Weight::fundamental(2, 1);
    REQUIRE(weight_pairing(w1, simple_root(2, 2)) == Rat(0));
    REQUIRE(weight_pairing(w1, simple_root(2, 1)) == Rat(1));
  }
  SECTION("(varpi, varpi) = 1/2 for n=1") {
    Weight w = Weight::fundamental(1, 1);
    REQUIRE(weight_pairing(w, w) == Rat(1, 2));
  }
  SECTION("(alpha_i, alpha_j) recovers the Cartan matrix, n=4") {
    auto cd = cartan_matrix(4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        REQUIRE(weight_pairing(simple_root(4, i), simple_root(4, j)) == Rat(cd.a[i - 1][j - 1]));
  }
  SECTION("positive definite on the real span (leading minors), n<=4") {
    // Gram matrix of fundamental weights is the inverse Cartan matrix;
    // check leading principal minors are positive via Fraction-free minors.
    for (int n = 1; n <= 4; ++n) {
      for (int k = 1; k <= n; ++k) {
        // determinant of the k x k leading block of the inverse Cartan
        // matrix, computed over rationals by Gaussian elimination
        std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) m[i][j] = inverse_cartan_entry(n, i + 1, j + 1);
        Rat det(1);
        for (int c = 0; c < k; ++c) {
          int sel = -1;
          for (int i = c; i < k; ++i)
            if (m[i][c] != 0) {
              sel = i;
              break;
            }
          REQUIRE(sel >= 0);
          if (sel != c) {
            std::swap(m[sel], m[c]);
            det = -det;
          }
          det *= m[c][c];
          for (int i = c + 1; i < k; ++i) {
            Rat f = m[i][c] / m[c][c];
            for (int j = c; j < k; ++j) m[i][j] -= f * m[c][j];
          }
        }
        REQUIRE(det > 0);
      }
    }
  }
}

TEST_CASE("rho") {
  REQUIRE(rho(2) == Weight({1, 1}));
  for (int i = 1; i <= 3; ++i) REQUIRE(weight_pairing(rho(3), simple_root(3, i)) == Rat(1));
  REQUIRE(weight_pairing(2 * rho(1), simple_root(1, 1)) == Rat(2));
}

TEST_CASE("longest word") {
  REQUIRE(longest_word(1).letters == std::vector<int>{1});
  REQUIRE(longest_word(2).letters == std::vector<int>{1, 2, 1});
  REQUIRE(longest_word(3).length() == 6);
  SECTION("root permutation criterion, brute force") {
    for (int n = 1; n <= 4; ++n) REQUIRE(is_longest_word(longest_word(n), n));
    // a non-reduced word of the right length fails
    WeylWord bad;
    bad.letters = {1, 1, 1};
    REQUIRE_FALSE(is_longest_word(bad, 2));
  }
}

TEST_CASE("minus w0") {
  SECTION("agrees with the Weyl word computation") {
    for (int n = 1; n <= 4; ++n) {
      WeylWord w0 = longest_word(n);
      for (int i = 1; i <= n; ++i) {
        Weight w = Weight::fundamental(n, i);
        REQUIRE(minus_w0(w) == minus_w0_via_word(w0, w));
      }
    }
    REQUIRE(minus_w0(Weight({1, 0})) == Weight({0, 1}));
  }
  SECTION("rank 1 weights are self dual") { REQUIRE(minus_w0(Weight({5})) == Weight({5})); }
  SECTION("rho is fixed for n=3") { REQUIRE(minus_w0(rho(3)) == rho(3)); }
  SECTION("involution preserving the pairing") {
    Weight a({2, -1, 3}), b({0, 1, -2});
    REQUIRE(minus_w0(minus_w0(a)) == a);
    REQUIRE(weight_pairing(minus_w0(a), minus_w0(b)) == weight_pairing(a, b));
  }
}

TEST_CASE("weight parsing") {
  REQUIRE(Weight::parse("1,0") == Weight({1, 0}));
  REQUIRE(Weight::parse("-2,3,0") == Weight({-2, 3, 0}));
  REQUIRE(Weight({1, 0}).to_string() == "1,0");
}

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcrystal/ratfunc.hpp"

using namespace qcrystal;
using ratfield::division_by_zero;
using ratfield::not_in_a0_error;
using ratfield::Poly;

namespace {

RatFunc tp(long k) { return RatFunc::t_pow(k); }

// Random rational function with valuation >= 0, for the A0 closure checks.
RatFunc random_a0_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4), coeff(-5, 5);
  auto rand_poly = [&](bool unit_at_zero) {
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    if (unit_at_zero && c[0] == 0) c[0] = 1;
    return Poly(c);
  };
  Poly num = rand_poly(false);
  Poly den = rand_poly(true);  // den(0) != 0 keeps the value in A0
  return RatFunc(num, den);
}

}  // namespace

TEST_CASE("field arithmetic reaches canonical forms") {
  RatFunc one_plus_t(Poly({Rat(1), Rat(1)}));
  RatFunc t = RatFunc::t();

  SECTION("t/(1+t) + 1/(1+t) = 1") {
    RatFunc a = t / one_plus_t, b = RatFunc(1) / one_plus_t;
    REQUIRE(a + b == RatFunc(1));
  }
  SECTION("(1/t) * t^2 = t") { REQUIRE(tp(-1) * (t * t) == t); }
  SECTION("((1-t)/(1+t)) / (1-t) = 1/(1+t)") {
    RatFunc one_minus_t(Poly({Rat(1), Rat(-1)}));
    REQUIRE((one_minus_t / one_plus_t) / one_minus_t == RatFunc(1) / one_plus_t);
  }
  SECTION("division by zero is rejected") {
    REQUIRE_THROWS_AS(t / RatFunc(), division_by_zero);
  }
}

TEST_CASE("valuation at zero") {
  RatFunc one_plus_t(Poly({Rat(1), Rat(1)}));
  REQUIRE(*(tp(2) / one_plus_t).valuation_at_zero() == 2);
  REQUIRE(*tp(-1).valuation_at_zero() == -1);
  REQUIRE_FALSE(RatFunc().valuation_at_zero().has_value());
}

TEST_CASE("A0 membership") {
  RatFunc one_minus_t(Poly({Rat(1), Rat(-1)}));
  REQUIRE((RatFunc(1) / one_minus_t).is_in_a0());
  REQUIRE_FALSE(tp(-1).is_in_a0());
  REQUIRE(tp(3).is_in_a0());
}

TEST_CASE("limit at t = 0") {
  RatFunc one_plus_t(Poly({Rat(1), Rat(1)}));
  RatFunc one_minus_t(Poly({Rat(1), Rat(-1)}));
  REQUIRE((one_plus_t / one_minus_t).limit_t0() == Rat(1));
  REQUIRE((RatFunc::t() / one_plus_t).limit_t0() == Rat(0));
  REQUIRE_THROWS_AS(tp(-1).limit_t0(), not_in_a0_error);
}

TEST_CASE("evaluation at rational points") {
  RatFunc one_minus_t(Poly({Rat(1), Rat(-1)}));
  REQUIRE((RatFunc::t() * RatFunc::t()).eval_at(Rat(1, 2)) == Rat(1, 4));
  REQUIRE((RatFunc(1) / one_minus_t).eval_at(Rat(1, 2)) == Rat(2));
  REQUIRE_THROWS_AS((RatFunc(1) / one_minus_t).eval_at(Rat(1)), pole_error);
}

TEST_CASE("canonical form is association independent") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    RatFunc a = random_a0_element(rng), b = random_a0_element(rng), c = random_a0_element(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("valuation is a discrete valuation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> shift(-3, 3);
  auto val = [](const RatFunc& f) { return f.valuation_at_zero(); };
  for (int trial = 0; trial < 300; ++trial) {
    RatFunc f = random_a0_element(rng) * tp(shift(rng));
    RatFunc g = random_a0_element(rng) * tp(shift(rng));
    if (f.is_zero() || g.is_zero()) continue;
    REQUIRE(*val(f * g) == *val(f) + *val(g));
    RatFunc s = f + g;
    if (!s.is_zero()) {
      REQUIRE(*val(s) >= std::min(*val(f), *val(g)));
      if (*val(f) != *val(g)) REQUIRE(*val(s) == std::min(*val(f), *val(g)));
    }
  }
}

TEST_CASE("A0 is a ring and the crystal limit is a homomorphism") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    RatFunc a = random_a0_element(rng), b = random_a0_element(rng);
    REQUIRE(a.is_in_a0());
    REQUIRE(b.is_in_a0());
    REQUIRE((a + b).is_in_a0());
    REQUIRE((a * b).is_in_a0());
    REQUIRE((a + b).limit_t0() == a.limit_t0() + b.limit_t0());
    REQUIRE((a * b).limit_t0() == a.limit_t0() * b.limit_t0());
  }
}

TEST_CASE("laurent detection") {
  RatFunc one_plus_t(Poly({Rat(1), Rat(1)}));
  REQUIRE(tp(-3).is_laurent());
  REQUIRE((RatFunc(5) * tp(2)).is_laurent());
  REQUIRE(RatFunc(1).is_laurent());
  REQUIRE_FALSE((RatFunc(1) / one_plus_t).is_laurent());
}

TEST_CASE("q-integers are balanced") {
  // [2] = t + t^-1, [3] = t^2 + 1 + t^-2
  REQUIRE(q_int(2) == tp(1) + tp(-1));
  REQUIRE(q_int(3) == tp(2) + RatFunc(1) + tp(-2));
  REQUIRE(q_int(1) == RatFunc(1));
  REQUIRE(q_factorial(3) == q_int(2) * q_int(3));
}

TEST_CASE("rational string round trip") {
  REQUIRE(ratfield::rat_to_string(Rat(3, 2)) == "3/2");
  REQUIRE(ratfield::rat_to_string(Rat(-4)) == "-4");
  REQUIRE(ratfield::rat_from_string("3/2") == Rat(3, 2));
  REQUIRE(ratfield::rat_from_string("-7") == Rat(-7));
}

#include <doctest.h>

#include "gluecoeff/theta.hpp"

using namespace gluecoeff;

TEST_CASE("theta construction and guard") {
  Theta t = make_theta(5, 8, 7);
  CHECK(t.num() == 5);
  CHECK(t.den() == 8);
  CHECK(t.guard_bound() == 7);
  CHECK(make_theta(2, 5, 2).str() == "2/5");
  CHECK_THROWS_AS(make_theta(1, 2, 4), GuardViolation);

  // reduced before the guard is applied: 10/16 is 5/8
  CHECK(make_theta(10, 16, 7) == make_theta(5, 8, 7));
  CHECK_THROWS_AS(make_theta(10, 16, 8), GuardViolation);
  CHECK(make_theta(-3, 7, 6).num() == -3);
  CHECK_THROWS_AS(make_theta(3, -7, 6), std::invalid_argument);
  CHECK(make_theta(3, 7, 6).negated() == make_theta(-3, 7, 6));
}

TEST_CASE("ceil and floor of multiples") {
  Theta t = make_theta(5, 8, 7);
  CHECK(ceil_mult(t, 3) == 2);
  CHECK(floor_mult(t, 3) == 1);
  for (Mult m = 1; m <= 7; ++m) {
    CHECK(t.ceil_mult(m) == t.floor_mult(m) + 1);
    CHECK(t.floor_mult(-m) == -t.ceil_mult(m));
  }
  CHECK_THROWS_AS(t.ceil_mult(8), GuardViolation);

  Theta n = make_theta(-2, 5, 4);
  CHECK(n.ceil_mult(3) == -1);  // -6/5
  CHECK(n.floor_mult(3) == -2);
}

TEST_CASE("delta") {
  for (Mult a = 1; a <= 6; ++a) CHECK(delta(make_theta(3, 7, 6), a, a) == a);
  CHECK(delta(make_theta(5, 13, 12), 2, 3) == 1);
  CHECK(delta(make_theta(2, 5, 2), 2, 1) == 1);
}

TEST_CASE("kappa and ind") {
  Theta t = make_theta(2, 5, 4);
  CHECK(kappa(t, end_data({2}, {1, 1})) == 1);
  CHECK(kappa(t, end_data({1, 1}, {1, 1})) == 2);
  CHECK(ind_theta(t, {1, 1}, {1, 1}) == 2);
  CHECK(ind_theta(make_theta(5, 8, 7), {3, 3, 1}, {5, 2}) == 0);
  for (Mult a = 1; a <= 4; ++a) CHECK(ind_theta(t, {a}, {a}) == 0);

  EndData s;
  s.a = {1};
  s.a_prime = {2};
  s.b = {3};
  CHECK(kappa(t, s) == 1 + 1 - 1);
}

TEST_CASE("end data checks") {
  Theta t = make_theta(2, 5, 4);
  CHECK_THROWS_AS(kappa(t, end_data({2}, {1})), SumMismatch);
  CHECK_THROWS_AS(kappa(make_theta(2, 5, 2), end_data({3}, {1, 2})), GuardViolation);
  CHECK_THROWS_AS(require_balanced(end_data({2, 0}, {2})), std::invalid_argument);

  EndData s = end_data({3, 1}, {4});
  s.b_prime = {};
  CHECK(s.prime_free());
  CHECK(s.size() == 3);
  CHECK(s.str() == "3,1 | 4");
  s.a_prime = {2};
  s.b_prime = {2};
  CHECK(s.str() == "3,1;2 | 4;2");
  CHECK(s.balanced());
}

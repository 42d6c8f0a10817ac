#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "gluecoeff/coefficients.hpp"

using namespace gluecoeff;

namespace {

// Straight transcription of the recursion: every subset of positions, checked
// against the prefix-sum condition after sorting. Exponential, fine for l <= 6.
BigInt f_oracle(const Theta& t, const MultList& a, const MultList& b) {
  if (a.empty()) return b.empty() ? 1 : 0;
  const Mult a1 = a.front();
  const MultList rest(a.begin() + 1, a.end());
  BigInt total = 0;
  const std::size_t l = b.size();
  for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) I.push_back(i);
    Mult before = 0;
    for (std::size_t n = 0; n + 1 < I.size(); ++n) before += b[I[n]];
    const Mult all = before + b[I.back()];
    if (!(before < a1 && a1 <= all)) continue;
    if (all == a1 && a.size() > 1) continue;
    BigInt prod = 1;
    Mult used = 0;
    for (std::size_t i : I) {
      prod *= static_cast<long>(delta(t, a1 - used, b[i]));
      used += b[i];
    }
    MultList reduced;
    for (std::size_t i = 0; i < l; ++i) {
      if (i == I.back() && a.size() > 1) reduced.push_back(sum_of(rest) - [&] {
        Mult s = 0;
        for (std::size_t j = 0; j < l; ++j)
          if (!(mask >> j & 1)) s += b[j];
        return s;
      }());
      else if (!(mask >> i & 1)) reduced.push_back(b[i]);
    }
    total += prod * f_oracle(t, rest, reduced);
  }
  return total;
}

}  // namespace

TEST_CASE("f examples") {
  Theta t = make_theta(2, 5, 4);
  CHECK(f_theta(t, {}, {}) == 1);
  for (Mult a = 1; a <= 4; ++a) {
    CHECK(f_theta(t, {a}, {a}) == a);
    CHECK(f_theta_via_trees(t, {a}, {a}) == a);
  }
  CHECK(f_theta(make_theta(2, 5, 2), {2}, {1, 1}) == 1);
  CHECK(f_theta_via_trees(make_theta(2, 5, 2), {2}, {1, 1}) == 1);
  CHECK_THROWS_AS(f_theta(t, {2}, {1}), SumMismatch);
  CHECK_THROWS_AS(f_theta(make_theta(2, 5, 2), {3}, {2, 1}), GuardViolation);
}

TEST_CASE("f recursion matches a brute-force transcription") {
  int compared = 0;
  for (Mult q : {7, 9, 11}) {
    for (Mult p = -q + 1; p < 2 * q; p += 2) {
      if (std::gcd(p, q) != 1) continue;
      Theta t = make_theta(p, q, q - 1);
      for (const auto& [a, b] : std::vector<std::pair<MultList, MultList>>{
               {{3}, {1, 1, 1}}, {{2, 1}, {1, 2}}, {{3, 2}, {1, 4}}, {{1, 3, 2}, {2, 2, 1, 1}},
               {{4, 1}, {2, 1, 2}}, {{2, 2, 2}, {3, 3}}, {{5}, {2, 2, 1}}, {{1, 1, 1}, {1, 1, 1}}}) {
        if (sum_of(a) >= q) continue;
        INFO(t.str(), " ", end_data(a, b).str());
        CHECK(f_theta(t, a, b) == f_oracle(t, a, b));
        ++compared;
      }
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("c examples") {
  EndData primed;
  primed.a_prime = {3};
  primed.b_prime = {3};
  CHECK(c_theta(make_theta(2, 7, 6), primed) == 3);
  CHECK(c_theta(make_theta(2, 5, 2), end_data({2}, {1, 1})) == 1);

  for (Mult a1 = 1; a1 <= 6; ++a1) {
    Theta t = make_theta(1, a1 + 1, a1);
    for (const Partition& b : all_partitions(a1)) {
      BigInt prod = 1;
      for (Mult x : b.parts()) prod *= static_cast<long>(x);
      CHECK(c_theta(t, end_data({a1}, b.parts())) == prod);
    }
  }
  // kappa 2: the two matchings of (1,1 | 1,1), each a product of c(1|1) = 1
  CHECK(c_theta(make_theta(2, 5, 4), end_data({1, 1}, {1, 1})) == 2);
  CHECK(c_theta(make_theta(2, 5, 4), end_data({1, 1}, {2})) == 0);
}

TEST_CASE("ratio orderings") {
  Theta t = make_theta(5, 8, 7);
  // ceil(a t)/a: 1 -> 1, 2 -> 1, 3 -> 2/3; 1 stays before 2
  CHECK(order_positive(t, {1, 2, 3}) == MultList{3, 1, 2});
  CHECK(is_ratio_ordered(t, order_positive(t, {1, 2, 3}), order_negative(t, {4, 2})));
  // stable on ties
  CHECK(order_positive(t, {3, 3}) == MultList{3, 3});
}

TEST_CASE("hyperbolic coefficients") {
  auto pos = OrbitKind::positive_hyperbolic();
  auto neg = OrbitKind::negative_hyperbolic();
  CHECK(c_hyperbolic(pos, end_data({1, 1}, {1, 1})) == 0);
  CHECK(c_hyperbolic(neg, end_data({2}, {2})) == 0);
  CHECK(c_hyperbolic(neg, end_data({3, 1}, {3, 1})) == 3);
  CHECK(c_hyperbolic(neg, end_data({3, 1}, {1, 3})) == 3);
  CHECK(c_hyperbolic(pos, end_data({2, 1}, {3})) == 0);
  CHECK(c_hyperbolic(pos, end_data({2, 1}, {1, 2})) == 2);
  CHECK_THROWS_AS(c_hyperbolic(OrbitKind::elliptic(make_theta(1, 3, 2)), end_data({1}, {1})), std::invalid_argument);
}

TEST_CASE("glue count and ech factor") {
  GluingInput in;
  in.orbits.push_back({OrbitKind::elliptic(make_theta(2, 5, 2)), end_data({2}, {1, 1})});
  CHECK(glue_count(in) == 1);
  in.eps_minus = -1;
  CHECK(glue_count(in) == -1);
  in.orbits.push_back({OrbitKind::negative_hyperbolic(), end_data({2}, {2})});
  CHECK(glue_count(in) == 0);
  in.eps_plus = 0;
  CHECK_THROWS_AS(glue_count(in), std::invalid_argument);

  CHECK(ech_glue_factor({{OrbitKind::elliptic(make_theta(5, 8, 7)), 7, 0}}) == 10);
  CHECK(ech_glue_factor({}) == 1);
  CHECK(ech_glue_factor({{OrbitKind::positive_hyperbolic(), 0, 0}, {OrbitKind::elliptic(make_theta(1, 3, 2)), 0, 0}}) ==
        1);
}

#include <doctest.h>

#include <set>

#include "gluecoeff/partitions.hpp"

using namespace gluecoeff;

namespace {

// p(n) for n <= 10, from the usual table
const Mult partition_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};

}  // namespace

TEST_CASE("partition basics") {
  Partition p{1, 3, 3};
  CHECK(p.parts() == MultList{3, 3, 1});
  CHECK(p.total() == 7);
  CHECK(p.str() == "(3,3,1)");
  CHECK(Partition{}.str() == "()");
  CHECK(p.joined(Partition{2}) == Partition{3, 3, 2, 1});
  for (Mult n = 0; n <= 10; ++n) {
    auto all = all_partitions(n);
    CHECK(static_cast<Mult>(all.size()) == partition_counts[n]);
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(all_partitions(4).front() == Partition{4});
  CHECK(all_partitions(4).back() == Partition{1, 1, 1, 1});
}

TEST_CASE("incoming and outgoing partitions") {
  Theta t = make_theta(5, 8, 7);
  CHECK(incoming_partition(t, 7) == Partition{3, 3, 1});
  CHECK(outgoing_partition(t, 7) == Partition{5, 2});
  CHECK(incoming_partition(t, 0).empty());
  CHECK(outgoing_partition(t, 0).empty());
  CHECK(incoming_partition_lattice(t, 7) == Partition{3, 3, 1});
  CHECK(incoming_partition_lattice(t, 3) == Partition{3});
  CHECK(incoming_partition_lattice(t, 1) == Partition{1});

  for (Mult M = 1; M <= 9; ++M) {
    Theta small = make_theta(1, M + 1, M);
    CHECK(incoming_partition(small, M) == Partition{M});
    CHECK(outgoing_partition(small, M) == Partition(MultList(static_cast<std::size_t>(M), 1)));
  }

  auto path = incoming_lattice_path(t, 7);
  CHECK(path.front() == std::pair<Mult, Mult>{0, 0});
  CHECK(path.back() == std::pair<Mult, Mult>{7, 5});
}

TEST_CASE("orbit partitions and factorials") {
  auto [pin, pout] = orbit_partitions(OrbitKind::positive_hyperbolic(), 3);
  CHECK(pin == Partition{1, 1, 1});
  CHECK(pout == Partition{1, 1, 1});
  auto [nin, nout] = orbit_partitions(OrbitKind::negative_hyperbolic(), 5);
  CHECK(nin == Partition{2, 2, 1});
  CHECK(nout == Partition{2, 2, 1});
  auto [ein, eout] = orbit_partitions(OrbitKind::elliptic(make_theta(5, 8, 7)), 7);
  CHECK(ein == Partition{3, 3, 1});
  CHECK(eout == Partition{5, 2});

  CHECK(OrbitKind::hyperbolic(4).tag() == OrbitKind::Tag::positive_hyperbolic);
  CHECK(OrbitKind::hyperbolic(-3).tag() == OrbitKind::Tag::negative_hyperbolic);

  CHECK(partition_factorial(Partition{}) == 1);
  CHECK(partition_factorial(Partition{2, 2, 1}) == 8);
  CHECK(partition_factorial(Partition{3}) == 3);
  CHECK(partition_factorial(Partition{5, 2}) == 10);
}

TEST_CASE("initial segments") {
  CHECK(is_initial_segment(Partition{3, 3}, Partition{3, 3, 1}));
  CHECK_FALSE(is_initial_segment(Partition{3, 1}, Partition{3, 3, 1}));
  CHECK(is_initial_segment(Partition{}, Partition{4, 2}));
  CHECK(is_initial_segment(Partition{4, 2}, Partition{4, 2}));
}

TEST_CASE("theta decompositions") {
  Theta t = make_theta(2, 5, 4);
  auto two = enumerate_theta_decompositions(t, end_data({1, 1}, {1, 1}));
  REQUIRE(two.size() == 2);
  for (const auto& d : two) {
    REQUIRE(d.components.size() == 2);
    for (const EndData& c : d.components) CHECK(kappa(t, c) == 1);
  }
  CHECK(enumerate_theta_decompositions(t, end_data({2}, {1, 1})).size() == 1);
  CHECK(enumerate_theta_decompositions(t, end_data({1, 1}, {2})).empty());
  CHECK_FALSE(has_theta_decomposition(t, end_data({1, 1}, {2})));
  CHECK_THROWS_AS(enumerate_theta_decompositions(t, end_data({1, 1}, {1})), SumMismatch);
  CHECK_THROWS_AS(enumerate_theta_decompositions(make_theta(2, 11, 10), end_data({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}),
                                                 SearchLimits{50}),
                  CapExceeded);
}

TEST_CASE("order examples") {
  Theta t = make_theta(5, 8, 7);
  for (const Partition& p : all_partitions(5)) {
    CHECK(ge_theta(make_theta(5, 8, 7), p, p));
    CHECK(ge_theta_ops(make_theta(5, 8, 7), p, p));
  }
  CHECK(ge_theta(t, Partition{3, 3, 1}, Partition{5, 2}));
  CHECK(ge_theta_ops(t, Partition{3, 3, 1}, Partition{5, 2}));
  Theta u = make_theta(2, 5, 4);
  CHECK_FALSE(ge_theta(u, Partition{1, 1}, Partition{2}));
  CHECK_FALSE(ge_theta_ops(u, Partition{1, 1}, Partition{2}));
}

// P^out is minimal but not least: (5,2) sits neither above nor below it.
TEST_CASE("outgoing partition is not comparable to everything") {
  for (Theta t : {make_theta(11, 13, 7), make_theta(24, 13, 7)}) {
    const Partition out = outgoing_partition(t, 7);
    CHECK(out == Partition{6, 1});
    CHECK_FALSE(ge_theta(t, out, Partition{5, 2}));
    CHECK_FALSE(ge_theta(t, Partition{5, 2}, out));
    CHECK_FALSE(ge_theta_ops(t, out, Partition{5, 2}));
    CHECK_FALSE(ge_theta_ops(t, Partition{5, 2}, out));
    for (const Partition& q : all_partitions(7))
      if (q != out) CHECK_FALSE(ge_theta(t, out, q));
  }
}

TEST_CASE("tfae") {
  Theta t = make_theta(5, 8, 7);
  for (Mult M = 0; M <= 7; ++M) {
    TfaeResult zero = tfae_check(t, 0, M);
    CHECK((zero.concatenation && zero.additivity && zero.path_concatenation && zero.initial_segment));
    TfaeResult full = tfae_check(t, M, M);
    CHECK((full.concatenation && full.additivity && full.path_concatenation && full.initial_segment));
  }
  TfaeResult r = tfae_check(t, 3, 7);
  CHECK(r.all_equal());
  // (3) starts (3,3,1); (3,1) does not
  CHECK(r.initial_segment);
  CHECK_FALSE(tfae_check(t, 4, 7).initial_segment);
  CHECK(tfae_check(t, 4, 7).all_equal());
}

TEST_CASE("indkey reduction") {
  Theta t = make_theta(5, 8, 7);
  IndkeyStep s = indkey_step(t, 7);
  CHECK(s.m == 1);
  CHECK(s.b_bar == 2);
  CHECK(s.reduced_in == Partition{3, 1});
  CHECK(s.reduced_out == Partition{2, 2});
  CHECK(s.deltas_all_one);
  CHECK(s.holds());

  IndkeyStep one = indkey_step(make_theta(3, 7, 6), 1);
  CHECK(one.m == 1);
  CHECK(one.b_bar == 0);
  CHECK(one.reduced_in.empty());
  CHECK(one.reduced_out.empty());
  CHECK(one.deltas_all_one);
}

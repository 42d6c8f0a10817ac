#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "gluecoeff/coefficients.hpp"
#include "gluecoeff/cokernel.hpp"

using namespace gluecoeff;

namespace {

std::vector<Theta> sample_thetas(Mult guard) {
  std::vector<Theta> out;
  for (Mult q = guard + 1; q <= guard + 4; ++q)
    for (Mult p : {Mult{1}, Mult{3}, Mult{5}, Mult{-2}, q + 2, 2 * q - 1})
      if (std::gcd(p, q) == 1) out.emplace_back(p, q, guard);
  return out;
}

std::vector<EndData> small_grid(Mult max_M, std::size_t max_N) {
  std::vector<EndData> out;
  for (Mult M = 1; M <= max_M; ++M)
    for (const Partition& a : all_partitions(M))
      for (const Partition& b : all_partitions(M))
        if (a.size() + b.size() <= max_N) out.push_back(end_data(a.parts(), b.parts()));
  return out;
}

// Every labelled assignment of ends to kappa components, each component
// nonempty and balanced; classes are these up to relabelling, so divide by kappa!.
struct Brute {
  std::uint64_t classes = 0;
  BigInt c = 0;
};

Brute brute_decompositions(const Theta& t, const EndData& s) {
  const Mult k = kappa(t, s);
  std::vector<std::pair<int, Mult>> elems;
  const MultList* sets[4] = {&s.a, &s.a_prime, &s.b, &s.b_prime};
  for (int set = 0; set < 4; ++set)
    for (Mult x : *sets[set]) elems.emplace_back(set, x);
  std::vector<int> label(elems.size(), 0);
  std::uint64_t labelled = 0;
  BigInt sum = 0;
  while (true) {
    std::vector<EndData> comps(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      EndData& c = comps[static_cast<std::size_t>(label[i])];
      MultList* dst[4] = {&c.a, &c.a_prime, &c.b, &c.b_prime};
      dst[elems[i].first]->push_back(elems[i].second);
    }
    bool ok = true;
    for (const EndData& c : comps) ok = ok && c.size() > 0 && c.balanced();
    if (ok) {
      ++labelled;
      BigInt prod = 1;
      for (const EndData& c : comps) prod *= c_theta(t, c);
      sum += prod;
    }
    std::size_t i = 0;
    while (i < label.size() && ++label[i] == k) label[i++] = 0;
    if (i == label.size()) break;
  }
  BigInt fact = 1;
  for (Mult i = 2; i <= k; ++i) fact *= static_cast<long>(i);
  Brute b;
  b.classes = labelled / fact.get_ui();
  b.c = sum / fact;
  return b;
}

}  // namespace

TEST_CASE("order is antisymmetric and transitive") {
  for (Mult M = 1; M <= 8; ++M) {
    for (const Theta& t : sample_thetas(M)) {
      auto parts = all_partitions(M);
      const std::size_t n = parts.size();
      std::vector<std::vector<bool>> ge(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ge[i][j] = ge_theta(t, parts[i], parts[j]);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(ge[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && ge[i][j]) CHECK_FALSE(ge[j][i]);
          for (std::size_t k = 0; k < n; ++k)
            if (ge[i][j] && ge[j][k]) CHECK(ge[i][k]);
        }
      }
    }
  }
}

TEST_CASE("kappa is additive over decompositions, each part kappa 1") {
  for (const EndData& s : small_grid(6, 6)) {
    for (const Theta& t : sample_thetas(6)) {
      const Mult k = kappa(t, s);
      CHECK(k >= 1);
      CHECK(ind_theta(t, s.a, s.b) == 2 * k - 2);
      for (const ThetaDecomposition& d : enumerate_theta_decompositions(t, s)) {
        CHECK(static_cast<Mult>(d.components.size()) == k);
        Mult sum = 0;
        for (const EndData& c : d.components) {
          CHECK(kappa(t, c) == 1);
          sum += kappa(t, c);
        }
        CHECK(sum == k);
      }
    }
  }
}

TEST_CASE("decompositions and c agree with labelled assignment") {
  int compared = 0;
  for (const EndData& s : small_grid(5, 6)) {
    for (const Theta& t : sample_thetas(5)) {
      if (kappa(t, s) > static_cast<Mult>(s.a.size())) continue;
      Brute b = brute_decompositions(t, s);
      CHECK(enumerate_theta_decompositions(t, s).size() == b.classes);
      CHECK(has_theta_decomposition(t, s) == (b.classes > 0));
      if (kappa(t, s) > 1) CHECK(c_theta(t, s) == b.c);
      ++compared;
    }
  }
  // with primes
  for (const Theta& t : sample_thetas(5)) {
    EndData s;
    s.a = {2};
    s.a_prime = {1, 2};
    s.b = {1, 1};
    s.b_prime = {3};
    Brute b = brute_decompositions(t, s);
    CHECK(enumerate_theta_decompositions(t, s).size() == b.classes);
    if (kappa(t, s) > 1) CHECK(c_theta(t, s) == b.c);
  }
  CHECK(compared > 100);
}

TEST_CASE("weights of admissible trees") {
  for (const EndData& s : small_grid(6, 5)) {
    if (s.size() < 3) continue;
    for (const auto& tree : enumerate_trees(s, true)) {
      if (!is_admissible(tree)) continue;
      EdgePairing p = canonical_pairing(tree);
      CHECK(is_valid_pairing(tree, p));
      for (const Theta& t : sample_thetas(6)) {
        const BigInt w = weight(t, tree, p);
        CHECK(w >= 1);
        CHECK(weight(t.negated(), reversed(tree), swapped(p)) == w);
      }
    }
  }
}

TEST_CASE("vertex balance of special windings") {
  int trees_checked = 0;
  for (const EndData& s : small_grid(6, 5)) {
    if (s.size() < 3) continue;
    for (const Theta& t : sample_thetas(6)) {
      if (kappa(t, s) != 1) continue;
      for (const auto& tree : enumerate_trees(s, true)) {
        const int n = tree.vertex_count();
        std::vector<int> labels;
        for (int v = 0; v < n; ++v)
          if (tree.is_leaf(v)) labels.push_back(tree.label(v));
        WindingAssignment w = special_windings(t, tree, {labels[0], labels[1], labels[2]});
        CHECK(vertex_balance_check(w));
        ++trees_checked;
      }
    }
  }
  CHECK(trees_checked > 50);

  // kappa 2 control
  Theta t = make_theta(2, 5, 4);
  auto tree = enumerate_trees(end_data({1, 1}, {1, 1}), true).front();
  bool any_fail = false;
  for (std::array<int, 3> triple : {std::array<int, 3>{1, 2, -1}, {1, -1, -2}, {2, -1, -2}, {1, 2, -2}})
    any_fail = any_fail || !vertex_balance_check(special_windings(t, tree, triple));
  CHECK(any_fail);
}

TEST_CASE("phi is a bijection onto admissible trees") {
  for (const EndData& s : small_grid(6, 6)) {
    if (s.size() < 3) continue;
    std::set<std::string> admissible, image;
    for (const auto& tree : enumerate_trees(s, true))
      if (is_admissible(tree)) admissible.insert(canonical_form(tree));
    auto families = enumerate_end_set_families(s);
    for (const EndSetFamily& e : families) image.insert(canonical_form(phi(e, s)));
    CHECK(image.size() == families.size());
    CHECK(image == admissible);
  }
}

TEST_CASE("incoming and outgoing partitions") {
  for (Mult M = 1; M <= 12; ++M) {
    for (const Theta& t : sample_thetas(M)) {
      const Partition in = incoming_partition(t, M), out = outgoing_partition(t, M);
      CHECK(in.total() == M);
      CHECK(out.total() == M);
      CHECK(incoming_partition_lattice(t, M) == in);
      CHECK(kappa(t, end_data(in.parts(), out.parts())) == 1);
      Mult ceil_sum = 0, floor_sum = 0;
      for (Mult x : in.parts()) ceil_sum += t.ceil_mult(x);
      for (Mult x : out.parts()) floor_sum += t.floor_mult(x);
      CHECK(ceil_sum == t.ceil_mult(M));
      CHECK(floor_sum == t.floor_mult(M));
      CHECK(outgoing_partition(t, M) == incoming_partition(t.negated(), M));
    }
  }
}

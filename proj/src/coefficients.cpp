#include "gluecoeff/coefficients.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace gluecoeff {

namespace {

using Key = std::pair<MultList, MultList>;

BigInt f_rec(const Theta& t, const MultList& a, const MultList& b, std::map<Key, BigInt>& memo) {
  if (a.empty()) return b.empty() ? BigInt(1) : BigInt(0);
  Key key{a, b};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Mult a1 = a.front();
  const bool last = a.size() == 1;
  const MultList rest_a(a.begin() + 1, a.end());
  BigInt total = 0;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(b.size(), false);

  std::function<void(std::size_t, Mult, const BigInt&)> pick = [&](std::size_t from, Mult sum, const BigInt& prod) {
    for (std::size_t i = from; i < b.size(); ++i) {
      const Mult next = sum + b[i];
      const BigInt term = prod * static_cast<long>(delta(t, a1 - sum, b[i]));
      if (next < a1) {
        used[i] = true;
        pick(i + 1, next, term);
        used[i] = false;
        continue;
      }
      if (next == a1 && !last) continue;
      // I ends at i; b_I keeps the unused entries in order, with the excess at i's slot
      MultList reduced;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (j == i) {
          if (!last) reduced.push_back(next - a1);
        } else if (!used[j]) {
          reduced.push_back(b[j]);
        }
      }
      total += term * f_rec(t, rest_a, reduced, memo);
    }
  };
  pick(0, 0, BigInt(1));
  memo.emplace(std::move(key), total);
  return total;
}

void check_inputs(const Theta& t, const MultList& a, const MultList& b) {
  EndData s = end_data(a, b);
  require_balanced(s);
  require_guarded(t, s.plus_total());
}

}  // namespace

BigInt f_theta(const Theta& t, const MultList& a, const MultList& b) {
  check_inputs(t, a, b);
  std::map<Key, BigInt> memo;
  return f_rec(t, a, b, memo);
}

BigInt f_theta_via_trees(const Theta& t, const MultList& a, const MultList& b) {
  check_inputs(t, a, b);
  if (a.empty()) return 1;
  if (a.size() == 1 && b.size() == 1) return BigInt(static_cast<long>(a.front()));
  const EndData s = end_data(a, b);
  BigInt total = 0;
  for (const EndSetFamily& e : enumerate_end_set_families(s)) {
    OrientedWeightedTree tree = phi(e, s);
    total += weight(t, tree, canonical_pairing(tree));
  }
  return total;
}

MultList order_positive(const Theta& t, MultList a) {
  std::stable_sort(a.begin(), a.end(), [&](Mult x, Mult y) {
    return static_cast<__int128>(t.ceil_mult(x)) * y < static_cast<__int128>(t.ceil_mult(y)) * x;
  });
  return a;
}

MultList order_negative(const Theta& t, MultList b) {
  std::stable_sort(b.begin(), b.end(), [&](Mult x, Mult y) {
    return static_cast<__int128>(t.floor_mult(x)) * y > static_cast<__int128>(t.floor_mult(y)) * x;
  });
  return b;
}

bool is_ratio_ordered(const Theta& t, const MultList& a, const MultList& b) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (static_cast<__int128>(t.ceil_mult(a[i - 1])) * a[i] > static_cast<__int128>(t.ceil_mult(a[i])) * a[i - 1])
      return false;
  for (std::size_t j = 1; j < b.size(); ++j)
    if (static_cast<__int128>(t.floor_mult(b[j - 1])) * b[j] < static_cast<__int128>(t.floor_mult(b[j])) * b[j - 1])
      return false;
  return true;
}

namespace {

BigInt c_base(const Theta& t, const EndData& s) {
  const std::size_t primes = s.a_prime.size() + s.b_prime.size();
  if (primes >= 2) {
    if (s.a.empty() && s.b.empty() && s.a_prime.size() == 1 && s.b_prime.size() == 1)
      return BigInt(static_cast<long>(s.a_prime.front()));
    return 0;
  }
  MultList a = order_positive(t, s.a);
  MultList b = order_negative(t, s.b);
  a.insert(a.end(), s.a_prime.begin(), s.a_prime.end());
  b.insert(b.end(), s.b_prime.begin(), s.b_prime.end());
  std::map<Key, BigInt> memo;
  return f_rec(t, a, b, memo);
}

}  // namespace

BigInt c_theta(const Theta& t, const EndData& s, SearchLimits limits) {
  const Mult k = kappa(t, s);
  if (k == 1) return c_base(t, s);
  BigInt total = 0;
  std::map<std::array<MultList, 4>, BigInt> seen;
  auto component_value = [&](const EndData& c) -> const BigInt& {
    std::array<MultList, 4> key{c.a, c.a_prime, c.b, c.b_prime};
    auto it = seen.find(key);
    if (it == seen.end()) it = seen.emplace(std::move(key), c_base(t, c)).first;
    return it->second;
  };
  for_each_theta_decomposition(
      t, s,
      [&](const ThetaDecomposition& d) {
        BigInt prod = 1;
        for (const EndData& c : d.components) {
          prod *= component_value(c);
          if (prod == 0) break;
        }
        total += prod;
        return true;
      },
      limits);
  return total;
}

BigInt c_hyperbolic(const OrbitKind& kind, const EndData& s) {
  if (!kind.is_hyperbolic()) throw std::invalid_argument("c_hyperbolic needs a hyperbolic orbit");
  require_balanced(s);
  MultList plus = s.a, minus = s.b;
  plus.insert(plus.end(), s.a_prime.begin(), s.a_prime.end());
  minus.insert(minus.end(), s.b_prime.begin(), s.b_prime.end());
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  if (plus != minus) return 0;
  if (kind.tag() == OrbitKind::Tag::positive_hyperbolic &&
      std::adjacent_find(plus.begin(), plus.end()) != plus.end())
    return 0;
  if (kind.tag() == OrbitKind::Tag::negative_hyperbolic &&
      std::any_of(plus.begin(), plus.end(), [](Mult x) { return x % 2 == 0; }))
    return 0;
  return partition_factorial(Partition(plus));
}

BigInt glue_count(const GluingInput& in, SearchLimits limits) {
  auto sign_ok = [](int e) { return e == 1 || e == -1; };
  if (!sign_ok(in.eps_plus) || !sign_ok(in.eps_minus)) throw std::invalid_argument("signs must be +1 or -1");
  for (const OrbitGluing& o : in.orbits) require_balanced(o.ends);
  BigInt out = in.eps_plus * in.eps_minus;
  for (const OrbitGluing& o : in.orbits) {
    out *= o.kind.is_elliptic() ? c_theta(o.kind.theta(), o.ends, limits) : c_hyperbolic(o.kind, o.ends);
  }
  return out;
}

BigInt ech_glue_factor(const std::vector<EchOrbit>& orbits) {
  BigInt out = 1;
  for (const EchOrbit& o : orbits) {
    out *= partition_factorial(orbit_partitions(o.kind, o.n_plus).second);
    out *= partition_factorial(orbit_partitions(o.kind, o.n_minus).first);
  }
  return out;
}

}  // namespace gluecoeff

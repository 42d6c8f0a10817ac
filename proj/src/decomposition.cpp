#include <functional>

#include "gluecoeff/partitions.hpp"

namespace gluecoeff {

namespace {

struct Element {
  int set;  // 0 = a, 1 = a', 2 = b, 3 = b'
  std::size_t index;
  Mult value;
};

// Restricted-growth assignment of elements to components: component c is opened
// by its first (smallest) element, so each class is visited exactly once with
// components sorted by their smallest index tuple.
void search(const Theta& t, const EndData& s, SearchLimits limits,
            const std::function<bool(const std::vector<int>&, const std::vector<Element>&, int)>& visit) {
  const Mult kap = kappa(t, s);
  std::vector<Element> elems;
  const MultList* sets[4] = {&s.a, &s.a_prime, &s.b, &s.b_prime};
  for (int k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < sets[k]->size(); ++i) elems.push_back({k, i, (*sets[k])[i]});
  const std::size_t plus_count = s.a.size() + s.a_prime.size();
  if (kap > static_cast<Mult>(plus_count)) return;

  std::vector<int> comp(elems.size(), -1);
  std::vector<Mult> balance;
  std::uint64_t nodes = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (stop) return;
    if (++nodes > limits.node_cap) throw CapExceeded("theta-decomposition search exceeded node cap");
    if (pos == elems.size()) {
      stop = !visit(comp, elems, static_cast<int>(balance.size()));
      return;
    }
    const Element& e = elems[pos];
    if (pos < plus_count) {
      const Mult opened = static_cast<Mult>(balance.size());
      const Mult remaining = static_cast<Mult>(plus_count - pos);
      // components already opened can take this element only if enough elements remain to open the rest
      if (opened + remaining - 1 >= kap) {
        for (std::size_t c = 0; c < balance.size(); ++c) {
          balance[c] += e.value;
          comp[pos] = static_cast<int>(c);
          rec(pos + 1);
          balance[c] -= e.value;
        }
      }
      if (opened < kap) {
        balance.push_back(e.value);
        comp[pos] = static_cast<int>(balance.size() - 1);
        rec(pos + 1);
        balance.pop_back();
      }
    } else {
      for (std::size_t c = 0; c < balance.size(); ++c) {
        if (balance[c] < e.value) continue;
        balance[c] -= e.value;
        comp[pos] = static_cast<int>(c);
        rec(pos + 1);
        balance[c] += e.value;
      }
    }
    comp[pos] = -1;
  };
  rec(0);
}

}  // namespace

void for_each_theta_decomposition(const Theta& t, const EndData& s,
                                  const std::function<bool(const ThetaDecomposition&)>& visit,
                                  SearchLimits limits) {
  search(t, s, limits, [&](const std::vector<int>& comp, const std::vector<Element>& elems, int n) {
    ThetaDecomposition d;
    d.components.resize(static_cast<std::size_t>(n));
    d.a_of.resize(s.a.size());
    d.a_prime_of.resize(s.a_prime.size());
    d.b_of.resize(s.b.size());
    d.b_prime_of.resize(s.b_prime.size());
    std::vector<int>* of[4] = {&d.a_of, &d.a_prime_of, &d.b_of, &d.b_prime_of};
    for (std::size_t p = 0; p < elems.size(); ++p) {
      const Element& e = elems[p];
      EndData& c = d.components[static_cast<std::size_t>(comp[p])];
      MultList* dest[4] = {&c.a, &c.a_prime, &c.b, &c.b_prime};
      dest[e.set]->push_back(e.value);
      (*of[e.set])[e.index] = comp[p];
    }
    for (const EndData& c : d.components)
      if (kappa(t, c) != 1) throw std::logic_error("decomposition component with kappa != 1");
    return visit(d);
  });
}

std::vector<ThetaDecomposition> enumerate_theta_decompositions(const Theta& t, const EndData& s,
                                                               SearchLimits limits) {
  std::vector<ThetaDecomposition> out;
  for_each_theta_decomposition(
      t, s,
      [&](const ThetaDecomposition& d) {
        out.push_back(d);
        return true;
      },
      limits);
  return out;
}

bool has_theta_decomposition(const Theta& t, const EndData& s, SearchLimits limits) {
  bool found = false;
  search(t, s, limits, [&](const std::vector<int>&, const std::vector<Element>&, int) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace gluecoeff

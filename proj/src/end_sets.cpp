#include <algorithm>
#include <functional>

#include "gluecoeff/trees.hpp"

namespace gluecoeff {

namespace {

// Labels are -1..-n; label -j carries b[j-1]. Sets are kept sorted decreasing.
Mult value_of(const MultList& b, int label) { return b[static_cast<std::size_t>(-label - 1)]; }

Mult set_sum(const MultList& b, const std::vector<int>& set) {
  Mult s = 0;
  for (int l : set) s += value_of(b, l);
  return s;
}

std::vector<int> all_labels(std::size_t n) {
  std::vector<int> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back(-static_cast<int>(j));
  return out;
}

struct Reduction {
  MultList a_bar, b_bar;
  std::vector<int> xi_inverse;  // position p (0-based) of the reduced data -> original label
};

// EC2 for E_1 and the reduced data of EC3; nullopt when EC2 fails.
std::optional<Reduction> reduce(const MultList& a, const MultList& b, const std::vector<int>& e1) {
  const int low = e1.back();
  const Mult total = set_sum(b, e1);
  const Mult rest = total - value_of(b, low);
  if (!(rest < a.front() && a.front() < total)) return std::nullopt;
  Reduction r;
  r.a_bar.assign(a.begin() + 1, a.end());
  for (int l : all_labels(b.size())) {
    bool in_e1 = std::find(e1.begin(), e1.end(), l) != e1.end();
    if (in_e1 && l != low) continue;
    r.xi_inverse.push_back(l);
    r.b_bar.push_back(l == low ? total - a.front() : value_of(b, l));
  }
  return r;
}

int xi(const Reduction& r, int label) {
  auto it = std::find(r.xi_inverse.begin(), r.xi_inverse.end(), label);
  if (it == r.xi_inverse.end()) return 0;
  return -static_cast<int>(it - r.xi_inverse.begin()) - 1;
}

int xi_inv(const Reduction& r, int reduced_label) {
  return r.xi_inverse[static_cast<std::size_t>(-reduced_label - 1)];
}

void enumerate(const MultList& a, const MultList& b, std::uint64_t cap, std::vector<EndSetFamily>& out) {
  if (a.empty()) {
    if (b.empty()) out.push_back({});
    return;
  }
  if (a.size() == 1) {
    out.push_back({all_labels(b.size())});
    if (out.size() > cap) throw CapExceeded("end-set family enumeration exceeded cap");
    return;
  }
  const std::size_t n = b.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> e1;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) e1.push_back(-static_cast<int>(j) - 1);
    auto red = reduce(a, b, e1);
    if (!red) continue;
    std::vector<EndSetFamily> sub;
    enumerate(red->a_bar, red->b_bar, cap, sub);
    for (const EndSetFamily& f : sub) {
      EndSetFamily e{e1};
      for (const auto& set : f) {
        std::vector<int> lifted;
        for (int l : set) lifted.push_back(xi_inv(*red, l));
        std::sort(lifted.begin(), lifted.end(), std::greater<>());
        e.push_back(std::move(lifted));
      }
      out.push_back(std::move(e));
      if (out.size() > cap) throw CapExceeded("end-set family enumeration exceeded cap");
    }
  }
}

bool member(const MultList& a, const MultList& b, EndSetFamily e) {
  if (e.size() != a.size()) return false;
  const std::vector<int> labels = all_labels(b.size());
  for (auto& set : e) {
    std::sort(set.begin(), set.end(), std::greater<>());
    if (set.empty() || std::adjacent_find(set.begin(), set.end()) != set.end()) return false;
    for (int l : set)
      if (l >= 0 || -l > static_cast<int>(b.size())) return false;
  }
  if (a.empty()) return b.empty();
  if (a.size() == 1) return e.front() == labels && sum_of(a) == sum_of(b);
  auto red = reduce(a, b, e.front());
  if (!red) return false;
  EndSetFamily reduced;
  for (std::size_t i = 1; i < e.size(); ++i) {
    std::vector<int> set;
    for (int l : e[i]) {
      int r = xi(*red, l);
      if (r == 0) return false;
      set.push_back(r);
    }
    reduced.push_back(std::move(set));
  }
  return member(red->a_bar, red->b_bar, std::move(reduced));
}

// Downward path from positive leaf 1 through joining vertices hanging off
// chain[0..], ending at `bottom` (a leaf or the splitting vertex).
OrientedWeightedTree build(const MultList& a, const MultList& b, const EndSetFamily& e) {
  OrientedWeightedTree t;
  TreeRoles roles;
  const std::vector<int>& e1 = e.front();
  const bool single = a.size() == 1;

  int top = t.add_leaf(1);
  std::vector<int> chain{top};
  const std::size_t joins = e1.size() - 1;
  for (std::size_t n = 0; n < joins; ++n) chain.push_back(t.add_internal());
  int split = -1, spare = -1;
  if (!single) {
    split = t.add_internal();
    chain.push_back(split);
  }
  Mult carried = a.front();
  for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
    t.add_edge(chain[n + 1], chain[n], carried);
    carried -= value_of(b, e1[n]);
  }
  for (std::size_t n = 0; n < joins; ++n) {
    int leaf = t.add_leaf(e1[n]);
    t.add_edge(leaf, chain[n + 1], value_of(b, e1[n]));
    roles.joining_for_negative[e1[n]] = chain[n + 1];
  }
  int low = t.add_leaf(e1.back());
  t.add_edge(low, chain.back(), value_of(b, e1.back()));
  if (single) {
    t.roles = roles;
    return t;
  }
  spare = t.add_leaf(2);
  const Mult excess = set_sum(b, e1) - a.front();
  t.add_edge(split, spare, excess);
  roles.splitting.push_back(split);

  auto red = *reduce(a, b, e1);
  EndSetFamily reduced;
  for (std::size_t i = 1; i < e.size(); ++i) {
    std::vector<int> set;
    for (int l : e[i]) set.push_back(xi(red, l));
    reduced.push_back(std::move(set));
  }
  OrientedWeightedTree bar = build(red.a_bar, red.b_bar, reduced);

  OrientedWeightedTree g;
  std::vector<int> map1(static_cast<std::size_t>(t.vertex_count()), -1);
  std::vector<int> map2(static_cast<std::size_t>(bar.vertex_count()), -1);
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v == spare) continue;
    map1[static_cast<std::size_t>(v)] = t.is_leaf(v) ? g.add_leaf(t.label(v)) : g.add_internal();
  }
  const int glued = bar.leaf(xi(red, e1.back()));
  for (int v = 0; v < bar.vertex_count(); ++v) {
    if (v == glued) continue;
    int lab = bar.label(v);
    if (lab == 0)
      map2[static_cast<std::size_t>(v)] = g.add_internal();
    else
      map2[static_cast<std::size_t>(v)] = g.add_leaf(lab > 0 ? lab + 1 : xi_inv(red, lab));
  }
  for (const TreeEdge& ed : t.edges())
    if (ed.head != spare)
      g.add_edge(map1[static_cast<std::size_t>(ed.tail)], map1[static_cast<std::size_t>(ed.head)], ed.mult);
  const int glued_edge = bar.incident(glued).front();
  for (int f = 0; f < bar.edge_count(); ++f) {
    if (f == glued_edge) continue;
    const TreeEdge& ed = bar.edge(f);
    g.add_edge(map2[static_cast<std::size_t>(ed.tail)], map2[static_cast<std::size_t>(ed.head)], ed.mult);
  }
  g.add_edge(map1[static_cast<std::size_t>(split)],
             map2[static_cast<std::size_t>(bar.edge(glued_edge).head)], excess);

  TreeRoles merged;
  merged.splitting.push_back(map1[static_cast<std::size_t>(split)]);
  for (int v : bar.roles->splitting) merged.splitting.push_back(map2[static_cast<std::size_t>(v)]);
  for (auto [lab, v] : roles.joining_for_negative) merged.joining_for_negative[lab] = map1[static_cast<std::size_t>(v)];
  for (auto [lab, v] : bar.roles->joining_for_negative)
    merged.joining_for_negative[xi_inv(red, lab)] = map2[static_cast<std::size_t>(v)];
  g.roles = merged;
  return g;
}

}  // namespace

std::vector<EndSetFamily> enumerate_end_set_families(const EndData& s, std::uint64_t cap) {
  require_balanced(s);
  const LeafData leaves = leaf_data(s, true);
  std::vector<EndSetFamily> out;
  enumerate(leaves.positive, leaves.negative, cap, out);
  return out;
}

bool is_end_set_family(const EndSetFamily& e, const EndData& s) {
  if (!s.balanced()) return false;
  const LeafData leaves = leaf_data(s, true);
  return member(leaves.positive, leaves.negative, e);
}

OrientedWeightedTree phi(const EndSetFamily& e, const EndData& s) {
  require_balanced(s);
  if (!is_end_set_family(e, s)) throw InvalidFamily(family_str(e) + " is not in E(" + s.str() + ")");
  const LeafData leaves = leaf_data(s, true);
  if (leaves.positive.empty()) throw InvalidFamily("empty end data has no tree");
  EndSetFamily sorted = e;
  for (auto& set : sorted) std::sort(set.begin(), set.end(), std::greater<>());
  return build(leaves.positive, leaves.negative, sorted);
}

std::string family_str(const EndSetFamily& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    for (std::size_t k = 0; k < e[i].size(); ++k) out += (k ? "," : "") + std::to_string(e[i][k]);
    out += "}";
  }
  return out + ")";
}

}  // namespace gluecoeff

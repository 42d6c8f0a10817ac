#include <algorithm>
#include <set>

#include "gluecoeff/trees.hpp"

namespace gluecoeff {

namespace {

void collect_up(const OrientedWeightedTree& t, int e, std::vector<int>& out) {
  int h = t.edge(e).head;
  if (t.is_leaf(h)) {
    if (t.label(h) > 0) out.push_back(t.label(h));
    return;
  }
  for (int f : t.incident(h))
    if (t.edge(f).tail == h) collect_up(t, f, out);
}

void collect_down(const OrientedWeightedTree& t, int e, std::vector<int>& out) {
  int v = t.edge(e).tail;
  if (t.is_leaf(v)) {
    if (t.label(v) < 0) out.push_back(t.label(v));
    return;
  }
  for (int f : t.incident(v))
    if (t.edge(f).head == v) collect_down(t, f, out);
}

std::vector<int> outgoing(const OrientedWeightedTree& t, int v) {
  std::vector<int> out;
  for (int e : t.incident(v))
    if (t.edge(e).tail == v) out.push_back(e);
  return out;
}

std::vector<int> incoming(const OrientedWeightedTree& t, int v) {
  std::vector<int> out;
  for (int e : t.incident(v))
    if (t.edge(e).head == v) out.push_back(e);
  return out;
}

bool internal_splitting(const OrientedWeightedTree& t, int v) { return !t.is_leaf(v) && t.is_splitting(v); }
bool internal_joining(const OrientedWeightedTree& t, int v) { return !t.is_leaf(v) && t.is_joining(v); }

}  // namespace

std::vector<int> up_leaves(const OrientedWeightedTree& t, int e) {
  std::vector<int> out;
  collect_up(t, e, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> down_leaves(const OrientedWeightedTree& t, int e) {
  std::vector<int> out;
  collect_down(t, e, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const OrientedWeightedTree& t) {
  if (!t.is_trivalent() || t.internal_vertices().empty()) return false;
  for (int v : t.internal_vertices())
    if (!(t.is_splitting(v) ^ t.is_joining(v))) return false;

  // (a)
  for (const TreeEdge& e : t.edges())
    if (internal_joining(t, e.tail) && internal_splitting(t, e.head)) return false;

  for (int v : t.internal_vertices()) {
    if (t.is_splitting(v)) {
      // (b)
      auto out = outgoing(t, v);
      for (int r = 0; r < 2; ++r) {
        int e1 = out[static_cast<std::size_t>(r)], e2 = out[static_cast<std::size_t>(1 - r)];
        if (!internal_splitting(t, t.edge(e2).head)) continue;
        auto i1s = up_leaves(t, e1);
        auto i2s = up_leaves(t, e2);
        for (int i1 : i1s)
          for (int i2 : i2s)
            if (!(i1 < i2)) return false;
      }
    } else {
      // (c)
      auto in = incoming(t, v);
      for (int r = 0; r < 2; ++r) {
        int e1 = in[static_cast<std::size_t>(r)], e2 = in[static_cast<std::size_t>(1 - r)];
        if (!internal_joining(t, t.edge(e2).tail)) continue;
        auto j1s = down_leaves(t, e1);
        auto j2s = down_leaves(t, e2);
        for (int j1 : j1s)
          for (int j2 : j2s)
            if (!(j1 > j2)) return false;
      }
    }
  }

  // (d)
  for (int e = 0; e < t.edge_count(); ++e) {
    int w = t.edge(e).tail, v = t.edge(e).head;
    if (!internal_splitting(t, w) || !internal_joining(t, v)) continue;
    std::vector<int> i1s, j1s, i2s, j2s;
    for (int f : outgoing(t, v)) collect_up(t, f, i1s);
    for (int f : incoming(t, w)) collect_down(t, f, j1s);
    for (int f : outgoing(t, w))
      if (f != e) collect_up(t, f, i2s);
    for (int f : incoming(t, v))
      if (f != e) collect_down(t, f, j2s);
    for (int i1 : i1s)
      for (int j1 : j1s)
        for (int i2 : i2s)
          for (int j2 : j2s)
            if (!(i1 > i2 || j1 < j2)) return false;
  }
  return true;
}

bool is_valid_pairing(const OrientedWeightedTree& t, const EdgePairing& p) {
  std::set<int> used;
  for (int v : t.internal_vertices()) {
    auto it = p.at.find(v);
    if (it == p.at.end()) return false;
    auto [ep, em] = it->second;
    if (ep == em) return false;
    const auto& inc = t.incident(v);
    if (std::find(inc.begin(), inc.end(), ep) == inc.end() || std::find(inc.begin(), inc.end(), em) == inc.end())
      return false;
    if (!used.insert(ep).second || !used.insert(em).second) return false;
  }
  if (p.at.size() != t.internal_vertices().size()) return false;
  if (static_cast<int>(used.size()) != t.edge_count() - 1) return false;
  return p.e0 >= 0 && p.e0 < t.edge_count() && !used.count(p.e0);
}

EdgePairing canonical_pairing(const OrientedWeightedTree& t) {
  if (!is_admissible(t)) throw NotAdmissible("canonical pairing requires an admissible trivalent tree");
  EdgePairing p;
  for (int v : t.internal_vertices()) {
    if (t.is_splitting(v)) {
      auto out = outgoing(t, v);
      int chosen = -1;
      for (int r = 0; r < 2; ++r) {
        auto mine = up_leaves(t, out[static_cast<std::size_t>(r)]);
        auto other = up_leaves(t, out[static_cast<std::size_t>(1 - r)]);
        if (mine.size() == 1 && mine.front() < other.front()) chosen = out[static_cast<std::size_t>(r)];
      }
      if (chosen < 0) throw NotAdmissible("no canonical e+ at a splitting vertex");
      p.at[v] = {chosen, incoming(t, v).front()};
    } else {
      auto in = incoming(t, v);
      int chosen = -1;
      for (int r = 0; r < 2; ++r) {
        auto mine = down_leaves(t, in[static_cast<std::size_t>(r)]);
        auto other = down_leaves(t, in[static_cast<std::size_t>(1 - r)]);
        if (mine.size() == 1 && mine.front() > other.back()) chosen = in[static_cast<std::size_t>(r)];
      }
      if (chosen < 0) throw NotAdmissible("no canonical e- at a joining vertex");
      p.at[v] = {outgoing(t, v).front(), chosen};
    }
  }
  std::set<int> used;
  for (auto& [v, pr] : p.at) {
    used.insert(pr.first);
    used.insert(pr.second);
  }
  for (int e = 0; e < t.edge_count(); ++e)
    if (!used.count(e)) {
      if (p.e0 >= 0) throw NotAdmissible("more than one unpaired edge");
      p.e0 = e;
    }
  if (!is_valid_pairing(t, p)) throw NotAdmissible("canonical pairing is not a valid edge pairing");
  return p;
}

BigInt weight(const Theta& theta, const OrientedWeightedTree& t, const EdgePairing& p) {
  if (p.e0 < 0) throw std::invalid_argument("pairing has no unpaired edge");
  BigInt w = static_cast<long>(t.edge(p.e0).mult);
  for (auto& [v, pr] : p.at) {
    auto [ep, em] = pr;
    Mult m_plus = t.edge(ep).tail == v ? t.edge(ep).mult : -t.edge(ep).mult;
    Mult m_minus = t.edge(em).head == v ? t.edge(em).mult : -t.edge(em).mult;
    BigInt factor = BigInt(static_cast<long>(m_minus)) * static_cast<long>(theta.ceil_mult(m_plus)) -
                    BigInt(static_cast<long>(m_plus)) * static_cast<long>(theta.floor_mult(m_minus));
    w *= factor;
  }
  return w;
}

EdgePairing swapped(const EdgePairing& p) {
  EdgePairing q = p;
  for (auto& [v, pr] : q.at) std::swap(pr.first, pr.second);
  return q;
}

}  // namespace gluecoeff

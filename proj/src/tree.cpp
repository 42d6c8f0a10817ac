#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "gluecoeff/trees.hpp"

namespace gluecoeff {

int OrientedWeightedTree::add_internal() {
  labels_.push_back(0);
  adj_.emplace_back();
  return vertex_count() - 1;
}

int OrientedWeightedTree::add_leaf(int label) {
  if (label == 0) throw std::invalid_argument("leaf label must be nonzero");
  if (leaf_vertex(label)) throw std::invalid_argument("duplicate leaf label " + std::to_string(label));
  labels_.push_back(label);
  adj_.emplace_back();
  return vertex_count() - 1;
}

int OrientedWeightedTree::add_edge(int tail, int head, Mult mult) {
  if (tail == head) throw std::invalid_argument("self-loop");
  edges_.push_back({tail, head, mult});
  int e = edge_count() - 1;
  adj_[static_cast<std::size_t>(tail)].push_back(e);
  adj_[static_cast<std::size_t>(head)].push_back(e);
  return e;
}

void OrientedWeightedTree::reverse_edge(int e) {
  TreeEdge& ed = edges_[static_cast<std::size_t>(e)];
  std::swap(ed.tail, ed.head);
}

std::optional<int> OrientedWeightedTree::leaf_vertex(int label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[static_cast<std::size_t>(v)] == label) return v;
  return std::nullopt;
}

int OrientedWeightedTree::leaf(int label) const {
  auto v = leaf_vertex(label);
  if (!v) throw std::invalid_argument("no leaf labeled " + std::to_string(label));
  return *v;
}

int OrientedWeightedTree::other_end(int e, int v) const {
  const TreeEdge& ed = edge(e);
  return ed.tail == v ? ed.head : ed.tail;
}

std::vector<int> OrientedWeightedTree::internal_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (!is_leaf(v)) out.push_back(v);
  return out;
}

int OrientedWeightedTree::positive_leaf_count() const {
  return static_cast<int>(std::count_if(labels_.begin(), labels_.end(), [](int l) { return l > 0; }));
}

int OrientedWeightedTree::negative_leaf_count() const {
  return static_cast<int>(std::count_if(labels_.begin(), labels_.end(), [](int l) { return l < 0; }));
}

int OrientedWeightedTree::out_degree(int v) const {
  int d = 0;
  for (int e : incident(v)) d += edge(e).tail == v;
  return d;
}

int OrientedWeightedTree::in_degree(int v) const {
  int d = 0;
  for (int e : incident(v)) d += edge(e).head == v;
  return d;
}

bool OrientedWeightedTree::is_trivalent() const {
  for (int v : internal_vertices())
    if (incident(v).size() != 3) return false;
  return true;
}

LeafData leaf_data(const EndData& s, bool include_primes) {
  LeafData d{s.a, s.b};
  if (include_primes) {
    d.positive.insert(d.positive.end(), s.a_prime.begin(), s.a_prime.end());
    d.negative.insert(d.negative.end(), s.b_prime.begin(), s.b_prime.end());
  }
  return d;
}

bool validate_tree(const OrientedWeightedTree& t, const EndData& s, bool include_primes) {
  const LeafData leaves = leaf_data(s, include_primes);
  const int n = t.vertex_count();
  if (n < 2 || t.edge_count() != n - 1) return false;

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : t.incident(v)) {
      int w = t.other_end(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) return false;

  for (const TreeEdge& e : t.edges())
    if (e.mult < 1) return false;

  if (t.positive_leaf_count() != static_cast<int>(leaves.positive.size()) ||
      t.negative_leaf_count() != static_cast<int>(leaves.negative.size()))
    return false;

  for (int v = 0; v < n; ++v) {
    const auto& inc = t.incident(v);
    int lab = t.label(v);
    if (lab == 0) {
      if (inc.size() < 3) return false;
      Mult flow = 0;
      for (int e : inc) flow += t.edge(e).head == v ? t.edge(e).mult : -t.edge(e).mult;
      if (flow != 0) return false;
      continue;
    }
    if (inc.size() != 1) return false;
    const TreeEdge& e = t.edge(inc.front());
    std::size_t idx = static_cast<std::size_t>(lab > 0 ? lab : -lab) - 1;
    const MultList& want = lab > 0 ? leaves.positive : leaves.negative;
    if (idx >= want.size() || want[idx] != e.mult) return false;
    if (lab > 0 && e.head != v) return false;
    if (lab < 0 && e.tail != v) return false;
  }
  return true;
}

namespace {

// Undirected shape with labeled leaves; orientations and multiplicities follow
// from the leaf data by flow conservation.
struct Shape {
  std::vector<int> labels;
  std::vector<std::pair<int, int>> edges;

  int add(int label) {
    labels.push_back(label);
    return static_cast<int>(labels.size()) - 1;
  }
};

std::optional<OrientedWeightedTree> orient(const Shape& shape, const LeafData& leaves) {
  const int n = static_cast<int>(shape.labels.size());
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < shape.edges.size(); ++i) {
    adj[static_cast<std::size_t>(shape.edges[i].first)].push_back({shape.edges[i].second, static_cast<int>(i)});
    adj[static_cast<std::size_t>(shape.edges[i].second)].push_back({shape.edges[i].first, static_cast<int>(i)});
  }
  auto demand = [&](int v) -> Mult {
    int lab = shape.labels[static_cast<std::size_t>(v)];
    if (lab > 0) return leaves.positive[static_cast<std::size_t>(lab - 1)];
    if (lab < 0) return -leaves.negative[static_cast<std::size_t>(-lab - 1)];
    return 0;
  };
  std::vector<int> parent(static_cast<std::size_t>(n), -1), order;
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] != -1) continue;
      parent[static_cast<std::size_t>(w)] = v;
      parent_edge[static_cast<std::size_t>(w)] = e;
      stack.push_back(w);
    }
  }
  std::vector<Mult> excess(static_cast<std::size_t>(n), 0);
  std::vector<TreeEdge> oriented(shape.edges.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    excess[static_cast<std::size_t>(v)] += demand(v);
    if (v == 0) break;
    Mult x = excess[static_cast<std::size_t>(v)];
    int p = parent[static_cast<std::size_t>(v)];
    if (x == 0) return std::nullopt;
    oriented[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)])] =
        x > 0 ? TreeEdge{p, v, x} : TreeEdge{v, p, -x};
    excess[static_cast<std::size_t>(p)] += x;
  }
  if (excess[0] != 0) return std::nullopt;

  OrientedWeightedTree t;
  for (int lab : shape.labels) lab == 0 ? t.add_internal() : t.add_leaf(lab);
  for (const TreeEdge& e : oriented) t.add_edge(e.tail, e.head, e.mult);
  return t;
}

std::vector<int> leaf_order(int n_plus, int n_minus) {
  std::vector<int> out;
  for (int i = 1; i <= n_plus; ++i) out.push_back(i);
  for (int j = 1; j <= n_minus; ++j) out.push_back(-j);
  return out;
}

}  // namespace

std::vector<OrientedWeightedTree> enumerate_trees(const EndData& s, bool trivalent_only, TreeLimits limits) {
  require_balanced(s);
  const LeafData leaves = leaf_data(s, true);
  const int n_plus = static_cast<int>(leaves.positive.size());
  const int n_minus = static_cast<int>(leaves.negative.size());
  const int N = n_plus + n_minus;
  if (N > limits.max_leaves)
    throw CapExceeded("tree enumeration limited to " + std::to_string(limits.max_leaves) + " leaves, got " +
                      std::to_string(N));
  std::vector<OrientedWeightedTree> out;
  if (N < 3) return out;

  const std::vector<int> order = leaf_order(n_plus, n_minus);
  Shape star;
  int c = star.add(0);
  for (int i = 0; i < 3; ++i) star.edges.emplace_back(c, star.add(order[static_cast<std::size_t>(i)]));

  // Each shape on leaves order[0..k] arises from exactly one shape on order[0..k-1]:
  // drop the last leaf and suppress its neighbour if that leaves degree 2.
  std::function<void(Shape&, std::size_t)> grow = [&](Shape& sh, std::size_t next) {
    if (next == order.size()) {
      if (auto t = orient(sh, leaves)) out.push_back(std::move(*t));
      return;
    }
    const int lab = order[next];
    const std::size_t edge_count = sh.edges.size();
    for (std::size_t e = 0; e < edge_count; ++e) {
      auto [u, v] = sh.edges[e];
      int w = sh.add(0);
      int x = sh.add(lab);
      sh.edges[e] = {u, w};
      sh.edges.emplace_back(w, v);
      sh.edges.emplace_back(w, x);
      grow(sh, next + 1);
      sh.edges.pop_back();
      sh.edges.pop_back();
      sh.edges[e] = {u, v};
      sh.labels.pop_back();
      sh.labels.pop_back();
    }
    if (trivalent_only) return;
    const std::size_t vcount = sh.labels.size();
    for (std::size_t w = 0; w < vcount; ++w) {
      if (sh.labels[w] != 0) continue;
      int x = sh.add(lab);
      sh.edges.emplace_back(static_cast<int>(w), x);
      grow(sh, next + 1);
      sh.edges.pop_back();
      sh.labels.pop_back();
    }
  };
  grow(star, 3);
  return out;
}

namespace {

std::string leaf_token(int label, Mult m) {
  return std::string("(leaf:") + (label > 0 ? "+" : "-") + std::to_string(label > 0 ? label : -label) + ":" +
         std::to_string(m) + ")";
}

std::string serialize(const OrientedWeightedTree& t, int v, int parent) {
  if (t.is_leaf(v)) return leaf_token(t.label(v), t.edge(t.incident(v).front()).mult);
  std::vector<std::string> kids;
  for (int e : t.incident(v)) {
    int w = t.other_end(e, v);
    if (w != parent) kids.push_back(serialize(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(node";
  for (const auto& k : kids) out += " " + k;
  return out + ")";
}

int root_leaf(const OrientedWeightedTree& t) {
  for (int lab : leaf_order(t.positive_leaf_count(), t.negative_leaf_count()))
    if (auto v = t.leaf_vertex(lab)) return *v;
  throw std::invalid_argument("tree has no leaves");
}

}  // namespace

std::string canonical_form(const OrientedWeightedTree& t) {
  int leaf = root_leaf(t);
  int root = t.other_end(t.incident(leaf).front(), leaf);
  if (t.is_leaf(root)) {
    std::vector<std::string> ends{serialize(t, leaf, root), serialize(t, root, leaf)};
    std::sort(ends.begin(), ends.end());
    return "(edge " + ends[0] + " " + ends[1] + ")";
  }
  return serialize(t, root, -1);
}

OrientedWeightedTree parse_tree(const std::string& text) {
  std::size_t pos = 0;
  Shape shape;
  std::map<int, Mult> mults;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](const std::string& word) {
    skip();
    if (text.compare(pos, word.size(), word) != 0) throw ParseError("expected '" + word + "'", pos);
    pos += word.size();
  };
  auto number = [&]() -> Mult {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected number", pos);
    return std::stoll(text.substr(start, pos - start));
  };
  // Returns the vertex created for the parsed item.
  std::function<int()> item = [&]() -> int {
    skip();
    if (text.compare(pos, 6, "(leaf:") == 0) {
      pos += 6;
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) throw ParseError("expected sign", pos);
      int sign = text[pos++] == '+' ? 1 : -1;
      int lab = sign * static_cast<int>(number());
      expect(":");
      Mult m = number();
      expect(")");
      if (lab == 0 || mults.count(lab)) throw ParseError("bad or duplicate leaf label", pos);
      mults[lab] = m;
      return shape.add(lab);
    }
    if (text.compare(pos, 5, "(node") == 0) {
      pos += 5;
      int v = shape.add(0);
      for (;;) {
        skip();
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          return v;
        }
        shape.edges.emplace_back(v, item());
      }
    }
    throw ParseError("expected (leaf: or (node", pos);
  };

  skip();
  if (text.compare(pos, 5, "(edge") == 0) {
    pos += 5;
    int u = item();
    int v = item();
    expect(")");
    shape.edges.emplace_back(u, v);
  } else {
    item();
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing input", pos);

  LeafData leaves;
  for (auto [lab, m] : mults) {
    MultList& side = lab > 0 ? leaves.positive : leaves.negative;
    std::size_t idx = static_cast<std::size_t>(lab > 0 ? lab : -lab) - 1;
    if (side.size() <= idx) side.resize(idx + 1, 0);
    side[idx] = m;
  }
  for (const MultList* side : {&leaves.positive, &leaves.negative})
    for (Mult m : *side)
      if (m < 1) throw ParseError("leaf labels must be 1..N+ and -1..-N- with positive multiplicities", 0);
  auto t = orient(shape, leaves);
  if (!t) throw ParseError("leaf multiplicities do not admit positive edge flows", 0);
  return *t;
}

std::vector<int> vertex_path(const OrientedWeightedTree& t, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(t.vertex_count()), -1);
  std::vector<int> stack{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : t.incident(v)) {
      int w = t.other_end(e, v);
      if (parent[static_cast<std::size_t>(w)] != -1) continue;
      parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

int central_vertex(const OrientedWeightedTree& t, int i, int j, int k) {
  if (i == j || j == k || i == k) throw std::invalid_argument("central vertex needs three distinct leaves");
  int vi = t.leaf(i), vj = t.leaf(j), vk = t.leaf(k);
  auto as_set = [](std::vector<int> p) { return std::set<int>(p.begin(), p.end()); };
  auto pij = as_set(vertex_path(t, vi, vj));
  auto pik = as_set(vertex_path(t, vi, vk));
  auto pjk = as_set(vertex_path(t, vj, vk));
  std::vector<int> common;
  for (int v : pij)
    if (pik.count(v) && pjk.count(v)) common.push_back(v);
  if (common.size() != 1) throw std::logic_error("paths do not meet in a single vertex");
  return common.front();
}

BigInt covering_degree(const OrientedWeightedTree& t) {
  BigInt d = 1;
  for (const TreeEdge& e : t.edges()) d *= static_cast<long>(e.mult);
  return d;
}

OrientedWeightedTree reversed(const OrientedWeightedTree& t) {
  OrientedWeightedTree r;
  for (int v = 0; v < t.vertex_count(); ++v) t.is_leaf(v) ? r.add_leaf(-t.label(v)) : r.add_internal();
  for (const TreeEdge& e : t.edges()) r.add_edge(e.head, e.tail, e.mult);
  return r;
}

}  // namespace gluecoeff

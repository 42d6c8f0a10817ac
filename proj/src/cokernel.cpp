#include "gluecoeff/cokernel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gluecoeff {

Rational determinant(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  IntegerMatrix scaled(n, n);
  Rational scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational v = m(i, j) * l;
      scaled(i, j) = v.get_num();
    }
    scale *= l;
  }
  Rational d(bareiss_determinant<BigInt>(scaled));
  d /= scale;
  d.canonicalize();
  return d;
}

namespace {

std::vector<int> depths(const OrientedWeightedTree& t, int root) {
  std::vector<int> depth(static_cast<std::size_t>(t.vertex_count()), -1);
  std::deque<int> queue{root};
  depth[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : t.incident(v)) {
      int w = t.other_end(e, v);
      if (depth[static_cast<std::size_t>(w)] >= 0) continue;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return depth;
}

int edge_between(const OrientedWeightedTree& t, int u, int v) {
  for (int e : t.incident(u))
    if (t.other_end(e, u) == v) return e;
  throw std::logic_error("vertices are not adjacent");
}

}  // namespace

WindingAssignment special_windings(const Theta& t, const OrientedWeightedTree& tree, std::array<int, 3> triple) {
  WindingAssignment w;
  w.tree = tree;
  w.triple = triple;
  w.center = central_vertex(tree, triple[0], triple[1], triple[2]);
  std::set<int> on_path;
  for (int leaf : triple) {
    auto path = vertex_path(tree, w.center, tree.leaf(leaf));
    for (std::size_t i = 1; i < path.size(); ++i) on_path.insert(edge_between(tree, path[i - 1], path[i]));
  }
  const auto depth = depths(tree, w.center);
  w.eta.resize(static_cast<std::size_t>(tree.edge_count()));
  for (int e = 0; e < tree.edge_count(); ++e) {
    const TreeEdge& ed = tree.edge(e);
    const bool away = depth[static_cast<std::size_t>(ed.tail)] < depth[static_cast<std::size_t>(ed.head)];
    Mult eta = away ? t.ceil_mult(ed.mult) : t.floor_mult(ed.mult);
    if (!on_path.count(e)) eta += away ? 1 : -1;
    w.eta[static_cast<std::size_t>(e)] = eta;
  }
  return w;
}

bool vertex_balance_check(const WindingAssignment& w) {
  const OrientedWeightedTree& t = w.tree;
  for (int v : t.internal_vertices()) {
    Mult net = 0;
    for (int e : t.incident(v)) net += t.edge(e).tail == v ? w.eta[static_cast<std::size_t>(e)] : -w.eta[static_cast<std::size_t>(e)];
    if (net != static_cast<Mult>(t.incident(v).size()) - 2) return false;
  }
  return true;
}

Rational rotation_rate(const WindingAssignment& w, int v, int i, int j) {
  auto in_triple = [&](int l) { return std::find(w.triple.begin(), w.triple.end(), l) != w.triple.end(); };
  if (!in_triple(i) || !in_triple(j) || i == j) throw std::invalid_argument("rotation rate needs two ends of the triple");
  const OrientedWeightedTree& t = w.tree;
  if (t.is_leaf(v)) throw std::invalid_argument("rotation rate is defined at internal vertices");
  auto path = vertex_path(t, t.leaf(i), t.leaf(j));
  auto pos = std::find(path.begin(), path.end(), v);
  if (pos == path.end()) return 0;
  int ei = edge_between(t, v, *(pos - 1));
  int ej = edge_between(t, v, *(pos + 1));
  auto ratio = [&](int e) {
    return Rational(static_cast<long>(w.eta[static_cast<std::size_t>(e)]), static_cast<long>(t.edge(e).mult));
  };
  Rational r = ratio(ej) - ratio(ei);
  r.canonicalize();
  return r;
}

Mult cz_index(const OrbitKind& kind, Mult m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be positive");
  if (kind.is_elliptic()) return 2 * kind.theta().floor_mult(m) + 1;
  return m * kind.rotation();
}

Mult branched_cover_index(const OrbitKind& kind, Mult genus, const MultList& a, const MultList& b) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  require_balanced(end_data(a, b));
  if (kind.is_elliptic()) return 2 * genus + ind_theta(kind.theta(), a, b);
  return 2 * genus - 2 + static_cast<Mult>(a.size() + b.size());
}

CokernelSystem cokernel_system(const Theta& t, const EndSetFamily& e, const EndData& s) {
  if (!s.prime_free()) throw std::invalid_argument("the cokernel matrix is defined for prime-free end data");
  require_balanced(s);
  const int n_plus = static_cast<int>(s.a.size());
  const int n_minus = static_cast<int>(s.b.size());
  const int N = n_plus + n_minus;
  if (N <= 2) throw NotSupported("the cokernel matrix needs more than two ends");
  require_guarded(t, s.plus_total());

  CokernelSystem sys;
  sys.tree = phi(e, s);
  const OrientedWeightedTree& tree = sys.tree;
  const TreeRoles& roles = *tree.roles;

  for (int i = 1; i < n_plus; ++i) sys.ends.push_back(i);
  for (int i = 0; i < n_plus; ++i) {
    std::vector<int> set = e[static_cast<std::size_t>(i)];
    std::sort(set.begin(), set.end(), std::greater<>());
    const int low = set.back();
    if (i == n_plus - 1 && low != -n_minus)
      throw NotSupported("E_{N+} of " + family_str(e) + " does not have -N- as its minimum");
    set.pop_back();
    sys.ends.insert(sys.ends.end(), set.begin(), set.end());
  }
  sys.ends.push_back(n_plus);
  sys.ends.push_back(-n_minus);
  if (static_cast<int>(sys.ends.size()) != N) throw std::logic_error("end ordering has the wrong length");

  const EdgePairing pairing = canonical_pairing(tree);
  sys.columns = roles.splitting;
  for (int k = n_plus - 1; k < N - 2; ++k) sys.columns.push_back(roles.joining_for_negative.at(sys.ends[static_cast<std::size_t>(k)]));
  for (int l = 0; l < N - 2; ++l) {
    const int v = sys.columns[static_cast<std::size_t>(l)];
    const auto [ep, em] = pairing.at.at(v);
    const bool ok = l < n_plus - 1 ? up_leaves(tree, ep) == std::vector<int>{sys.ends[static_cast<std::size_t>(l)]}
                                   : down_leaves(tree, em) == std::vector<int>{sys.ends[static_cast<std::size_t>(l)]};
    if (!ok) throw std::logic_error("construction roles disagree with the canonical pairing");
  }

  sys.A = RationalMatrix::Zero(N - 2, N - 2);
  for (int k = 0; k < N - 2; ++k) {
    const int end = sys.ends[static_cast<std::size_t>(k)];
    WindingAssignment w = special_windings(t, tree, {end, n_plus, -n_minus});
    const int d = tree.is_joining(w.center) ? n_plus : -n_minus;
    sys.dominant.push_back(d);
    for (int l = 0; l < N - 2; ++l) sys.A(k, l) = rotation_rate(w, sys.columns[static_cast<std::size_t>(l)], d, end);
  }
  return sys;
}

RationalMatrix matrix_A(const Theta& t, const EndSetFamily& e, const EndData& s) {
  return cokernel_system(t, e, s).A;
}

namespace {

Rational signed_det_product(const CokernelSystem& sys, int n_minus) {
  Rational v = determinant(sys.A) * Rational(covering_degree(sys.tree));
  if (n_minus % 2 == 0) v = -v;
  return v;
}

}  // namespace

bool det_identity_check(const Theta& t, const EndSetFamily& e, const EndData& s) {
  CokernelSystem sys = cokernel_system(t, e, s);
  BigInt w = weight(t, sys.tree, canonical_pairing(sys.tree));
  return signed_det_product(sys, static_cast<int>(s.b.size())) == Rational(w);
}

BigInt f_via_determinants(const Theta& t, const MultList& a, const MultList& b) {
  const EndData s = end_data(a, b);
  if (a.size() + b.size() <= 2) throw NotSupported("determinant route needs more than two ends");
  if (kappa(t, s) != 1) throw std::invalid_argument("determinant route needs kappa = 1");
  Rational total = 0;
  for (const EndSetFamily& e : enumerate_end_set_families(s))
    total += signed_det_product(cokernel_system(t, e, s), static_cast<int>(b.size()));
  total.canonicalize();
  if (total.get_den() != 1) throw std::logic_error("determinant sum is not an integer");
  return total.get_num();
}

}  // namespace gluecoeff

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gluecoeff/partitions.hpp"
#include "gluecoeff/theta.hpp"

namespace gluecoeff {

// Edge oriented tail -> head, the direction in which the cover's R-coordinate
// increases: out of negative leaves, into positive leaves.
struct TreeEdge {
  int tail;
  int head;
  Mult mult;
};

// Only trees built by phi carry these.
struct TreeRoles {
  std::vector<int> splitting;                // v_1 .. v_{N+ - 1}, construction order
  std::map<int, int> joining_for_negative;   // negative label -> joining vertex it hangs off
};

class OrientedWeightedTree {
 public:
  int add_internal();
  int add_leaf(int label);
  int add_edge(int tail, int head, Mult mult);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const TreeEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  void set_mult(int e, Mult m) { edges_[static_cast<std::size_t>(e)].mult = m; }
  void reverse_edge(int e);

  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  bool is_leaf(int v) const { return label(v) != 0; }
  std::optional<int> leaf_vertex(int label) const;
  int leaf(int label) const;  // throws if absent
  const std::vector<int>& incident(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int other_end(int e, int v) const;
  bool points_out_of(int e, int v) const { return edge(e).tail == v; }

  std::vector<int> internal_vertices() const;
  int positive_leaf_count() const;
  int negative_leaf_count() const;

  int out_degree(int v) const;
  int in_degree(int v) const;
  bool is_splitting(int v) const { return !is_leaf(v) && out_degree(v) >= 2; }
  bool is_joining(int v) const { return !is_leaf(v) && in_degree(v) >= 2; }
  bool is_trivalent() const;

  // Leaf edge of the given label.
  int leaf_edge(int label) const { return incident(leaf(label)).front(); }

  std::optional<TreeRoles> roles;

 private:
  std::vector<int> labels_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Leaves in order: a then a' (labels 1..N+), b then b' (labels -1..-N-).
struct LeafData {
  MultList positive, negative;
};
LeafData leaf_data(const EndData& s, bool include_primes = true);

bool validate_tree(const OrientedWeightedTree& t, const EndData& s, bool include_primes = false);

struct TreeLimits {
  int max_leaves = 8;
};

std::vector<OrientedWeightedTree> enumerate_trees(const EndData& s, bool trivalent_only,
                                                  TreeLimits limits = {});

// Stable text form: (leaf:+i:m) / (node child child ...), rooted at the internal
// vertex next to the first leaf in the order 1..N+, -1..-N-, children sorted.
std::string canonical_form(const OrientedWeightedTree& t);
OrientedWeightedTree parse_tree(const std::string& text);

// Positive leaves reachable by an upward path that starts along e, from e's tail.
std::vector<int> up_leaves(const OrientedWeightedTree& t, int e);
// Negative leaves reachable by a downward path that starts along e, from e's head.
std::vector<int> down_leaves(const OrientedWeightedTree& t, int e);

bool is_admissible(const OrientedWeightedTree& t);

struct EdgePairing {
  std::map<int, std::pair<int, int>> at;  // internal vertex -> (e_plus, e_minus)
  int e0 = -1;
};

bool is_valid_pairing(const OrientedWeightedTree& t, const EdgePairing& p);
EdgePairing canonical_pairing(const OrientedWeightedTree& t);
BigInt weight(const Theta& theta, const OrientedWeightedTree& t, const EdgePairing& p);

// Reverse every edge and swap leaf signs; with e_plus/e_minus swapped the weight
// at -theta matches the weight at theta.
OrientedWeightedTree reversed(const OrientedWeightedTree& t);
EdgePairing swapped(const EdgePairing& p);

using EndSetFamily = std::vector<std::vector<int>>;  // E_1..E_{N+}, each sorted decreasing

std::vector<EndSetFamily> enumerate_end_set_families(const EndData& s, std::uint64_t cap = 5'000'000);
bool is_end_set_family(const EndSetFamily& e, const EndData& s);
OrientedWeightedTree phi(const EndSetFamily& e, const EndData& s);
std::string family_str(const EndSetFamily& e);

int central_vertex(const OrientedWeightedTree& t, int i, int j, int k);
// Vertices of the path between two vertices, in order.
std::vector<int> vertex_path(const OrientedWeightedTree& t, int from, int to);
BigInt covering_degree(const OrientedWeightedTree& t);

}  // namespace gluecoeff

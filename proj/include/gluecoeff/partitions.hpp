#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gluecoeff/theta.hpp"

namespace gluecoeff {

// Multiset of positive integers kept in nonincreasing order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(MultList parts);
  Partition(std::initializer_list<Mult> parts) : Partition(MultList(parts)) {}

  const MultList& parts() const { return parts_; }
  Mult total() const { return total_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Mult operator[](std::size_t i) const { return parts_[i]; }

  Partition joined(const Partition& other) const;
  std::string str() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  MultList parts_;
  Mult total_ = 0;
};

// All partitions of n, largest parts first (lexicographically decreasing).
std::vector<Partition> all_partitions(Mult n);

class OrbitKind {
 public:
  enum class Tag { positive_hyperbolic, negative_hyperbolic, elliptic };

  static OrbitKind hyperbolic(Mult rotation);
  static OrbitKind positive_hyperbolic(Mult rotation = 0);
  static OrbitKind negative_hyperbolic(Mult rotation = 1);
  static OrbitKind elliptic(const Theta& theta);

  Tag tag() const { return tag_; }
  bool is_elliptic() const { return tag_ == Tag::elliptic; }
  bool is_hyperbolic() const { return !is_elliptic(); }
  Mult rotation() const { return rotation_; }
  const Theta& theta() const;
  std::string str() const;

 private:
  OrbitKind(Tag tag, Mult rotation, std::optional<Theta> theta)
      : tag_(tag), rotation_(rotation), theta_(std::move(theta)) {}
  Tag tag_;
  Mult rotation_;
  std::optional<Theta> theta_;
};

Partition incoming_partition(const Theta& t, Mult M);
Partition incoming_partition_lattice(const Theta& t, Mult M);
Partition outgoing_partition(const Theta& t, Mult M);

// Lattice points (x, y) of the lowest convex path from (0,0) to (M, ceil(M theta))
// staying on or above y = theta x, every lattice point on the path included.
std::vector<std::pair<Mult, Mult>> incoming_lattice_path(const Theta& t, Mult M);

// (P^in, P^out) of an orbit of the given kind.
std::pair<Partition, Partition> orbit_partitions(const OrbitKind& kind, Mult M);

BigInt partition_factorial(const Partition& p);

bool is_initial_segment(const Partition& p, const Partition& q);

struct ThetaDecomposition {
  std::vector<EndData> components;
  // Component index of each element, one vector per index set (a, a', b, b').
  std::vector<int> a_of, a_prime_of, b_of, b_prime_of;
};

struct SearchLimits {
  std::uint64_t node_cap = 20'000'000;
};

// Streams one representative per class; the visitor returns false to stop.
void for_each_theta_decomposition(const Theta& t, const EndData& s,
                                  const std::function<bool(const ThetaDecomposition&)>& visit,
                                  SearchLimits limits = {});
std::vector<ThetaDecomposition> enumerate_theta_decompositions(const Theta& t, const EndData& s,
                                                               SearchLimits limits = {});
bool has_theta_decomposition(const Theta& t, const EndData& s, SearchLimits limits = {});

bool ge_theta(const Theta& t, const Partition& p, const Partition& q, SearchLimits limits = {});
bool ge_theta_ops(const Theta& t, const Partition& p, const Partition& q, SearchLimits limits = {});

struct TfaeResult {
  bool concatenation = false;
  bool additivity = false;
  bool path_concatenation = false;
  bool initial_segment = false;

  bool all_equal() const {
    return concatenation == additivity && additivity == path_concatenation &&
           path_concatenation == initial_segment;
  }
};

TfaeResult tfae_check(const Theta& t, Mult M_prime, Mult M);

struct IndkeyStep {
  Mult m = 0;
  std::vector<std::size_t> I;  // 1-based indices into P^out, as in the prefix {1..m}
  Mult b_bar = 0;
  Partition reduced_in;   // P^in(M - a_1)
  Partition reduced_out;  // P^out(M - a_1)
  bool unique_subset = false;
  bool in_matches = false;   // reduced_in == (a_2, ..., a_k)
  bool out_matches = false;  // reduced_out == (b_bar, b_{m+1}, ...) in order, b_bar dropped if 0
  bool deltas_all_one = false;

  bool holds() const { return unique_subset && in_matches && out_matches && deltas_all_one; }
};

IndkeyStep indkey_step(const Theta& t, Mult M);

}  // namespace gluecoeff

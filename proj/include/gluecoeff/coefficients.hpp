#pragma once

#include <vector>

#include "gluecoeff/partitions.hpp"
#include "gluecoeff/theta.hpp"
#include "gluecoeff/trees.hpp"

namespace gluecoeff {

BigInt f_theta(const Theta& t, const MultList& a, const MultList& b);
BigInt f_theta_via_trees(const Theta& t, const MultList& a, const MultList& b);

// The ratio orderings used by c_theta's base case: ceil(a theta)/a nondecreasing,
// floor(b theta)/b nonincreasing, ties kept in input order.
MultList order_positive(const Theta& t, MultList a);
MultList order_negative(const Theta& t, MultList b);
bool is_ratio_ordered(const Theta& t, const MultList& a, const MultList& b);

BigInt c_theta(const Theta& t, const EndData& s, SearchLimits limits = {});

// Plus side (a; a') and minus side (b; b') of a hyperbolic orbit.
BigInt c_hyperbolic(const OrbitKind& kind, const EndData& s);

struct OrbitGluing {
  OrbitKind kind;
  EndData ends;
};

struct GluingInput {
  std::vector<OrbitGluing> orbits;
  int eps_plus = 1;
  int eps_minus = 1;
};

BigInt glue_count(const GluingInput& in, SearchLimits limits = {});

struct EchOrbit {
  OrbitKind kind;
  Mult n_plus = 0;
  Mult n_minus = 0;
};

BigInt ech_glue_factor(const std::vector<EchOrbit>& orbits);

}  // namespace gluecoeff

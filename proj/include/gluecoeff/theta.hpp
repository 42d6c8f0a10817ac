#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gluecoeff/errors.hpp"

namespace gluecoeff {

using Mult = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;
using MultList = std::vector<Mult>;

// Reduced p/q whose denominator exceeds every multiplicity it will be asked
// about, so m*theta is never an integer in range.
class Theta {
 public:
  Theta(Mult p, Mult q, Mult guard);

  Mult num() const { return num_; }
  Mult den() const { return den_; }
  Mult guard_bound() const { return guard_; }

  Theta negated() const;
  std::string str() const;

  // Exact ceil/floor of m*theta for any integer m with |m| <= guard_bound.
  Mult ceil_mult(Mult m) const;
  Mult floor_mult(Mult m) const;

  bool operator==(const Theta&) const = default;

 private:
  Mult num_;
  Mult den_;
  Mult guard_;
};

Theta make_theta(Mult p, Mult q, Mult guard);

inline Mult ceil_mult(const Theta& t, Mult m) { return t.ceil_mult(m); }
inline Mult floor_mult(const Theta& t, Mult m) { return t.floor_mult(m); }

Mult delta(const Theta& t, Mult a, Mult b);

struct EndData {
  MultList a, a_prime, b, b_prime;

  Mult plus_total() const;
  Mult minus_total() const;
  bool balanced() const { return plus_total() == minus_total(); }
  bool prime_free() const { return a_prime.empty() && b_prime.empty(); }
  std::size_t size() const { return a.size() + a_prime.size() + b.size() + b_prime.size(); }
  std::string str() const;

  bool operator==(const EndData&) const = default;
};

EndData end_data(MultList a, MultList b);

Mult sum_of(const MultList& xs);

// Throws SumMismatch unless the sum condition holds, GuardViolation if the
// total is beyond the guard.
void require_balanced(const EndData& s);
void require_guarded(const Theta& t, Mult total);

Mult kappa(const Theta& t, const EndData& s);
Mult ind_theta(const Theta& t, const MultList& a, const MultList& b);

std::string list_str(const MultList& xs);

}  // namespace gluecoeff

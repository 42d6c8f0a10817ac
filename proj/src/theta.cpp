#include "gluecoeff/theta.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace gluecoeff {

namespace {

using Wide = __int128;

Mult narrow(Wide v) {
  if (v > std::numeric_limits<Mult>::max() || v < std::numeric_limits<Mult>::min())
    throw std::overflow_error("64-bit overflow in multiplicity arithmetic");
  return static_cast<Mult>(v);
}

Wide floor_div(Wide n, Wide d) {
  Wide q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

Theta::Theta(Mult p, Mult q, Mult guard) {
  if (q <= 0) throw std::invalid_argument("theta denominator must be positive");
  if (guard < 1) throw std::invalid_argument("guard bound must be positive");
  Mult g = std::gcd(p < 0 ? -p : p, q);
  if (g == 0) g = 1;
  num_ = p / g;
  den_ = q / g;
  guard_ = guard;
  if (den_ <= guard_)
    throw GuardViolation("theta " + str() + " has denominator " + std::to_string(den_) +
                         " <= guard " + std::to_string(guard_));
}

Theta make_theta(Mult p, Mult q, Mult guard) { return Theta(p, q, guard); }

Theta Theta::negated() const { return Theta(-num_, den_, guard_); }

std::string Theta::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Mult Theta::floor_mult(Mult m) const {
  if (m > guard_ || m < -guard_)
    throw GuardViolation("multiplicity " + std::to_string(m) + " exceeds guard " +
                         std::to_string(guard_) + " of theta " + str());
  return narrow(floor_div(static_cast<Wide>(m) * num_, den_));
}

Mult Theta::ceil_mult(Mult m) const { return -floor_mult(-m); }

Mult delta(const Theta& t, Mult a, Mult b) {
  Wide v = static_cast<Wide>(b) * t.ceil_mult(a) - static_cast<Wide>(a) * t.floor_mult(b);
  return narrow(v);
}

Mult sum_of(const MultList& xs) {
  Wide s = 0;
  for (Mult x : xs) s += x;
  return narrow(s);
}

Mult EndData::plus_total() const { return sum_of(a) + sum_of(a_prime); }
Mult EndData::minus_total() const { return sum_of(b) + sum_of(b_prime); }

std::string list_str(const MultList& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string EndData::str() const {
  std::ostringstream os;
  os << list_str(a);
  if (!a_prime.empty()) os << ";" << list_str(a_prime);
  os << " | " << list_str(b);
  if (!b_prime.empty()) os << ";" << list_str(b_prime);
  return os.str();
}

EndData end_data(MultList a, MultList b) {
  EndData s;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}

void require_balanced(const EndData& s) {
  for (const MultList* xs : {&s.a, &s.a_prime, &s.b, &s.b_prime})
    for (Mult x : *xs)
      if (x < 1) throw std::invalid_argument("multiplicities must be positive: " + s.str());
  if (!s.balanced())
    throw SumMismatch("sum condition fails for (" + s.str() + "): " +
                      std::to_string(s.plus_total()) + " != " + std::to_string(s.minus_total()));
}

void require_guarded(const Theta& t, Mult total) {
  if (total > t.guard_bound())
    throw GuardViolation("total multiplicity " + std::to_string(total) + " exceeds guard " +
                         std::to_string(t.guard_bound()) + " of theta " + t.str());
}

Mult kappa(const Theta& t, const EndData& s) {
  require_balanced(s);
  require_guarded(t, s.plus_total());
  Mult k = 0;
  for (Mult x : s.a) k += t.ceil_mult(x);
  for (Mult x : s.a_prime) k += t.ceil_mult(x);
  for (Mult x : s.b) k -= t.floor_mult(x);
  for (Mult x : s.b_prime) k -= t.floor_mult(x);
  return k;
}

Mult ind_theta(const Theta& t, const MultList& a, const MultList& b) {
  return 2 * (kappa(t, end_data(a, b)) - 1);
}

}  // namespace gluecoeff

#include "gluecoeff/partitions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace gluecoeff {

Partition::Partition(MultList parts) : parts_(std::move(parts)) {
  for (Mult x : parts_)
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
  std::stable_sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = sum_of(parts_);
}

Partition Partition::joined(const Partition& other) const {
  MultList all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::string Partition::str() const { return "(" + list_str(parts_) + ")"; }

std::vector<Partition> all_partitions(Mult n) {
  std::vector<Partition> out;
  MultList cur;
  std::function<void(Mult, Mult)> rec = [&](Mult rest, Mult cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Mult x = std::min(rest, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(rest - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

OrbitKind OrbitKind::hyperbolic(Mult rotation) {
  bool even = rotation % 2 == 0;
  return OrbitKind(even ? Tag::positive_hyperbolic : Tag::negative_hyperbolic, rotation, {});
}

OrbitKind OrbitKind::positive_hyperbolic(Mult rotation) {
  if (rotation % 2 != 0) throw std::invalid_argument("positive hyperbolic needs even rotation");
  return hyperbolic(rotation);
}

OrbitKind OrbitKind::negative_hyperbolic(Mult rotation) {
  if (rotation % 2 == 0) throw std::invalid_argument("negative hyperbolic needs odd rotation");
  return hyperbolic(rotation);
}

OrbitKind OrbitKind::elliptic(const Theta& theta) { return OrbitKind(Tag::elliptic, 0, theta); }

const Theta& OrbitKind::theta() const {
  if (!theta_) throw std::logic_error("hyperbolic orbit has no monodromy angle");
  return *theta_;
}

std::string OrbitKind::str() const {
  switch (tag_) {
    case Tag::positive_hyperbolic:
      return "positive_hyperbolic(n=" + std::to_string(rotation_) + ")";
    case Tag::negative_hyperbolic:
      return "negative_hyperbolic(n=" + std::to_string(rotation_) + ")";
    case Tag::elliptic:
      return "elliptic(" + theta_->str() + ")";
  }
  return {};
}

namespace {

// ceil(a theta)/a < ceil(b theta)/b
bool ratio_less(const Theta& t, Mult a, Mult b) {
  return static_cast<__int128>(t.ceil_mult(a)) * b < static_cast<__int128>(t.ceil_mult(b)) * a;
}

void require_nonnegative(Mult M) {
  if (M < 0) throw std::invalid_argument("M must be nonnegative");
}

}  // namespace

Partition incoming_partition(const Theta& t, Mult M) {
  require_nonnegative(M);
  require_guarded(t, M);
  // in_s[a]: a belongs to S_theta
  std::vector<bool> in_s(M + 1, false);
  Mult best = 0;
  for (Mult a = 1; a <= M; ++a) {
    if (best == 0 || ratio_less(t, a, best)) {
      in_s[a] = true;
      best = a;
    }
  }
  MultList parts;
  Mult rest = M;
  while (rest > 0) {
    Mult a = rest;
    while (!in_s[a]) --a;
    parts.push_back(a);
    rest -= a;
  }
  return Partition(std::move(parts));
}

std::vector<std::pair<Mult, Mult>> incoming_lattice_path(const Theta& t, Mult M) {
  require_nonnegative(M);
  require_guarded(t, M);
  using Pt = std::pair<Mult, Mult>;
  auto cross = [](const Pt& o, const Pt& a, const Pt& b) {
    return static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
           static_cast<__int128>(a.second - o.second) * (b.first - o.first);
  };
  std::vector<Pt> hull;
  for (Mult x = 0; x <= M; ++x) {
    Pt p{x, x == 0 ? 0 : t.ceil_mult(x)};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<Pt> path{hull.front()};
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Mult dx = hull[i].first - hull[i - 1].first;
    Mult dy = hull[i].second - hull[i - 1].second;
    Mult g = std::gcd(dx, dy < 0 ? -dy : dy);
    for (Mult s = 1; s <= g; ++s)
      path.emplace_back(hull[i - 1].first + s * (dx / g), hull[i - 1].second + s * (dy / g));
  }
  return path;
}

Partition incoming_partition_lattice(const Theta& t, Mult M) {
  auto path = incoming_lattice_path(t, M);
  MultList parts;
  for (std::size_t i = 1; i < path.size(); ++i) parts.push_back(path[i].first - path[i - 1].first);
  return Partition(std::move(parts));
}

Partition outgoing_partition(const Theta& t, Mult M) { return incoming_partition(t.negated(), M); }

std::pair<Partition, Partition> orbit_partitions(const OrbitKind& kind, Mult M) {
  require_nonnegative(M);
  switch (kind.tag()) {
    case OrbitKind::Tag::positive_hyperbolic: {
      Partition ones(MultList(M, 1));
      return {ones, ones};
    }
    case OrbitKind::Tag::negative_hyperbolic: {
      MultList parts(M / 2, 2);
      if (M % 2) parts.push_back(1);
      Partition p(std::move(parts));
      return {p, p};
    }
    case OrbitKind::Tag::elliptic:
      return {incoming_partition(kind.theta(), M), outgoing_partition(kind.theta(), M)};
  }
  throw std::logic_error("unknown orbit kind");
}

BigInt partition_factorial(const Partition& p) {
  BigInt out = 1;
  const MultList& xs = p.parts();
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    unsigned long r = j - i;
    BigInt pw, fact;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(xs[i]), r);
    mpz_fac_ui(fact.get_mpz_t(), r);
    out *= pw * fact;
    i = j;
  }
  return out;
}

bool is_initial_segment(const Partition& p, const Partition& q) {
  if (p.size() > q.size()) return false;
  return std::equal(p.parts().begin(), p.parts().end(), q.parts().begin());
}

bool ge_theta(const Theta& t, const Partition& p, const Partition& q, SearchLimits limits) {
  return has_theta_decomposition(t, end_data(p.parts(), q.parts()), limits);
}

bool ge_theta_ops(const Theta& t, const Partition& p, const Partition& q, SearchLimits limits) {
  if (p.total() != q.total())
    throw SumMismatch("partitions " + p.str() + " and " + q.str() + " have different totals");
  require_guarded(t, p.total());
  std::set<Partition> seen{p};
  std::deque<Partition> queue{p};
  while (!queue.empty()) {
    Partition cur = queue.front();
    queue.pop_front();
    if (cur == q) return true;
    std::vector<Partition> next;
    const MultList& xs = cur.parts();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        Mult a1 = xs[i], a2 = xs[j];
        if (t.ceil_mult(a1) + t.ceil_mult(a2) != t.ceil_mult(a1 + a2)) continue;
        MultList ys;
        for (std::size_t k = 0; k < xs.size(); ++k)
          if (k != i && k != j) ys.push_back(xs[k]);
        ys.push_back(a1 + a2);
        next.emplace_back(std::move(ys));
      }
      Mult c = xs[i];
      for (Mult a1 = 1; a1 <= c / 2; ++a1) {
        Mult a2 = c - a1;
        if (t.ceil_mult(c) != t.ceil_mult(a1) + t.ceil_mult(a2) - 1) continue;
        MultList ys = xs;
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(i));
        ys.push_back(a1);
        ys.push_back(a2);
        next.emplace_back(std::move(ys));
      }
    }
    for (auto& n : next) {
      if (seen.insert(n).second) {
        if (seen.size() > limits.node_cap) throw CapExceeded("move closure exceeded node cap");
        queue.push_back(std::move(n));
      }
    }
  }
  return false;
}

TfaeResult tfae_check(const Theta& t, Mult M_prime, Mult M) {
  if (M_prime < 0 || M_prime > M) throw std::invalid_argument("need 0 <= M' <= M");
  require_guarded(t, M);
  TfaeResult r;
  Partition head = incoming_partition(t, M_prime);
  r.concatenation = true;
  r.additivity = true;
  for (Mult n = 1; n <= M - M_prime; ++n) {
    if (incoming_partition(t, M_prime + n) != head.joined(incoming_partition(t, n)))
      r.concatenation = false;
    if (t.ceil_mult(M_prime + n) != t.ceil_mult(M_prime) + t.ceil_mult(n)) r.additivity = false;
  }
  auto whole = incoming_lattice_path(t, M);
  auto first = incoming_lattice_path(t, M_prime);
  auto second = incoming_lattice_path(t, M - M_prime);
  auto joined = first;
  for (std::size_t i = 1; i < second.size(); ++i)
    joined.emplace_back(second[i].first + first.back().first, second[i].second + first.back().second);
  r.path_concatenation = joined == whole;
  r.initial_segment = is_initial_segment(head, incoming_partition(t, M));
  return r;
}

IndkeyStep indkey_step(const Theta& t, Mult M) {
  if (M < 1) throw std::invalid_argument("indkey_step needs M >= 1");
  require_guarded(t, M);
  const Partition pin = incoming_partition(t, M);
  const Partition pout = outgoing_partition(t, M);
  const MultList& a = pin.parts();
  const MultList& b = pout.parts();
  const Mult a1 = a.front();

  // Every index sequence i_1 < ... < i_q whose partial sums first reach a_1 at the last step.
  std::vector<std::vector<std::size_t>> found;
  std::vector<Mult> suffix(b.size() + 1, 0);
  for (std::size_t i = b.size(); i-- > 0;) suffix[i] = suffix[i + 1] + b[i];
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, Mult)> rec = [&](std::size_t from, Mult sum) {
    if (sum + suffix[from] < a1) return;
    for (std::size_t i = from; i < b.size(); ++i) {
      cur.push_back(i + 1);
      if (sum + b[i] >= a1)
        found.push_back(cur);
      else
        rec(i + 1, sum + b[i]);
      cur.pop_back();
    }
  };
  rec(0, 0);

  IndkeyStep r;
  r.unique_subset = found.size() == 1;
  if (found.empty()) return r;
  r.I = found.front();
  r.m = static_cast<Mult>(r.I.size());
  bool prefix = true;
  for (std::size_t n = 0; n < r.I.size(); ++n) prefix = prefix && r.I[n] == n + 1;
  r.unique_subset = r.unique_subset && prefix;

  Mult partial = 0;
  r.deltas_all_one = true;
  for (std::size_t n = 0; n < r.I.size(); ++n) {
    Mult bn = b[r.I[n] - 1];
    if (delta(t, a1 - partial, bn) != 1) r.deltas_all_one = false;
    partial += bn;
  }
  r.b_bar = partial - a1;

  r.reduced_in = incoming_partition(t, M - a1);
  r.reduced_out = outgoing_partition(t, M - a1);
  r.in_matches = r.reduced_in.parts() == MultList(a.begin() + 1, a.end());
  MultList expect_out;
  if (r.b_bar > 0) expect_out.push_back(r.b_bar);
  if (prefix) expect_out.insert(expect_out.end(), b.begin() + r.m, b.end());
  r.out_matches = prefix && r.reduced_out.parts() == expect_out;
  return r;
}

}  // namespace gluecoeff

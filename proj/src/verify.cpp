#include "gluecoeff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gluecoeff/coefficients.hpp"
#include "gluecoeff/cokernel.hpp"
#include "gluecoeff/partitions.hpp"
#include "gluecoeff/trees.hpp"

namespace gluecoeff {

namespace {

struct Outcome {
  std::uint64_t cases = 0;
  std::optional<std::string> failure;
  std::string note;

  bool failed() const { return failure.has_value(); }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && !failure) failure = describe();
    return ok;
  }
};

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.get_str(); }

std::string where(const Theta& t, const EndData& s) { return "theta=" + t.str() + " S=(" + s.str() + ")"; }

// Runs fn once per theta on a pool of workers; the merged failure is the first
// one in theta order, so output does not depend on scheduling.
Outcome for_thetas(const std::vector<Theta>& thetas, int threads,
                   const std::function<void(const Theta&, Outcome&)>& fn) {
  std::vector<Outcome> results(thetas.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < thetas.size(); i = next++) {
      try {
        fn(thetas[i], results[i]);
      } catch (const std::exception& e) {
        if (!results[i].failure) results[i].failure = "theta=" + thetas[i].str() + " raised: " + e.what();
      }
    }
  };
  const int n = std::max(1, std::min(worker_count(threads), static_cast<int>(thetas.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  Outcome merged;
  for (const Outcome& r : results) {
    merged.cases += r.cases;
    if (!merged.failure && r.failure) merged.failure = r.failure;
  }
  return merged;
}

std::vector<MultList> compositions(Mult n) {
  std::vector<MultList> out;
  MultList cur;
  std::function<void(Mult)> rec = [&](Mult rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (Mult x = 1; x <= rest; ++x) {
      cur.push_back(x);
      rec(rest - x);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n);
  return out;
}

// Ordered prime-free data with total <= max_M and 2 <= N <= max_N.
std::vector<EndData> ordered_grid(Mult max_M, int max_N) {
  std::vector<EndData> out;
  for (Mult M = 1; M <= max_M; ++M) {
    auto cs = compositions(M);
    for (const auto& a : cs)
      for (const auto& b : cs)
        if (static_cast<int>(a.size() + b.size()) <= max_N) out.push_back(end_data(a, b));
  }
  return out;
}

// Same range up to reordering: both sides nonincreasing.
std::vector<EndData> multiset_grid(Mult max_M, int max_N) {
  std::vector<EndData> out;
  for (Mult M = 1; M <= max_M; ++M) {
    auto ps = all_partitions(M);
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (static_cast<int>(a.size() + b.size()) <= max_N) out.push_back(end_data(a.parts(), b.parts()));
  }
  return out;
}

struct Context {
  const VerifyConfig& cfg;
  Mult cap(Mult spec_default) const { return cfg.max_M ? std::min(spec_default, *cfg.max_M) : spec_default; }
  int cap_N(int spec_default) const { return std::min(spec_default, cfg.max_N); }
  std::vector<Theta> thetas(int count, Mult guard) const {
    return theta_sweep(count, std::max<Mult>(guard, 1), cfg.seed, cfg.extra_thetas);
  }
  SearchLimits limits() const { return SearchLimits{cfg.node_cap}; }
};

// theta in (0, 1/bound) with denominators above guard.
std::vector<Theta> small_thetas(int count, Mult bound, Mult guard, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 31 + static_cast<std::uint64_t>(bound));
  std::vector<Theta> out;
  for (Mult q = guard + 1; static_cast<int>(out.size()) < count; ++q) {
    Mult hi = (q - 1) / bound;
    if (hi < 1) continue;
    Mult p = 1 + static_cast<Mult>(rng() % static_cast<std::uint64_t>(hi));
    if (std::gcd(p, q) != 1) continue;
    out.emplace_back(p, q, guard);
  }
  return out;
}

// ---- individual suites ----

Outcome suite_c_aa(const Context& ctx) {
  const Mult top = ctx.cap(12);
  return for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (Mult a = 1; a <= top; ++a) {
      BigInt c = c_theta(t, end_data({a}, {a}));
      o.expect(c == a, [&] { return where(t, end_data({a}, {a})) + " c=" + str(c) + " expected " + std::to_string(a); });
    }
  });
}

Outcome suite_c_single_positive(const Context& ctx) {
  Outcome total;
  for (Mult a1 = 1; a1 <= ctx.cap(9); ++a1) {
    Outcome o = for_thetas(small_thetas(6, a1, a1, ctx.cfg.seed), ctx.cfg.threads, [&](const Theta& t, Outcome& r) {
      for (const Partition& b : all_partitions(a1)) {
        BigInt prod = 1;
        for (Mult x : b.parts()) prod *= static_cast<long>(x);
        EndData s = end_data({a1}, b.parts());
        BigInt c = c_theta(t, s);
        r.expect(c == prod, [&] { return where(t, s) + " c=" + str(c) + " expected " + str(prod); });
      }
    });
    total.cases += o.cases;
    if (!total.failure) total.failure = o.failure;
  }
  return total;
}

Outcome suite_c_two_one_one(const Context& ctx) {
  std::vector<Theta> thetas;
  for (Mult q = 3; q <= 80; ++q)
    for (Mult p = 1; 2 * p < q; ++p)
      if (std::gcd(p, q) == 1) thetas.emplace_back(p, q, 2);
  return for_thetas(thetas, ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    EndData s = end_data({2}, {1, 1});
    BigInt c = c_theta(t, s);
    o.expect(c == 1, [&] { return where(t, s) + " c=" + str(c); });
  });
}

Outcome suite_pinpout(const Context& ctx) {
  const Mult top = ctx.cap(12);
  return for_thetas(ctx.thetas(8, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (Mult M = 1; M <= top; ++M) {
      EndData s = end_data(incoming_partition(t, M).parts(), outgoing_partition(t, M).parts());
      Mult k = kappa(t, s);
      BigInt c = c_theta(t, s, ctx.limits());
      o.expect(k == 1 && c == 1, [&] { return where(t, s) + " kappa=" + std::to_string(k) + " c=" + str(c); });
    }
  });
}

Outcome suite_ptc(const Context& ctx) {
  const Mult top = ctx.cap(9);
  return for_thetas(ctx.thetas(8, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (Mult M = 1; M <= top && !o.failed(); ++M) {
      const Partition pin = incoming_partition(t, M), pout = outgoing_partition(t, M);
      for (Mult mp = 0; mp <= M; ++mp) {
        for (Mult mm = 0; mm <= M; ++mm) {
          if (!is_initial_segment(incoming_partition(t, mp), pin) || !is_initial_segment(outgoing_partition(t, mm), pout))
            continue;
          EndData s;
          s.a = incoming_partition(t, mp).parts();
          s.a_prime = outgoing_partition(t, M - mp).parts();
          s.b = outgoing_partition(t, mm).parts();
          s.b_prime = incoming_partition(t, M - mm).parts();
          if (mm == M) {
            BigInt c = c_theta(t, s, ctx.limits());
            BigInt want = partition_factorial(outgoing_partition(t, M - mp));
            o.expect(c == want, [&] { return where(t, s) + " c=" + str(c) + " expected P^out(M-M+)!=" + str(want); });
          }
          if (mp == M) {
            BigInt c = c_theta(t, s, ctx.limits());
            BigInt want = partition_factorial(incoming_partition(t, M - mm));
            o.expect(c == want, [&] { return where(t, s) + " c=" + str(c) + " expected P^in(M-M-)!=" + str(want); });
          }
          if (mp < M && mm < M) {
            for_each_theta_decomposition(
                t, s,
                [&](const ThetaDecomposition& d) {
                  bool has = std::any_of(d.components.begin(), d.components.end(), [](const EndData& c) {
                    return c.a.empty() && c.b.empty() && c.a_prime.size() == 1 && c.b_prime.size() == 1;
                  });
                  return o.expect(has, [&] { return where(t, s) + " has a decomposition without a (;x|;x) component"; });
                },
                ctx.limits());
          }
        }
      }
    }
  });
}

Outcome suite_three_way(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const auto grid = ordered_grid(top, ctx.cap_N(6));
  return for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (const EndData& s : grid) {
      if (kappa(t, s) != 1) continue;
      BigInt f1 = f_theta(t, s.a, s.b);
      BigInt f2 = f_theta_via_trees(t, s.a, s.b);
      if (s.a.size() + s.b.size() == 2) {
        if (!o.expect(f1 == f2, [&] { return where(t, s) + " recursion=" + str(f1) + " trees=" + str(f2); })) return;
        continue;
      }
      BigInt f3 = f_via_determinants(t, s.a, s.b);
      if (!o.expect(f1 == f2 && f2 == f3, [&] {
            return where(t, s) + " recursion=" + str(f1) + " trees=" + str(f2) + " determinants=" + str(f3);
          }))
        return;
    }
  });
}

Outcome suite_symmetry(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const auto grid = ordered_grid(top, ctx.cap_N(6));
  return for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    const Theta n = t.negated();
    for (const EndData& s : grid) {
      if (kappa(t, s) != 1) continue;
      EndData r = end_data(s.b, s.a);
      BigInt f1 = f_theta(t, s.a, s.b), f2 = f_theta(n, s.b, s.a);
      BigInt c1 = c_theta(t, s), c2 = c_theta(n, r);
      if (!o.expect(f1 == f2 && c1 == c2, [&] {
            return where(t, s) + " f=" + str(f1) + " f(-theta,reversed)=" + str(f2) + " c=" + str(c1) +
                   " c(-theta,reversed)=" + str(c2);
          }))
        return;
    }
  });
}

Outcome suite_ihx(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const auto grid = ordered_grid(top, ctx.cap_N(6));
  return for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (const EndData& s : grid) {
      if (s.a.size() < 2 || kappa(t, s) != 1) continue;
      const Mult a1 = s.a[0], a2 = s.a[1];
      MultList swapped = s.a;
      std::swap(swapped[0], swapped[1]);
      MultList merged{a1 + a2};
      merged.insert(merged.end(), s.a.begin() + 2, s.a.end());
      BigInt lhs = f_theta(t, s.a, s.b) - f_theta(t, swapped, s.b);
      BigInt coef = BigInt(static_cast<long>(a2 * t.ceil_mult(a1))) - static_cast<long>(a1 * t.ceil_mult(a2));
      BigInt rhs = coef * f_theta(t, merged, s.b);
      if (!o.expect(lhs == rhs, [&] { return where(t, s) + " f(S)-f(S')=" + str(lhs) + " rhs=" + str(rhs); })) return;
    }
  });
}

// Distinct permutations of xs (as value sequences).
std::vector<MultList> permutations(MultList xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<MultList> out;
  do out.push_back(xs);
  while (std::next_permutation(xs.begin(), xs.end()));
  return out;
}

Outcome suite_reorder(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const int max_N = ctx.cap_N(5);
  // prime-free data plus data with one primed entry split off either side
  std::vector<EndData> cases;
  for (const EndData& s : multiset_grid(top, max_N)) {
    cases.push_back(s);
    for (int side = 0; side < 2; ++side) {
      const MultList& from = side == 0 ? s.a : s.b;
      std::set<Mult> values(from.begin(), from.end());
      for (Mult x : values) {
        EndData p = s;
        MultList& list = side == 0 ? p.a : p.b;
        list.erase(std::find(list.begin(), list.end(), x));
        (side == 0 ? p.a_prime : p.b_prime).push_back(x);
        cases.push_back(p);
      }
    }
  }
  return for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (const EndData& s : cases) {
      if (kappa(t, s) != 1) continue;
      const BigInt c = c_theta(t, s);
      for (const MultList& a : permutations(s.a)) {
        for (const MultList& b : permutations(s.b)) {
          if (!is_ratio_ordered(t, a, b)) continue;
          MultList full_a = a, full_b = b;
          full_a.insert(full_a.end(), s.a_prime.begin(), s.a_prime.end());
          full_b.insert(full_b.end(), s.b_prime.begin(), s.b_prime.end());
          BigInt f = f_theta(t, full_a, full_b);
          if (!o.expect(f == c, [&] {
                return where(t, s) + " c=" + str(c) + " but ordering (" + list_str(full_a) + " | " + list_str(full_b) +
                       ") gives " + str(f);
              }))
            return;
        }
      }
    }
  });
}

Outcome suite_partition_values(const Context&) {
  Outcome o;
  const Theta t(5, 8, 7);
  const Partition in = incoming_partition(t, 7), out = outgoing_partition(t, 7);
  o.expect(in == Partition{3, 3, 1}, [&] { return "P^in_5/8(7)=" + in.str(); });
  o.expect(out == Partition{5, 2}, [&] { return "P^out_5/8(7)=" + out.str(); });
  const Partition lat = incoming_partition_lattice(t, 7);
  o.expect(lat == Partition{3, 3, 1}, [&] { return "lattice P^in_5/8(7)=" + lat.str(); });
  return o;
}

Outcome suite_greedy_lattice(const Context& ctx) {
  const Mult top = ctx.cap(30);
  return for_thetas(ctx.thetas(8, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (Mult M = 0; M <= top; ++M) {
      const Partition g = incoming_partition(t, M), l = incoming_partition_lattice(t, M);
      o.expect(g == l, [&] { return "theta=" + t.str() + " M=" + std::to_string(M) + " greedy=" + g.str() + " lattice=" + l.str(); });
      const Partition out = outgoing_partition(t, M);
      const Partition out_l = incoming_partition_lattice(t.negated(), M);
      o.expect(out == out_l, [&] { return "theta=" + t.str() + " M=" + std::to_string(M) + " P^out greedy=" + out.str() + " lattice=" + out_l.str(); });
      Mult sin = 0, sout = 0;
      for (Mult a : g.parts()) sin += t.ceil_mult(a);
      for (Mult b : out.parts()) sout += t.floor_mult(b);
      o.expect(sin == (M ? t.ceil_mult(M) : 0) && sout == (M ? t.floor_mult(M) : 0),
               [&] { return "theta=" + t.str() + " M=" + std::to_string(M) + " partition ceil/floor sums fail"; });
    }
  });
}

// P^in has nothing strictly above it and P^out nothing strictly below. Whether
// they are also comparable to every Q is tallied in the note, not asserted:
// that stronger form has counterexamples, e.g. theta = 11/13, M = 7, Q = (5,2).
Outcome suite_extremality(const Context& ctx) {
  const Mult top = ctx.cap(10);
  std::atomic<std::uint64_t> incomparable{0};
  std::vector<Theta> thetas = ctx.thetas(8, top);
  std::vector<std::string> first(thetas.size());
  Outcome o = for_thetas(thetas, ctx.cfg.threads, [&](const Theta& t, Outcome& r) {
    const std::size_t idx = static_cast<std::size_t>(&t - thetas.data());
    for (Mult M = 1; M <= top; ++M) {
      const Partition in = incoming_partition(t, M), out = outgoing_partition(t, M);
      r.expect(ge_theta(t, in, in, ctx.limits()) && ge_theta(t, out, out, ctx.limits()),
               [&] { return "theta=" + t.str() + " M=" + std::to_string(M) + " reflexivity fails"; });
      for (const Partition& q : all_partitions(M)) {
        if (q != in)
          r.expect(!ge_theta(t, q, in, ctx.limits()), [&] { return "theta=" + t.str() + " " + q.str() + " > P^in=" + in.str(); });
        if (q != out)
          r.expect(!ge_theta(t, out, q, ctx.limits()), [&] { return "theta=" + t.str() + " P^out=" + out.str() + " > " + q.str(); });
        if (!ge_theta(t, in, q, ctx.limits()) || !ge_theta(t, q, out, ctx.limits())) {
          ++incomparable;
          if (first[idx].empty()) first[idx] = "theta=" + t.str() + " M=" + std::to_string(M) + " Q=" + q.str();
        }
      }
    }
  });
  std::string example;
  for (const auto& f : first)
    if (!f.empty()) {
      example = f;
      break;
    }
  o.note = std::to_string(incomparable.load()) + " (theta, Q) pairs where Q is not between P^out and P^in" +
           (example.empty() ? "" : ", first: " + example);
  return o;
}

Outcome suite_order_tfae(const Context& ctx) {
  const Mult top_pairs = ctx.cap(9), top_tfae = ctx.cap(20);
  return for_thetas(ctx.thetas(8, std::max(top_pairs, top_tfae)), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (Mult M = 1; M <= top_pairs; ++M) {
      const auto ps = all_partitions(M);
      for (const Partition& p : ps)
        for (const Partition& q : ps) {
          bool d = ge_theta(t, p, q, ctx.limits()), m = ge_theta_ops(t, p, q, ctx.limits());
          if (!o.expect(d == m, [&] {
                return "theta=" + t.str() + " " + p.str() + " >= " + q.str() + ": decomposition=" + std::to_string(d) +
                       " moves=" + std::to_string(m);
              }))
            return;
        }
    }
    for (Mult M = 0; M <= top_tfae; ++M)
      for (Mult Mp = 0; Mp <= M; ++Mp) {
        TfaeResult r = tfae_check(t, Mp, M);
        o.expect(r.all_equal(), [&] {
          std::ostringstream os;
          os << "theta=" << t.str() << " M'=" << Mp << " M=" << M << " (a,b,c,d)=(" << r.concatenation << ","
             << r.additivity << "," << r.path_concatenation << "," << r.initial_segment << ")";
          return os.str();
        });
      }
  });
}

Outcome suite_indkey(const Context& ctx) {
  const Mult top = ctx.cap(20);
  return for_thetas(ctx.thetas(8, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (Mult M = 1; M <= top; ++M) {
      IndkeyStep r = indkey_step(t, M);
      o.expect(r.holds(), [&] {
        std::ostringstream os;
        os << "theta=" << t.str() << " M=" << M << " unique=" << r.unique_subset << " deltas=" << r.deltas_all_one
           << " in=" << r.in_matches << " out=" << r.out_matches;
        return os.str();
      });
    }
  });
}

Outcome suite_det_identity(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const auto grid = ordered_grid(top, ctx.cap_N(6));
  Outcome hand;
  {
    const Theta t(2, 5, 4);
    const EndData s = end_data({2}, {1, 1});
    const auto fams = enumerate_end_set_families(s);
    RationalMatrix A = matrix_A(t, fams.front(), s);
    hand.expect(fams.size() == 1 && A.rows() == 1 && A(0, 0) == Rational(-1, 2) && determinant(A) == Rational(-1, 2),
                [&] { return "hand case (2|1,1) at 2/5: A(0,0)=" + str(Rational(A(0, 0))); });
    hand.expect(det_identity_check(t, fams.front(), s), [&] { return std::string("hand case identity fails"); });
  }
  Outcome o = for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& r) {
    for (const EndData& s : grid) {
      if (s.a.size() + s.b.size() <= 2 || kappa(t, s) != 1) continue;
      for (const EndSetFamily& e : enumerate_end_set_families(s))
        if (!r.expect(det_identity_check(t, e, s), [&] { return where(t, s) + " E=" + family_str(e); })) return;
    }
  });
  o.cases += hand.cases;
  if (hand.failure) o.failure = hand.failure;
  return o;
}

bool vertex_index_zero(const Theta& t, const OrientedWeightedTree& tree, int* bad_vertex = nullptr) {
  for (int v : tree.internal_vertices()) {
    Mult sum = -1;
    for (int e : tree.incident(v))
      sum += tree.edge(e).tail == v ? t.ceil_mult(tree.edge(e).mult) : -t.floor_mult(tree.edge(e).mult);
    if (sum != 0) {
      if (bad_vertex) *bad_vertex = v;
      return false;
    }
  }
  return true;
}

Outcome suite_vertex_index(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const auto grid = multiset_grid(top, ctx.cap_N(6));
  Outcome control;
  {
    const Theta t(2, 5, 4);
    const auto trees = enumerate_trees(end_data({1, 1}, {1, 1}), false);
    bool all_fail = !trees.empty();
    for (const auto& tree : trees) all_fail = all_fail && !vertex_index_zero(t, tree);
    control.expect(all_fail, [] { return std::string("control (1,1|1,1) at 2/5 unexpectedly satisfies the identity"); });
  }
  Outcome o = for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& r) {
    for (const EndData& s : grid) {
      if (kappa(t, s) != 1) continue;
      for (const auto& tree : enumerate_trees(s, false)) {
        int v = -1;
        if (!r.expect(vertex_index_zero(t, tree, &v),
                      [&] { return where(t, s) + " tree " + canonical_form(tree) + " fails at vertex " + std::to_string(v); }))
          return;
      }
    }
  });
  o.cases += control.cases;
  if (control.failure) o.failure = control.failure;
  return o;
}

Outcome suite_hyperbolic(const Context& ctx) {
  Outcome o;
  const Mult top = ctx.cap(7);
  // every split of a multiset into an unprimed and a primed part
  auto splits = [](const Partition& p) {
    std::set<std::pair<MultList, MultList>> out;
    const std::size_t n = p.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      MultList x, y;
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? y : x).push_back(p[i]);
      out.emplace(x, y);
    }
    return out;
  };
  for (Mult T = 1; T <= top; ++T) {
    const auto ps = all_partitions(T);
    for (const Partition& pp : ps)
      for (const Partition& mp : ps)
        for (const auto& [a, ap] : splits(pp))
          for (const auto& [b, bp] : splits(mp))
            for (Mult n : {0, 1, 2, 3}) {
              OrbitKind kind = OrbitKind::hyperbolic(n);
              EndData s{a, ap, b, bp};
              MultList plus = a, minus = b;
              plus.insert(plus.end(), ap.begin(), ap.end());
              minus.insert(minus.end(), bp.begin(), bp.end());
              BigInt c = c_hyperbolic(kind, s);
              BigInt brute = hyperbolic_matching_count(kind.tag() == OrbitKind::Tag::positive_hyperbolic, plus, minus);
              o.expect(c == brute, [&] {
                return kind.str() + " S=(" + s.str() + ") c=" + str(c) + " matching count=" + str(brute);
              });
            }
  }
  return o;
}

Outcome suite_bijection(const Context& ctx) {
  const Mult top = ctx.cap(8);
  const auto grid = ordered_grid(top, ctx.cap_N(6));
  // A(S) and E(S) do not depend on theta; sweep the grid once per kappa profile anyway
  return for_thetas(ctx.thetas(6, top), ctx.cfg.threads, [&](const Theta& t, Outcome& o) {
    for (const EndData& s : grid) {
      if (s.a.size() + s.b.size() <= 2 || kappa(t, s) != 1) continue;
      std::multiset<std::string> image;
      for (const EndSetFamily& e : enumerate_end_set_families(s)) {
        OrientedWeightedTree tree = phi(e, s);
        if (!o.expect(is_admissible(tree) && validate_tree(tree, s),
                      [&] { return where(t, s) + " phi(" + family_str(e) + ") is not an admissible tree"; }))
          return;
        image.insert(canonical_form(tree));
      }
      std::multiset<std::string> admissible;
      for (const auto& tree : enumerate_trees(s, true))
        if (is_admissible(tree)) admissible.insert(canonical_form(tree));
      if (!o.expect(image == admissible, [&] {
            return where(t, s) + " |E(S)|=" + std::to_string(image.size()) + " |A(S)|=" + std::to_string(admissible.size()) +
                   " images differ";
          }))
        return;
    }
  });
}

struct Entry {
  SuiteInfo info;
  std::function<Outcome(const Context&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"c_aa", "c(a|a) = a for a <= 12"}, suite_c_aa},
      {{"c_single_positive", "c(a1|b) = prod b for theta in (0,1/a1), a1 <= 9"}, suite_c_single_positive},
      {{"c_two_one_one", "c(2|1,1) = 1 for theta in (0,1/2)"}, suite_c_two_one_one},
      {{"pinpout", "c(P^in(M)|P^out(M)) = 1 for M <= 12"}, suite_pinpout},
      {{"ptc", "PTC factorial values and (;x|;x) components, M <= 9"}, suite_ptc},
      {{"three_way", "recursion = tree sum = determinant sum, N <= 6, M <= 8"}, suite_three_way},
      {{"symmetry", "f and c symmetric under theta -> -theta with sides swapped"}, suite_symmetry},
      {{"ihx", "IHX defect identity"}, suite_ihx},
      {{"reorder", "c independent of ratio-admissible orderings, N <= 5"}, suite_reorder},
      {{"partition_values", "P^in_5/8(7) = (3,3,1), P^out_5/8(7) = (5,2)"}, suite_partition_values},
      {{"greedy_lattice", "greedy = lattice path partitions and ceil/floor sums, M <= 30"}, suite_greedy_lattice},
      {{"extremality", "P^in maximal and P^out minimal under >=_theta, M <= 10"}, suite_extremality},
      {{"order_tfae", "decomposition order = move closure (M <= 9); tfae agreement (M <= 20)"}, suite_order_tfae},
      {{"indkey", "incoming/outgoing reduction step, M <= 20"}, suite_indkey},
      {{"det_identity", "det(A) * prod m = (-1)^(N- - 1) W for every E"}, suite_det_identity},
      {{"vertex_index", "vertex index identity on kappa = 1 trees; (1,1|1,1) control fails"}, suite_vertex_index},
      {{"hyperbolic", "c_hyperbolic = matching count, total <= 7"}, suite_hyperbolic},
      {{"bijection", "phi(E(S)) = admissible trees, elementwise"}, suite_bijection},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> names = [] {
    std::vector<SuiteInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  for (const Entry& e : registry()) {
    if (e.info.name != name) continue;
    SuiteResult r;
    r.name = e.info.name;
    r.title = e.info.title;
    Outcome o;
    try {
      o = e.run(Context{cfg});
    } catch (const std::exception& ex) {
      o.failure = std::string("raised: ") + ex.what();
    }
    r.cases = o.cases;
    r.pass = !o.failure;
    r.note = o.note;
    if (o.failure) r.counterexample = *o.failure;
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Theta> theta_sweep(int count, Mult guard, std::uint64_t seed,
                               const std::vector<std::pair<Mult, Mult>>& extras) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(guard) * 0x9E3779B97F4A7C15ULL));
  std::vector<Theta> out;
  for (int i = 0; i < count; ++i) {
    const Mult q = guard + 1 + i;
    // cycle through (0,1), (-1,0), (1,2) and (-2,2)
    Mult lo, hi;
    switch (i % 4) {
      case 0: lo = 1, hi = q - 1; break;
      case 1: lo = -q + 1, hi = -1; break;
      case 2: lo = q + 1, hi = 2 * q - 1; break;
      default: lo = -2 * q + 1, hi = 2 * q - 1; break;
    }
    for (;;) {
      Mult p = lo + static_cast<Mult>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
      if (p != 0 && std::gcd(p < 0 ? -p : p, q) == 1) {
        out.emplace_back(p, q, guard);
        break;
      }
    }
  }
  for (auto [p, q] : extras) {
    Mult g = std::gcd(p < 0 ? -p : p, q);
    if (q > 0 && q / (g ? g : 1) > guard) out.emplace_back(p, q, guard);
  }
  return out;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GLUECOEFF_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

BigInt hyperbolic_matching_count(bool positive, const MultList& plus, const MultList& minus) {
  if (plus.size() != minus.size()) return 0;
  if (positive) {
    std::set<Mult> distinct(plus.begin(), plus.end());
    if (distinct.size() != plus.size()) return 0;
  } else if (std::any_of(plus.begin(), plus.end(), [](Mult x) { return x % 2 == 0; })) {
    return 0;
  }
  std::vector<bool> taken(minus.size(), false);
  std::function<BigInt(std::size_t)> count = [&](std::size_t i) -> BigInt {
    if (i == plus.size()) return 1;
    BigInt n = 0;
    for (std::size_t j = 0; j < minus.size(); ++j) {
      if (taken[j] || minus[j] != plus[i]) continue;
      taken[j] = true;
      n += count(i + 1);
      taken[j] = false;
    }
    return n;
  };
  BigInt n = count(0);
  for (Mult x : plus) n *= static_cast<long>(x);
  return n;
}

}  // namespace gluecoeff

#include "gluecoeff/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gluecoeff/coefficients.hpp"
#include "gluecoeff/cokernel.hpp"
#include "gluecoeff/trees.hpp"
#include "gluecoeff/verify.hpp"

namespace gluecoeff::cli {

namespace {

using json = nlohmann::ordered_json;

// Scanner over the raw text; positions reported are offsets into it.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::size_t pos() const { return pos_; }

  Mult number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size()) throw ParseError("expected a number, got end of input", pos_);
      throw ParseError(std::string("expected a number, got '") + text_[pos_] + "'", pos_);
    }
    Mult v = 0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || p != text_.data() + pos_) throw ParseError("number out of range", start);
    return v;
  }

  // Positive entries separated by commas; may be empty.
  MultList list() {
    MultList out;
    if (!peek_digit()) return out;
    do {
      const std::size_t at = (skip_space(), pos_);
      Mult v = number();
      if (v <= 0) throw ParseError("multiplicities must be positive", at);
      out.push_back(v);
    } while (accept(','));
    return out;
  }

  [[noreturn]] void unexpected() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

json to_json(const Partition& p) { return json(p.parts()); }
json to_json(const EndData& s) {
  return json{{"a", s.a}, {"a_prime", s.a_prime}, {"b", s.b}, {"b_prime", s.b_prime}};
}

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json checks = json::array();
  std::ostringstream plain;

  void check(const std::string& name, bool pass) { checks.push_back(json{{"name", name}, {"pass", pass}}); }
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["pass"].get<bool>(); });
  }
  json document() const {
    return json{{"command", command}, {"inputs", inputs}, {"result", result}, {"checks", checks}};
  }
};

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

void plain_checks(Report& r) {
  for (const json& c : r.checks)
    r.plain << "check " << c["name"].get<std::string>() << ": " << pass_word(c["pass"].get<bool>()) << "\n";
}

struct Options {
  bool json_out = false;
  int threads = 0;
  std::uint64_t node_cap = SearchLimits{}.node_cap;

  std::string theta, s, p, q;
  std::optional<Mult> hyperbolic;
  std::vector<std::string> orbits;
  int eps_plus = 1, eps_minus = 1;
  Mult M = 0;
  std::optional<Mult> m, genus;
  bool trivalent = false, dump_trees = false;
  int max_leaves = TreeLimits{}.max_leaves;
  std::size_t list_limit = 1000;

  std::vector<std::string> suite{"all"};
  std::optional<Mult> max_M;
  int max_N = VerifyConfig{}.max_N;
  std::uint64_t seed = VerifyConfig{}.seed;
  std::vector<std::string> extra_thetas;

  SearchLimits limits() const { return SearchLimits{node_cap}; }
};

OrbitKind orbit_from(const Options& o, Mult guard) {
  if (o.hyperbolic && !o.theta.empty()) throw std::invalid_argument("give either --theta or --hyperbolic, not both");
  if (o.hyperbolic) return OrbitKind::hyperbolic(*o.hyperbolic);
  if (o.theta.empty()) throw std::invalid_argument("--theta or --hyperbolic is required");
  return OrbitKind::elliptic(parse_theta(o.theta, guard));
}

void put_orbit(Report& r, const OrbitKind& k) {
  if (k.is_elliptic())
    r.inputs["theta"] = k.theta().str();
  else
    r.inputs["hyperbolic"] = k.rotation();
}

void cmd_coeff(const Options& o, Report& r) {
  if (!o.orbits.empty()) {
    if (!o.s.empty() || !o.theta.empty() || o.hyperbolic)
      throw std::invalid_argument("--orbit cannot be combined with --S, --theta or --hyperbolic");
    GluingInput in;
    in.eps_plus = o.eps_plus;
    in.eps_minus = o.eps_minus;
    json orbits = json::array(), factors = json::array();
    for (const std::string& text : o.orbits) {
      const auto colon = text.find(':');
      if (colon == std::string::npos) throw ParseError("expected KIND:S", text.size());
      EndData s = parse_end_data(text.substr(colon + 1));
      OrbitKind kind = parse_orbit_kind(text.substr(0, colon), s.plus_total());
      BigInt c = kind.is_elliptic() ? c_theta(kind.theta(), s, o.limits()) : c_hyperbolic(kind, s);
      orbits.push_back(json{{"kind", kind.str()}, {"S", to_json(s)}});
      factors.push_back(c.get_str());
      in.orbits.push_back(OrbitGluing{kind, s});
    }
    r.inputs["orbits"] = orbits;
    r.inputs["eps_plus"] = o.eps_plus;
    r.inputs["eps_minus"] = o.eps_minus;
    BigInt total = glue_count(in, o.limits());
    r.result["value"] = total.get_str();
    r.result["factors"] = factors;
    r.plain << total.get_str() << "\n";
    return;
  }
  if (o.s.empty()) throw std::invalid_argument("--S is required");
  EndData s = parse_end_data(o.s);
  OrbitKind kind = orbit_from(o, s.plus_total());
  put_orbit(r, kind);
  r.inputs["S"] = to_json(s);
  if (kind.is_elliptic()) {
    r.result["kappa"] = kappa(kind.theta(), s);
    BigInt c = c_theta(kind.theta(), s, o.limits());
    r.result["value"] = c.get_str();
    r.plain << c.get_str() << "\n";
  } else {
    BigInt c = c_hyperbolic(kind, s);
    r.result["value"] = c.get_str();
    r.plain << c.get_str() << "\n";
  }
}

void cmd_f(const Options& o, Report& r) {
  EndData s = parse_end_data(o.s);
  if (!s.prime_free()) throw std::invalid_argument("f takes end data without primed parts");
  Theta t = parse_theta(o.theta, s.plus_total());
  r.inputs["theta"] = t.str();
  r.inputs["S"] = to_json(s);
  BigInt rec = f_theta(t, s.a, s.b);
  BigInt trees = f_theta_via_trees(t, s.a, s.b);
  r.result["recursion"] = rec.get_str();
  r.result["trees"] = trees.get_str();
  r.check("recursion = trees", rec == trees);
  r.plain << "recursion " << rec.get_str() << "\ntrees " << trees.get_str() << "\n";
  try {
    BigInt det = f_via_determinants(t, s.a, s.b);
    r.result["determinants"] = det.get_str();
    r.check("recursion = determinants", rec == det);
    r.plain << "determinants " << det.get_str() << "\n";
  } catch (const NotSupported& e) {
    r.result["determinants"] = nullptr;
    r.result["determinants_skipped"] = e.what();
    r.plain << "determinants n/a (" << e.what() << ")\n";
  }
  plain_checks(r);
}

void cmd_partition(const Options& o, Report& r) {
  if (o.M < 0) throw std::invalid_argument("--M must be nonnegative");
  OrbitKind kind = orbit_from(o, o.M);
  put_orbit(r, kind);
  r.inputs["M"] = o.M;
  auto [in, out] = orbit_partitions(kind, o.M);
  r.result["in"] = to_json(in);
  r.result["out"] = to_json(out);
  r.result["in_factorial"] = partition_factorial(in).get_str();
  r.result["out_factorial"] = partition_factorial(out).get_str();
  r.plain << "in=" << in.str() << " out=" << out.str() << "\n"
          << "in! " << partition_factorial(in).get_str() << "\nout! " << partition_factorial(out).get_str() << "\n";
  if (kind.is_elliptic()) {
    json path = json::array();
    for (auto [x, y] : incoming_lattice_path(kind.theta(), o.M)) path.push_back(json::array({x, y}));
    r.result["lattice_path"] = path;
    r.check("greedy = lattice path", incoming_partition_lattice(kind.theta(), o.M) == in);
    plain_checks(r);
  }
}

void cmd_order(const Options& o, Report& r) {
  Partition p(parse_list(o.p)), q(parse_list(o.q));
  if (p.total() != q.total()) throw SumMismatch("P and Q must have the same total");
  Theta t = parse_theta(o.theta, p.total());
  r.inputs["theta"] = t.str();
  r.inputs["P"] = to_json(p);
  r.inputs["Q"] = to_json(q);
  const bool pq = ge_theta(t, p, q, o.limits()), qp = ge_theta(t, q, p, o.limits());
  r.result["P_ge_Q"] = pq;
  r.result["Q_ge_P"] = qp;
  r.check("decomposition = moves, P >= Q", pq == ge_theta_ops(t, p, q, o.limits()));
  r.check("decomposition = moves, Q >= P", qp == ge_theta_ops(t, q, p, o.limits()));
  r.plain << p.str() << " >= " << q.str() << ": " << (pq ? "yes" : "no") << "\n"
          << q.str() << " >= " << p.str() << ": " << (qp ? "yes" : "no") << "\n";
  plain_checks(r);
}

void cmd_trees(const Options& o, Report& r) {
  EndData s = parse_end_data(o.s);
  std::optional<Theta> t;
  if (!o.theta.empty()) t = parse_theta(o.theta, s.plus_total());
  r.inputs["S"] = to_json(s);
  if (t) r.inputs["theta"] = t->str();
  r.inputs["trivalent_only"] = o.trivalent;
  const auto trees = enumerate_trees(s, o.trivalent, TreeLimits{o.max_leaves});

  std::set<std::string> admissible;
  BigInt weight_sum = 0;
  json listed = json::array();
  for (const OrientedWeightedTree& tree : trees) {
    const std::string form = canonical_form(tree);
    const bool adm = is_admissible(tree);
    if (adm) admissible.insert(form);
    json entry{{"form", form}, {"admissible", adm}};
    std::string w = "-";
    if (adm && t) {
      BigInt v = weight(*t, tree, canonical_pairing(tree));
      weight_sum += v;
      w = v.get_str();
      entry["weight"] = w;
    }
    if (o.dump_trees) {
      listed.push_back(entry);
      r.plain << form << " " << (adm ? "admissible" : "-") << " " << w << "\n";
    }
  }
  r.result["count"] = trees.size();
  r.result["admissible"] = admissible.size();
  r.plain << "trees " << trees.size() << "\nadmissible " << admissible.size() << "\n";
  if (t) {
    r.result["weight_sum"] = weight_sum.get_str();
    r.plain << "weight sum " << weight_sum.get_str() << "\n";
  }
  if (s.prime_free() && s.size() >= 3 && !o.trivalent) {
    std::set<std::string> image;
    const auto families = enumerate_end_set_families(s);
    for (const EndSetFamily& e : families) image.insert(canonical_form(phi(e, s)));
    r.result["end_set_families"] = families.size();
    r.check("phi(E(S)) = admissible trees", image == admissible && families.size() == image.size());
    if (t) r.check("weight sum = f", weight_sum == f_theta(*t, s.a, s.b));
  }
  if (o.dump_trees) r.result["trees"] = listed;
  plain_checks(r);
}

void cmd_decompose(const Options& o, Report& r) {
  EndData s = parse_end_data(o.s);
  Theta t = parse_theta(o.theta, s.plus_total());
  r.inputs["theta"] = t.str();
  r.inputs["S"] = to_json(s);
  r.result["kappa"] = kappa(t, s);
  std::uint64_t count = 0;
  bool components_ok = true;
  json classes = json::array();
  for_each_theta_decomposition(
      t, s,
      [&](const ThetaDecomposition& d) {
        ++count;
        json comps = json::array();
        std::string line;
        for (const EndData& c : d.components) {
          components_ok = components_ok && kappa(t, c) == 1;
          comps.push_back(c.str());
          line += (line.empty() ? "" : "  ") + std::string("[") + c.str() + "]";
        }
        if (classes.size() < o.list_limit) {
          classes.push_back(comps);
          r.plain << line << "\n";
        }
        return true;
      },
      o.limits());
  r.result["count"] = count;
  r.result["classes"] = classes;
  r.result["listed"] = classes.size();
  r.check("every component has kappa 1", components_ok);
  r.plain << "classes " << count << (classes.size() < count ? " (listing truncated)" : "") << "\n";
  plain_checks(r);
}

void cmd_index(const Options& o, Report& r) {
  std::optional<EndData> s;
  if (!o.s.empty()) s = parse_end_data(o.s);
  if (!o.m && !s) throw std::invalid_argument("index needs --m, --S, or both");
  Mult guard = std::max<Mult>(o.m.value_or(1), s ? s->plus_total() : 1);
  OrbitKind kind = orbit_from(o, guard);
  put_orbit(r, kind);
  if (o.m) {
    r.inputs["m"] = *o.m;
    Mult cz = cz_index(kind, *o.m);
    r.result["cz"] = cz;
    r.plain << "cz " << cz << "\n";
  }
  if (s) {
    if (!s->prime_free()) throw std::invalid_argument("index takes end data without primed parts");
    const Mult g = o.genus.value_or(0);
    r.inputs["S"] = to_json(*s);
    r.inputs["genus"] = g;
    Mult ind = branched_cover_index(kind, g, s->a, s->b);
    r.result["branched_cover_index"] = ind;
    r.plain << "branched cover index " << ind << "\n";
  }
}

void cmd_verify(const Options& o, Report& r) {
  VerifyConfig cfg;
  cfg.max_M = o.max_M;
  cfg.max_N = o.max_N;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.node_cap = o.node_cap;
  if (o.max_M && *o.max_M < 1) throw std::invalid_argument("--max-M must be positive");
  if (o.max_N < 2) throw std::invalid_argument("--max-N must be at least 2");
  for (const std::string& text : o.extra_thetas) {
    Theta t = parse_theta(text, o.max_M.value_or(1));
    cfg.extra_thetas.emplace_back(t.num(), t.den());
  }

  std::vector<std::string> names;
  for (const std::string& n : o.suite) {
    if (n == "all") {
      for (const SuiteInfo& info : suites()) names.push_back(info.name);
      continue;
    }
    const bool known = std::any_of(suites().begin(), suites().end(), [&](const SuiteInfo& i) { return i.name == n; });
    if (!known) throw std::invalid_argument("unknown suite '" + n + "'");
    names.push_back(n);
  }
  std::vector<std::string> unique;
  for (const std::string& n : names)
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);

  r.inputs["suites"] = unique;
  r.inputs["max_M"] = o.max_M ? json(*o.max_M) : json(nullptr);
  r.inputs["max_N"] = o.max_N;
  r.inputs["seed"] = o.seed;
  r.inputs["extra_thetas"] = o.extra_thetas;
  json out = json::array();
  for (const std::string& n : unique) {
    SuiteResult s = run_suite(n, cfg);
    json entry{{"name", s.name}, {"title", s.title}, {"pass", s.pass}, {"cases", s.cases}};
    if (!s.counterexample.empty()) entry["counterexample"] = s.counterexample;
    if (!s.note.empty()) entry["note"] = s.note;
    out.push_back(entry);
    r.check(s.name, s.pass);
    r.plain << "[" << (s.pass ? "PASS" : "FAIL") << "] " << s.name << "  " << s.title << " (" << s.cases
            << " checks)\n";
    if (!s.note.empty()) r.plain << "       note: " << s.note << "\n";
    if (!s.pass) r.plain << "       counterexample: " << s.counterexample << "\n";
  }
  r.result["suites"] = out;
  const auto passed = std::count_if(out.begin(), out.end(), [](const json& e) { return e["pass"].get<bool>(); });
  r.result["passed"] = passed;
  r.plain << passed << " of " << out.size() << " suites passed\n";
}

}  // namespace

MultList parse_list(const std::string& text) {
  Scanner sc(text);
  MultList out = sc.list();
  if (!sc.at_end()) sc.unexpected();
  return out;
}

EndData parse_end_data(const std::string& text) {
  Scanner sc(text);
  EndData s;
  s.a = sc.list();
  if (sc.accept(';')) s.a_prime = sc.list();
  if (!sc.accept('|')) sc.unexpected();
  s.b = sc.list();
  if (sc.accept(';')) s.b_prime = sc.list();
  if (!sc.at_end()) sc.unexpected();
  if (s.size() == 0) throw ParseError("no ends given", 0);
  require_balanced(s);
  return s;
}

Theta parse_theta(const std::string& text, Mult guard) {
  Scanner sc(text);
  const bool negative = sc.accept('-');
  Mult p = sc.number();
  if (!sc.accept('/')) sc.unexpected();
  const std::size_t den_at = sc.pos();
  Mult q = sc.number();
  if (!sc.at_end()) sc.unexpected();
  if (q == 0) throw ParseError("zero denominator", den_at);
  return Theta(negative ? -p : p, q, guard);
}

OrbitKind parse_orbit_kind(const std::string& text, Mult guard) {
  Scanner sc(text);
  if (sc.accept('h')) {
    const bool negative = sc.accept('-');
    Mult n = sc.number();
    if (!sc.at_end()) sc.unexpected();
    return OrbitKind::hyperbolic(negative ? -n : n);
  }
  return OrbitKind::elliptic(parse_theta(text, guard));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact gluing coefficients and their cross-checks", "gluecoeff"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_out, "Print a JSON report");
  app.add_option("--threads", o.threads, "Worker threads (default: GLUECOEFF_THREADS, else all cores)");
  app.add_option("--node-cap", o.node_cap, "Search node limit for decompositions");

  auto theta_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--theta", o.theta, "Rotation angle p/q (use --theta=-p/q when negative)");
    if (required) opt->required();
  };

  auto* coeff = app.add_subcommand("coeff", "c_theta, hyperbolic coefficient, or a glued product");
  theta_opt(coeff, false);
  coeff->add_option("--hyperbolic", o.hyperbolic, "Hyperbolic orbit with this rotation number");
  coeff->add_option("--S", o.s, "End data 'a;a' | b;b''");
  coeff->add_option("--orbit", o.orbits, "KIND:S per orbit, KIND = p/q or h<n>; repeat for a product")
      ->take_all();
  coeff->add_option("--eps-plus", o.eps_plus, "Sign at the positive end")->check(CLI::IsMember({-1, 1}));
  coeff->add_option("--eps-minus", o.eps_minus, "Sign at the negative end")->check(CLI::IsMember({-1, 1}));

  auto* f = app.add_subcommand("f", "f_theta by recursion, tree sum and determinants");
  theta_opt(f, true);
  f->add_option("--S", o.s, "End data a | b")->required();

  auto* part = app.add_subcommand("partition", "Incoming and outgoing partitions");
  theta_opt(part, false);
  part->add_option("--hyperbolic", o.hyperbolic, "Hyperbolic orbit with this rotation number");
  part->add_option("--M", o.M, "Total multiplicity")->required();

  auto* order = app.add_subcommand("order", "Compare two partitions under >=_theta");
  theta_opt(order, true);
  order->add_option("--P", o.p, "First partition, e.g. 3,3,1")->required();
  order->add_option("--Q", o.q, "Second partition")->required();

  auto* trees = app.add_subcommand("trees", "Enumerate trees, admissibility and weights");
  theta_opt(trees, false);
  trees->add_option("--S", o.s, "End data")->required();
  trees->add_flag("--trivalent", o.trivalent, "Only trivalent trees");
  trees->add_flag("--dump-trees", o.dump_trees, "List every tree in text form");
  trees->add_option("--max-leaves", o.max_leaves, "Refuse larger inputs");

  auto* dec = app.add_subcommand("decompose", "List theta-decomposition classes");
  theta_opt(dec, true);
  dec->add_option("--S", o.s, "End data")->required();
  dec->add_option("--limit", o.list_limit, "Classes to list (all are counted)");

  auto* index = app.add_subcommand("index", "Conley-Zehnder and branched cover indices");
  theta_opt(index, false);
  index->add_option("--hyperbolic", o.hyperbolic, "Hyperbolic orbit with this rotation number");
  index->add_option("--m", o.m, "Multiplicity for the Conley-Zehnder index");
  index->add_option("--S", o.s, "End data for the branched cover index");
  index->add_option("--genus", o.genus, "Genus of the cover (default 0)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "Suite names or 'all'")->delimiter(',')->take_all();
  verify->add_option("--max-M", o.max_M, "Cap on M for every suite");
  verify->add_option("--max-N", o.max_N, "Cap on the number of ends");
  verify->add_option("--seed", o.seed, "Seed for the theta sweep");
  verify->add_option("--extra-theta", o.extra_thetas, "Additional p/q values to sweep")->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report r;
  try {
    CLI::App* sub = app.get_subcommands().front();
    r.command = sub->get_name();
    if (sub == coeff) cmd_coeff(o, r);
    else if (sub == f) cmd_f(o, r);
    else if (sub == part) cmd_partition(o, r);
    else if (sub == order) cmd_order(o, r);
    else if (sub == trees) cmd_trees(o, r);
    else if (sub == dec) cmd_decompose(o, r);
    else if (sub == index) cmd_index(o, r);
    else cmd_verify(o, r);
  } catch (const std::exception& e) {
    err << "gluecoeff " << r.command << ": " << e.what() << "\n";
    return 2;
  }

  if (o.json_out)
    out << r.document().dump(2) << "\n";
  else
    out << r.plain.str();
  if (!r.all_pass()) {
    err << "gluecoeff " << r.command << ": a check failed\n";
    return 1;
  }
  return 0;
}

}  // namespace gluecoeff::cli

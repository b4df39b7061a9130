#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "hyperarr/charpoly.hpp"
#include "hyperarr/cli.hpp"
#include "hyperarr/errors.hpp"
#include "hyperarr/finitefield.hpp"

namespace hyperarr::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.get_str(); }

Json big_array(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json coeff_array(const IntPolynomial& p) {
  Json out = Json::array();
  if (p.is_zero()) out.push_back("0");
  for (const auto& c : p.coeffs()) out.push_back(str(c));
  return out;
}

Json bool_array(const std::vector<bool>& v) {
  Json out = Json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

/// What a command produced, in every output format.
struct Output {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::ostringstream text;
  bool failed = false;  // a verification did not hold
};

std::string render_csv(const Output& o) {
  std::string s;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    s += '\n';
  };
  line(o.header);
  for (const auto& r : o.rows) line(r);
  return s;
}

struct Settings {
  std::string format = "text";
  unsigned threads = 0;
  std::uint64_t budget_nodes = 0;
  std::uint64_t seed = 1;

  RunOptions run_options() const {
    RunOptions opts;
    opts.threads = threads;
    opts.node_budget = budget_nodes;
    return opts;
  }
};

unsigned default_threads() {
  if (const char* env = std::getenv("ARRANGE_THREADS")) {
    try {
      const auto v = std::stoul(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("ARRANGE_THREADS='") + env + "' is not a positive integer");
  }
  return 1;
}

// ---------------------------------------------------------------------------
// charpoly / count / table1

void cmd_charpoly(const std::string& spec, std::size_t n, std::uint64_t floor, unsigned retries,
                  const RunOptions& opts, Output& o) {
  const auto family = parse_family(spec);
  const auto r = interpolate_charpoly(family, n, {floor, retries}, opts);
  o.doc["command"] = "charpoly";
  o.doc["family"] = to_string(family);
  o.doc["n"] = n;
  o.doc["coeffs"] = coeff_array(r.poly);
  o.doc["poly"] = to_string(r.poly);
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back({{"q", s.q}, {"count", str(s.count)}});
  o.doc["samples"] = samples;
  o.doc["validation_prime"] = r.validation_prime;
  o.doc["validation_count"] = str(r.validation_count);
  o.doc["floor"] = r.floor;
  o.doc["pass"] = true;

  o.header = {"power", "coeff"};
  for (std::size_t i = 0; i < r.poly.coeffs().size(); ++i) o.rows.push_back({std::to_string(i), str(r.poly.coeffs()[i])});
  o.text << "family " << to_string(family) << ", n = " << n << "\n";
  o.text << "chi(t) = " << to_string(r.poly) << "\n";
  for (const auto& s : r.samples) o.text << "  q = " << s.q << ": " << s.count << "\n";
  if (n > 0) o.text << "validated at q = " << r.validation_prime << ": " << r.validation_count << "\n";
}

void cmd_count(const std::string& spec, std::optional<std::size_t> n, bool all, std::optional<std::size_t> cap,
               const RunOptions& opts, Output& o) {
  const auto g = parse_graph(spec);
  o.doc["command"] = "count";
  o.doc["graph"] = spec;
  o.doc["vertices"] = g.vcount();
  o.doc["edges"] = g.edge_count();
  if (!all) {
    if (!n) throw ParseError("count needs --n or --all");
    const auto c = count_independent_sets(g, *n, opts);
    o.doc["n"] = *n;
    o.doc["count"] = str(c);
    o.doc["pass"] = true;
    o.header = {"n", "count"};
    o.rows.push_back({std::to_string(*n), str(c)});
    o.text << c << "\n";
    return;
  }
  const auto counts = independence_counts(g, cap, opts);
  o.doc["counts"] = big_array(counts.counts);
  o.doc["complete"] = counts.complete;
  o.doc["pass"] = true;
  o.header = {"n", "count"};
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    o.rows.push_back({std::to_string(i), str(counts.counts[i])});
    o.text << "s_" << i << " = " << counts.counts[i] << "\n";
  }
}

void cmd_table1(const std::string& pairs_text, const std::string& primes_text, const RunOptions& opts, Output& o) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& p : parse_int_lists(pairs_text)) {
    if (p.size() != 2) throw ParseError("each pair needs exactly two integers");
    pairs.emplace_back(p[0], p[1]);
  }
  std::vector<std::uint64_t> primes;
  for (auto q : parse_int_list(primes_text)) {
    if (q < 2) throw ParseError("primes must be at least 2");
    primes.push_back(static_cast<std::uint64_t>(q));
  }
  const auto values = table1_values(pairs, primes, opts);
  o.doc["command"] = "table1";
  o.doc["primes"] = primes;
  Json rows = Json::array();
  o.header = {"a1", "a2"};
  for (auto q : primes) o.header.push_back(std::to_string(q));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    rows.push_back({{"a", {pairs[r].first, pairs[r].second}}, {"values", big_array(values[r])}});
    std::vector<std::string> row{std::to_string(pairs[r].first), std::to_string(pairs[r].second)};
    for (const auto& v : values[r]) row.push_back(str(v));
    o.rows.push_back(std::move(row));
  }
  o.doc["rows"] = rows;
  o.doc["pass"] = true;
  o.text << render_csv(o);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string id;
  std::string a = "2";
  std::string b;
  std::string parts;
  std::string partitions;
  std::string sets = "2,3;2,5;3,5;5,7";
  std::string dependent = "2,4";
  std::size_t n = 2;
  std::size_t n_max = 6;
  std::size_t m = 1;
  std::int64_t a_max = 1;
};

struct Check {
  std::string name;
  bool pass;
  std::string expected;
  std::string actual;
};

void add_checks(Output& o, const std::vector<Check>& checks) {
  Json arr = Json::array();
  bool all = true;
  o.header = {"check", "pass", "expected", "actual"};
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    o.rows.push_back({c.name, c.pass ? "true" : "false", c.expected, c.actual});
    o.text << verdict(c.pass) << "  " << c.name;
    if (!c.pass || !c.expected.empty()) o.text << "  expected " << c.expected << ", got " << c.actual;
    o.text << "\n";
    all = all && c.pass;
  }
  o.doc["checks"] = arr;
  o.doc["pass"] = all;
  o.failed = !all;
}

Json invariance_json(const InvarianceReport& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.partitions.size(); ++i)
    rows.push_back({{"parts", r.partitions[i]}, {"counts", big_array(r.counts[i])}});
  return {{"partitions", rows}, {"equal", bool_array(r.equal)}, {"agree_through", r.agree_through}};
}

void invariance_rows(const InvarianceReport& r, Output& o) {
  o.header = {"n"};
  for (const auto& p : r.partitions) o.header.push_back("\"" + join(p) + "\"");
  o.header.push_back("equal");
  if (r.counts.empty()) {
    o.text << "no partitions given\n";
    return;
  }
  for (std::size_t n = 0; n < r.equal.size(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : r.counts) row.push_back(str(c[n]));
    row.push_back(r.equal[n] ? "true" : "false");
    o.rows.push_back(row);
    o.text << "n = " << n << ":";
    for (const auto& c : r.counts) o.text << " " << c[n];
    o.text << "  " << (r.equal[n] ? "equal" : "DIFFERENT") << "\n";
  }
}

std::vector<std::int64_t> powers(std::int64_t base, std::size_t m) {
  std::vector<std::int64_t> out;
  std::int64_t v = 1;
  for (std::size_t i = 0; i < m; ++i) out.push_back(v *= base);
  return out;
}

void cmd_verify(const VerifyArgs& v, const RunOptions& opts, Output& o) {
  o.doc["command"] = "verify";
  o.doc["theorem"] = v.id;
  const auto a = parse_int_list(v.a);
  const auto b = parse_int_list(v.b);
  auto poly_check = [](std::string name, const IntPolynomial& expected, const IntPolynomial& actual) {
    return Check{std::move(name), expected == actual, to_string(expected), to_string(actual)};
  };
  std::vector<Check> checks;

  if (v.id == "thm2.1") {
    o.doc["n"] = v.n;
    const auto sets = parse_int_lists(v.sets);
    if (sets.empty()) throw ParseError("thm2.1 needs at least one independent set of multipliers");
    const auto ref = interpolate_charpoly(ArrangementFamily::eq1(sets.front()), v.n, {}, opts).poly;
    o.doc["poly"] = to_string(ref);
    for (const auto& s : sets)
      checks.push_back(poly_check("a={" + join(s) + "} matches", ref,
                                  interpolate_charpoly(ArrangementFamily::eq1(s), v.n, {}, opts).poly));
    for (const auto& d : parse_int_lists(v.dependent)) {
      const auto p = interpolate_charpoly(ArrangementFamily::eq1(d), v.n, {}, opts).poly;
      checks.push_back({"a={" + join(d) + "} differs", !(p == ref), "!= " + to_string(ref), to_string(p)});
    }
  } else if (v.id == "thm2.2") {
    o.doc["a"] = a;
    o.doc["n"] = v.n;
    const auto r = theorem22_check(a, v.n, opts);
    o.doc["regions"] = big_array(r.regions);
    for (std::size_t n = 0; n <= v.n; ++n)
      checks.push_back({"coefficient " + std::to_string(n), r.lhs[n] == r.rhs[n], to_string(r.lhs[n]),
                        to_string(r.rhs[n])});
  } else if (v.id == "egf") {
    o.doc["a"] = a;
    o.doc["n"] = v.n;
    const auto at_one = connected_values_at_one(a, v.n, opts);
    for (std::size_t n = 1; n <= v.n; ++n) {
      const BigInt expected = (n % 2 ? 1 : -1) * factorial(static_cast<unsigned>(n - 1));
      checks.push_back({"f_" + std::to_string(n) + "(1) of A'", at_one[n] == Rational(expected), str(expected),
                        str(at_one[n])});
    }
    try {
      const auto e = extract_egf_coefficients(ArrangementFamily::eq1(a), v.n, opts);
      Json bs = Json::array();
      for (std::size_t n = 1; n <= v.n; ++n) {
        bs.push_back(str(e.slope[n]));
        checks.push_back({"f_" + std::to_string(n) + " of A is b_n (t - 1)", e.intercept[n] == -e.slope[n],
                          "b_n (t - 1)", to_string(e.f[n])});
      }
      o.doc["b"] = bs;
    } catch (const ShapeViolation& e) {
      checks.push_back({"f_n linear in t", false, "linear", e.what()});
    }
  } else if (v.id == "eq2") {
    o.doc["a"] = a;
    o.doc["n"] = v.n;
    auto identity = [](std::string name, bool holds) {
      return Check{std::move(name), holds, "chi(A'_n) = chi(A_n) + n chi(A_{n-1})", holds ? "holds" : "fails"};
    };
    checks.push_back(identity("interpolated polynomials", deletion_restriction_interpolated(a, v.n, opts)));
    try {
      checks.push_back(identity("subset enumeration", deletion_restriction_check(a, v.n, opts)));
    } catch (const BudgetExceeded&) {
      o.doc["note"] = "subset enumeration skipped: arrangement above the Whitney limit";
    }
  } else if (v.id == "thm3.1" || v.id == "cor3.2" || v.id == "thm3.4" || v.id == "cor3.6") {
    const UnionMode mode = v.id == "thm3.1"   ? UnionMode::Thm31
                           : v.id == "cor3.2" ? UnionMode::Cor32
                           : v.id == "thm3.4" ? UnionMode::Thm34
                                              : UnionMode::Cor36;
    o.doc["a"] = a;
    if (mode == UnionMode::Cor32) o.doc["b"] = b;
    o.doc["n_max"] = v.n_max;
    const auto r = verify_union_invariance(mode, a, b, parse_int_list(v.parts), v.n_max, opts);
    o.doc["report"] = invariance_json(r);
    o.doc["pass"] = r.pass;
    o.failed = !r.pass;
    invariance_rows(r, o);
    o.text << verdict(r.pass) << "  " << v.id << " agrees through n = " << r.agree_through << "\n";
    return;
  } else if (v.id == "cor3.5") {
    o.doc["a"] = a;
    o.doc["b"] = b;
    o.doc["n_max"] = v.n_max;
    const auto partitions = parse_int_lists(v.partitions);
    const auto r = essentiality_invariance_probe(a, b, partitions, v.n_max, 3, opts);
    o.doc["report"] = invariance_json(r.observed);
    o.doc["essential"] = bool_array(r.essential);
    if (r.coefficient_note.empty()) {
      Json d = Json::array(), c = Json::array();
      for (std::size_t n = 0; n < r.coefficients.slope.size(); ++n) {
        d.push_back(str(r.coefficients.slope[n]));
        c.push_back(str(r.coefficients.intercept[n]));
      }
      o.doc["d"] = d;
      o.doc["c"] = c;
      o.doc["d_vanishes"] = bool_array(r.slope_vanishes);
    } else {
      o.doc["note"] = r.coefficient_note;
    }
    invariance_rows(r.observed, o);
    o.rows.clear();
    o.header.clear();
    for (std::size_t n = 1; n <= v.n_max; ++n)
      checks.push_back({"n = " + std::to_string(n) + ": independent of s iff not essential",
                        r.observed.equal[n] == !r.essential[n],
                        r.essential[n] ? "depends on s" : "independent of s",
                        r.observed.equal[n] ? "independent of s" : "depends on s"});
  } else if (v.id == "thm4.1") {
    o.doc["a"] = a;
    o.doc["n"] = v.n;
    const auto r = theorem41_check(a, v.n, opts);
    o.doc["log_catalan"] = coeff_array(r.log_catalan);
    o.doc["generic_matroid"] = coeff_array(r.generic_matroid);
    checks.push_back(poly_check("chi(A_n)(t) = chi(C~_n)(t - 1)", r.shifted, r.interpolated));
  } else if (v.id == "prop4.2") {
    if (a.size() != 1) throw ParseError("prop4.2 takes one base multiplier in --a");
    const auto family = ArrangementFamily::eq1(powers(a.front(), v.m));
    o.doc["family"] = to_string(family);
    o.doc["n"] = v.n;
    const auto closed = closed_prop42(v.n, v.m);
    checks.push_back(poly_check("interpolated", closed, interpolate_charpoly(family, v.n, {}, opts).poly));
  } else if (v.id == "prop4.3") {
    if (a.size() != 1) throw ParseError("prop4.3 takes one multiplier in --a");
    const auto family = ArrangementFamily::half_mult(a.front());
    o.doc["family"] = to_string(family);
    o.doc["n"] = v.n;
    const auto closed = closed_prop43(v.n);
    checks.push_back(poly_check("interpolated", closed, interpolate_charpoly(family, v.n, {}, opts).poly));
    checks.push_back(poly_check("Whitney sum", closed, whitney_charpoly(instantiate(family, v.n), opts)));
  } else if (v.id == "catalan" || v.id == "shi") {
    const auto family = v.id == "shi" ? ArrangementFamily::shi() : ArrangementFamily::extended_catalan(v.a_max);
    o.doc["family"] = to_string(family);
    o.doc["n"] = v.n;
    const auto closed = v.id == "shi" ? closed_shi(v.n) : closed_extended_catalan(v.n, v.a_max);
    checks.push_back(poly_check("interpolated", closed, interpolate_charpoly(family, v.n, {}, opts).poly));
  } else {
    throw ParseError("unknown theorem id '" + v.id + "'");
  }
  add_checks(o, checks);
}

// ---------------------------------------------------------------------------
// probe

Graph parse_pendant(const std::string& spec) {
  // Shorthand such as K2, P3, C4 next to the full graph grammar.
  if (spec.size() >= 2 && std::string("KPCE").find(spec[0]) != std::string::npos &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos)
    return parse_graph(spec.substr(0, 1) + ":k=" + spec.substr(1));
  return parse_graph(spec);
}

void cmd_probe(const std::string& id, const VerifyArgs& v, const std::string& pendant, const RunOptions& opts,
               Output& o) {
  ConjectureParams params;
  params.a = parse_int_list(v.a);
  params.b = parse_int_list(v.b);
  Conjecture which;
  if (id == "conj5.1") {
    which = Conjecture::Pendant51;
    params.pendant = parse_pendant(pendant);
  } else if (id == "conj5.2") {
    which = Conjecture::Cycle52;
  } else {
    throw ParseError("unknown conjecture id '" + id + "'");
  }
  auto partitions = parse_int_lists(v.partitions);
  if (partitions.empty()) {
    const auto parts = parse_int_list(v.parts);
    if (!parts.empty()) {
      std::int64_t total = 0;
      for (auto k : parts) total += k;
      partitions = {parts, {total}};
    }
  }
  const auto r = probe_conjecture(which, params, partitions, v.n_max, opts);
  o.doc["command"] = "probe";
  o.doc["conjecture"] = id;
  o.doc["experimental"] = true;
  o.doc["a"] = params.a;
  if (which == Conjecture::Cycle52) o.doc["b"] = params.b;
  if (which == Conjecture::Pendant51) o.doc["pendant"] = pendant;
  o.doc["n_max"] = v.n_max;
  o.doc["report"] = invariance_json(r.observed);
  if (which == Conjecture::Cycle52) o.doc["essential"] = bool_array(r.essential);
  o.doc["observed_equal"] = r.observed.pass;
  o.doc["pass"] = true;
  o.text << "EXPERIMENTAL probe of " << id << " (observations only, not a proof)\n";
  invariance_rows(r.observed, o);
  if (which == Conjecture::Cycle52)
    for (std::size_t n = 1; n < r.essential.size(); ++n)
      o.text << "A_" << n << (r.essential[n] ? " essential" : " not essential") << "\n";
}

// ---------------------------------------------------------------------------
// oracle

struct RandomArrangement {
  Arrangement arr;
  std::string text;
};

RandomArrangement random_arrangement(std::mt19937_64& rng, std::size_t max_dim, std::size_t max_size, int coef) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const auto dim = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(max_dim)));
  const auto size = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(max_size)));
  Arrangement arr(dim);
  std::string text;
  for (std::size_t h = 0; h < size; ++h) {
    std::vector<Rational> normal(dim);
    bool zero = true;
    while (zero) {
      for (auto& c : normal) {
        c = Rational(pick(-coef, coef));
        zero = zero && c == 0;
      }
      zero = std::all_of(normal.begin(), normal.end(), [](const Rational& c) { return c == 0; });
    }
    const auto hp = Hyperplane::make(normal, Rational(pick(-coef, coef)));
    if (arr.add(hp)) text += (text.empty() ? "" : "; ") + to_string(hp);
  }
  return {std::move(arr), text};
}

void cmd_oracle(std::uint64_t seed, std::size_t trials, std::size_t primes_per, const RunOptions& opts, Output& o) {
  std::mt19937_64 rng(seed);
  o.doc["command"] = "oracle";
  o.doc["seed"] = seed;
  Json items = Json::array();
  bool all = true;
  o.header = {"trial", "dim", "hyperplanes", "chi", "primes", "pass"};
  for (std::size_t t = 0; t < trials; ++t) {
    const auto sample = random_arrangement(rng, 3, 10, 3);
    const auto& arr = sample.arr;
    const auto whitney = whitney_charpoly(arr, opts);
    const auto mobius = mobius_charpoly(intersection_poset(arr, opts));
    bool pass = whitney == mobius;
    std::vector<std::uint64_t> used;
    Json counts = Json::array();
    for (std::uint64_t q = 11; used.size() < primes_per; q = next_prime(q)) {
      if (!is_prime(q) || !is_good_prime(arr, q, opts)) continue;
      const auto c = count_offpoints(arr, q, opts);
      const auto expected = poly_eval(whitney, BigInt(static_cast<unsigned long>(q)));
      pass = pass && c == expected;
      used.push_back(q);
      counts.push_back({{"q", q}, {"count", str(c)}});
    }
    all = all && pass;
    items.push_back({{"dim", arr.dim()},
                     {"hyperplanes", sample.text},
                     {"whitney", coeff_array(whitney)},
                     {"mobius", coeff_array(mobius)},
                     {"samples", counts},
                     {"pass", pass}});
    std::vector<std::int64_t> qs(used.begin(), used.end());
    o.rows.push_back({std::to_string(t), std::to_string(arr.dim()), "\"" + sample.text + "\"",
                      "\"" + to_string(whitney) + "\"", "\"" + join(qs, " ") + "\"", pass ? "true" : "false"});
    o.text << verdict(pass) << "  #" << t << " R^" << arr.dim() << " {" << sample.text << "} chi = "
           << to_string(whitney) << " at q = " << join(qs, " ") << "\n";
  }
  o.doc["trials"] = items;
  o.doc["pass"] = all;
  o.failed = !all;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;
  Settings settings;
  CLI::App app{"Characteristic polynomials of rational hyperplane arrangements by finite-field counting", "arrange"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", settings.threads, "Worker threads (default: ARRANGE_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-nodes", settings.budget_nodes, "Cap on enumeration nodes")->check(CLI::PositiveNumber);
  app.add_option("--seed", settings.seed, "Seed for randomized commands");

  std::function<void(const RunOptions&, Output&)> action;

  auto* charpoly = app.add_subcommand("charpoly", "Interpolate chi of a family from prime samples");
  std::string family;
  std::size_t n = 0;
  std::uint64_t floor = 100;
  unsigned retries = 6;
  charpoly->add_option("--family", family, "Family spec, e.g. eq1:a=2,3")->required();
  charpoly->add_option("--n", n, "Dimension")->required();
  charpoly->add_option("--floor", floor, "Lower bound for sampled primes");
  charpoly->add_option("--retries", retries, "Floor doublings before giving up");
  charpoly->callback([&] { action = [&](const RunOptions& o, Output& x) { cmd_charpoly(family, n, floor, retries, o, x); }; });

  auto* count = app.add_subcommand("count", "Count independent sets of a graph");
  std::string graph;
  std::optional<std::size_t> count_n, cap;
  bool all = false;
  count->add_option("--graph", graph, "Graph spec, e.g. G:a=2,3;k=22")->required();
  count->add_option("--n", count_n, "Size of the independent sets");
  count->add_flag("--all", all, "All sizes up to the independence number or --cap");
  count->add_option("--cap", cap, "Largest size for --all");
  count->callback([&] { action = [&](const RunOptions& o, Output& x) { cmd_count(graph, count_n, all, cap, o, x); }; });

  auto* table1 = app.add_subcommand("table1", "(3!/(q-1)) s_3 for multiplier pairs and primes, as CSV");
  std::string pairs = "2,3;2,5;3,5;5,7;2,4";
  std::string primes = "23,29,31,37,41,47,53,59,61,199";
  table1->add_option("--pairs", pairs, "Pairs a1,a2 separated by ';'");
  table1->add_option("--primes", primes, "Comma-separated primes");
  table1->callback([&] { action = [&](const RunOptions& o, Output& x) { cmd_table1(pairs, primes, o, x); }; });

  VerifyArgs v;
  auto add_params = [&v](CLI::App* sub) {
    sub->add_option("--a", v.a, "Multipliers or steps");
    sub->add_option("--b", v.b, "Second parameter list");
    sub->add_option("--parts", v.parts, "Partition k_1,...,k_s");
    sub->add_option("--partitions", v.partitions, "Several partitions separated by ';'");
    sub->add_option("--nmax", v.n_max, "Largest independent-set size");
  };
  auto* verify = app.add_subcommand("verify", "Check a theorem instance; exit 4 on failure");
  verify->add_option("theorem", v.id, "thm2.1 thm2.2 egf eq2 thm3.1 cor3.2 thm3.4 cor3.5 cor3.6 thm4.1 prop4.2 prop4.3 catalan shi")
      ->required();
  add_params(verify);
  verify->add_option("--n", v.n, "Dimension or EGF order");
  verify->add_option("--m", v.m, "Number of powers for prop4.2");
  verify->add_option("--amax", v.a_max, "a_max for the extended Catalan check");
  verify->add_option("--sets", v.sets, "Independent multiplier sets for thm2.1");
  verify->add_option("--dependent", v.dependent, "Dependent multiplier sets for thm2.1");
  verify->callback([&] { action = [&](const RunOptions& o, Output& x) { cmd_verify(v, o, x); }; });

  auto* probe = app.add_subcommand("probe", "EXPERIMENTAL conjecture probes; always exit 0");
  std::string conjecture, pendant = "K1";
  probe->add_option("conjecture", conjecture, "conj5.1 or conj5.2")->required();
  add_params(probe);
  probe->add_option("--pendant", pendant, "Subgraph hung from each vertex (K2, P3, C4 or a graph spec)");
  probe->callback([&] { action = [&](const RunOptions& o, Output& x) { cmd_probe(conjecture, v, pendant, o, x); }; });

  auto* oracle = app.add_subcommand("oracle", "Random arrangements: Whitney vs Moebius vs point counts");
  std::size_t trials = 20, primes_per = 3;
  oracle->add_option("--trials", trials, "Number of random arrangements");
  oracle->add_option("--primes", primes_per, "Good primes >= 11 per arrangement");
  oracle->callback([&] {
    action = [&](const RunOptions& o, Output& x) { cmd_oracle(settings.seed, trials, primes_per, o, x); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (settings.threads == 0) settings.threads = default_threads();
    Output o;
    action(settings.run_options(), o);
    if (settings.format == "json")
      out << o.doc.dump(2) << "\n";
    else if (settings.format == "csv")
      out << render_csv(o);
    else
      out << o.text.str();
    result.exit_code = o.failed ? VerificationFailed : Ok;
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? Ok : Parse;
  } catch (const ThresholdNotFound& e) {
    err << e.what() << "\n";
    result.exit_code = Threshold;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    result.exit_code = Budget;
  } catch (const Error& e) {
    err << e.what() << "\n";
    result.exit_code = Parse;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace hyperarr::cli

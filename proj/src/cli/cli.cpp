#include "bclock/cli.hpp"

#include "bclock/bernoulli.hpp"
#include "bclock/bernstein.hpp"
#include "bclock/circular_conv.hpp"
#include "bclock/clock.hpp"
#include "bclock/renewal_wrapped.hpp"
#include "bclock/sum_dist.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#ifndef BCLOCK_GIT_REV
#define BCLOCK_GIT_REV "unknown"
#endif

namespace bclock::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

struct Column {
  std::string name;
  std::string type;  // rational | integer | real | string | boolean
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
};

struct GlobalOptions {
  std::string format = "csv";
  unsigned precision_bits = kDefaultPrecisionBits;
  std::uint64_t seed = 1;
  unsigned parallel = 1;
};

struct Invocation {
  std::string command;
  json parameters = json::object();
  bool uses_seed = false;
  Table table;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_cell(t.columns[i].name);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(const Invocation& inv, const GlobalOptions& g, std::ostream& out) {
  json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = inv.command;
  rec["parameters"] = inv.parameters;
  json cols = json::array();
  for (const auto& c : inv.table.columns) cols.push_back({{"name", c.name}, {"type", c.type}});
  rec["columns"] = cols;
  json rows = json::array();
  for (const auto& row : inv.table.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Column& c = inv.table.columns[i];
      if (c.type == "boolean") {
        r[c.name] = row[i] == "true";
      } else {
        r[c.name] = row[i];
      }
    }
    rows.push_back(std::move(r));
  }
  rec["rows"] = rows;
  rec["provenance"] = {{"seed", inv.uses_seed ? json(g.seed) : json(nullptr)},
                       {"precision_bits", g.precision_bits},
                       {"git_rev", BCLOCK_GIT_REV}};
  out << rec.dump(2) << '\n';
}

std::string str(const Integer& z) { return z.str(); }
std::string str(const Rational& q) { return to_fraction_string(q); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(unsigned long long v) { return std::to_string(v); }
std::string str(unsigned v) { return std::to_string(v); }

std::string str(const Real& x, unsigned bits) {
  // One digit fewer than the binary precision carries, so the last digit is meaningful.
  const unsigned digits = std::max(6u, static_cast<unsigned>(bits * 0.30102999566398) - 1);
  return x.str(digits, std::ios_base::scientific);
}

std::string str_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

// q written over a prescribed denominator, e.g. 322/2520.
std::string over_denominator(const Rational& q, const Integer& den) {
  const Rational scaled = q * Rational(den);
  if (denominator(scaled) != 1) return to_fraction_string(q);
  return numerator(scaled).str() + "/" + den.str();
}

std::string validate_spec(const std::string& s) {
  try {
    parse_multiset_spec(s);
    return {};
  } catch (const std::exception& e) {
    return e.what();
  }
}

std::string validate_rational(const std::string& s) {
  try {
    parse_rational(s);
    return {};
  } catch (const std::exception& e) {
    return e.what();
  }
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string validate_rational_list(const std::string& s) {
  try {
    if (parse_rational_list(s).empty()) return "empty list";
    return {};
  } catch (const std::exception& e) {
    return e.what();
  }
}

// ---------------------------------------------------------------------------
// Commands

Table cmd_bernoulli(unsigned n, bool poly) {
  Table t;
  if (!poly) {
    t.columns = {{"n", "integer"}, {"B_n", "rational"}};
    for (unsigned k = 0; k <= n; ++k) t.rows.push_back({str(k), str(bernoulli_number(k))});
    return t;
  }
  t.columns = {{"n", "integer"}, {"power", "integer"}, {"coefficient", "rational"}};
  for (unsigned k = 0; k <= n; ++k) {
    const RationalPolynomial b = normalized_bernoulli_poly(k);
    for (long i = 0; i <= b.degree(); ++i) {
      t.rows.push_back({str(k), str(static_cast<unsigned>(i)), str(b.coeff(static_cast<std::size_t>(i)))});
    }
  }
  return t;
}

Table cmd_convolve(const std::string& f, const std::string& g) {
  const RationalPolynomial pf(parse_rational_list(f));
  const RationalPolynomial pg(parse_rational_list(g));
  const RationalPolynomial h = circular_conv({pf}, {pg}).poly;
  Table t;
  t.columns = {{"power", "integer"}, {"coefficient", "rational"}};
  for (long i = 0; i <= h.degree(); ++i) {
    t.rows.push_back({str(static_cast<unsigned>(i)), str(h.coeff(static_cast<std::size_t>(i)))});
  }
  if (t.rows.empty()) t.rows.push_back({"0", str(Rational(0))});
  return t;
}

Table single_row(const std::string& prefix, const RationalRowVector& v, int first, const Integer& den) {
  Table t;
  std::vector<std::string> row;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    t.columns.push_back({prefix + std::to_string(first + i), "rational"});
    row.push_back(over_denominator(v(i), den));
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table cmd_pvec(unsigned n, const std::string& method, unsigned threads) {
  DistributionVector p;
  if (method == "bernstein") {
    p = p_vector_exact(n);
  } else if (method == "markov") {
    p = p_vector_markov(n);
  } else {
    const JointEnumeration e = enumerate_joint(MultisetSpec::uniform(n, 2), threads);
    const IntegerRowVector counts = e.table.index_marginal();
    const Integer total = e.table.total();
    p = {n, DistributionKind::probability, 1, RationalRowVector(counts.size())};
    for (Eigen::Index i = 0; i < counts.size(); ++i) p.values(i) = Rational(counts(i), total);
  }
  return single_row("p_", p.values, 1, factorial(2 * n) >> n);
}

Table cmd_delta(unsigned n) {
  const DistributionVector d = delta_vector(n);
  return single_row("delta_", d.values, 1, Integer(2 * n) * (factorial(2 * n) >> n));
}

Table cmd_qmatrix(unsigned n) {
  const TransitionMatrix q = q_matrix(n);
  Table t;
  t.columns.push_back({"x", "integer"});
  for (unsigned y = 1; y <= 2 * n; ++y) t.columns.push_back({"y" + std::to_string(y), "integer"});
  t.columns.push_back({"normalizer", "integer"});
  for (Eigen::Index x = 0; x < q.entries.rows(); ++x) {
    std::vector<std::string> row{str(static_cast<unsigned>(x + 1))};
    for (Eigen::Index y = 0; y < q.entries.cols(); ++y) row.push_back(str(q.entries(x, y)));
    row.push_back(str(q.normalizer));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_joint(const MultisetSpec& spec, const std::string& method, unsigned threads) {
  JointTable jt;
  if (method == "recursion") {
    for (unsigned m : spec.multiplicities) {
      if (m != 2) throw DomainError("the recursion covers multiplicity 2 only; use --method enum");
    }
    jt = joint_recursion(spec.symbols());
  } else {
    jt = enumerate_joint(spec, threads).table;
  }
  Table t;
  t.columns = {{"i", "integer"}, {"d", "integer"}, {"count", "integer"}};
  for (Eigen::Index i = 0; i < jt.counts.rows(); ++i) {
    for (Eigen::Index d = 0; d < jt.counts.cols(); ++d) {
      t.rows.push_back({str(static_cast<unsigned>(i + 1)), str(static_cast<unsigned>(d)), str(jt.counts(i, d))});
    }
  }
  return t;
}

Table cmd_cdf(const MultisetSpec& spec, const std::string& at) {
  const PiecewiseCdf F = beta_sum_cdf(spec);
  Table t;
  t.columns = {{"x", "rational"}, {"cdf", "rational"}};
  for (const Rational& x : parse_rational_list(at)) t.rows.push_back({str(x), str(F(x))});
  return t;
}

Table cmd_dcount(unsigned n) {
  const IntegerRowVector c = dist_D_counts(n);
  Table t;
  std::vector<std::string> row;
  for (Eigen::Index d = 0; d < c.size(); ++d) {
    t.columns.push_back({"d" + std::to_string(d), "integer"});
    row.push_back(str(c(d)));
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table cmd_acount(unsigned n) {
  Table t;
  t.columns = {{"n", "integer"}, {"a_n", "integer"}};
  t.rows.push_back({str(n), str(a_count(n))});
  return t;
}

Table cmd_hk_count(const MultisetSpec& spec) {
  const Integer c = complete_count(spec);
  const Integer total = spec.permutation_count();
  Table t;
  t.columns = {{"spec", "string"}, {"complete_count", "integer"}, {"permutations", "integer"},
               {"probability", "rational"}};
  t.rows.push_back({spec.to_string(), str(c), str(total), str(Rational(c, total))});
  return t;
}

Table cmd_simulate(const MultisetSpec& spec, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  const ClockSummary s = simulate_clock_summary(spec, seed, trials, threads);
  Table t;
  t.columns = {{"statistic", "string"}, {"value", "integer"}, {"count", "integer"}, {"frequency", "real"}};
  const double n = static_cast<double>(s.trials);
  auto emit = [&](const char* name, const std::vector<std::uint64_t>& counts, unsigned offset) {
    for (std::size_t v = 0; v < counts.size(); ++v) {
      t.rows.push_back({name, str(static_cast<unsigned>(v + offset)), str(static_cast<unsigned long long>(counts[v])),
                        str_double(static_cast<double>(counts[v]) / n)});
    }
  };
  emit("I", s.index_counts, 1);
  emit("D", s.laps_counts, 0);
  emit("L", s.run_counts, 1);
  t.rows.push_back({"redraws", "0", str(static_cast<unsigned long long>(s.redraws)),
                    str_double(static_cast<double>(s.redraws) / n)});
  return t;
}

Table cmd_mean_fn(unsigned m, unsigned grid, unsigned bits) {
  const RootSet roots = exponential_poly_roots(m, bits);
  ScopedPrecision scope(bits);
  Table t;
  t.columns = {{"t", "rational"}, {"mean", "real"}};
  for (unsigned k = 0; k <= grid; ++k) {
    const Rational x(k, grid);
    t.rows.push_back({str(x), str(mean_function(to_real(x), roots), bits)});
  }
  return t;
}

Table cmd_wrapped(unsigned r, const Rational& lambda, const std::string& method, unsigned grid, unsigned terms,
                  const std::string& tol_text, unsigned bits) {
  Table t;
  t.columns = {{"u", "rational"}, {"density", "real"}, {"error_bound", "real"}};
  for (unsigned k = 0; k < grid; ++k) {
    const WrappedGammaParams p{r, lambda, Rational(k, grid)};
    WrappedGammaValue v;
    if (method == "series") {
      ScopedPrecision scope(bits);
      const Real tol = tol_text.empty() ? Real(mp::ldexp(Real(1), 16 - static_cast<int>(bits)))
                                        : to_real(parse_rational(tol_text));
      v = wrapped_gamma_density_series(p, tol, bits);
    } else {
      v = wrapped_gamma_bernoulli_expansion(p, terms, bits);
    }
    ScopedPrecision scope(bits);
    t.rows.push_back({str(p.u), str(v.value, bits), str(v.error_bound, bits)});
  }
  return t;
}

Table cmd_conjecture1(const std::vector<unsigned>& ns, bool alt, unsigned bits) {
  Table t;
  t.columns = {{"n", "integer"}, {"argmax_k", "integer"}, {"bracket", "rational"}, {"gap", "real"},
               {"decreasing", "boolean"}};
  const GridArgument arg = alt ? GridArgument::over_2n : GridArgument::over_2n_minus_1;
  bool decreasing = true;
  Real prev;
  bool first = true;
  for (unsigned n : ns) {
    const Conjecture1Gap g = conjecture1_gap(n, bits, arg);
    ScopedPrecision scope(bits);
    if (!first && !(g.gap < prev)) decreasing = false;
    prev = g.gap;
    first = false;
    t.rows.push_back({str(n), str(g.argmax_k), str(g.bracket), str(g.gap, bits), str(decreasing)});
  }
  return t;
}

Table cmd_conjecture2(unsigned max_n) {
  Table t;
  t.columns = {{"n", "integer"}, {"min_coefficient", "rational"}, {"c_n", "rational"}, {"holds", "boolean"}};
  for (unsigned n = 1; n <= max_n; ++n) {
    const Conjecture2Verdict v = conjecture2_probe(n);
    t.rows.push_back({str(n), str(v.min_coefficient), v.c_n ? str(*v.c_n) : std::string("inf"), str(v.holds)});
  }
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOptions g;
  if (const char* env = std::getenv("BCLOCK_PRECISION_BITS")) {
    std::size_t pos = 0;
    unsigned long bits = 0;
    try {
      bits = std::stoul(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0' || bits < 64 || bits > 65536) {
      err << "BCLOCK_PRECISION_BITS must be an integer in [64, 65536]\n";
      return kUsage;
    }
    g.precision_bits = static_cast<unsigned>(bits);
  }

  CLI::App app{"Exact and numerical tools for the Bernoulli clock", "bclock"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision-bits", g.precision_bits, "Working precision of floating-point evaluation")
      ->check(CLI::Range(64u, 65536u));
  app.add_option("--seed", g.seed, "Seed for simulation commands");
  app.add_option("--parallel", g.parallel, "Maximum number of worker threads")->check(CLI::Range(1u, 1024u));

  Invocation inv;
  std::function<Table()> action;

  unsigned n = 0;
  auto add_n = [&](CLI::App* sub, unsigned lo, unsigned hi) {
    sub->add_option("n", n, "Size parameter")->required()->check(CLI::Range(lo, hi));
  };

  bool poly = false;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_n, or the polynomials b_k with --poly");
  add_n(bern, 0, 2000);
  bern->add_flag("--poly", poly, "List the coefficients of b_k(x) = B_k(x)/k!");
  bern->callback([&] {
    inv.parameters = {{"n", n}, {"poly", poly}};
    action = [&] { return cmd_bernoulli(n, poly); };
  });

  std::string f_text, g_text;
  auto* conv = app.add_subcommand("convolve", "Circular convolution of two polynomials on [0, 1)");
  conv->add_option("--f", f_text, "Coefficients of f, constant term first, e.g. 0,1")
      ->required()
      ->check(validate_rational_list);
  conv->add_option("--g", g_text, "Coefficients of g")->required()->check(validate_rational_list);
  conv->callback([&] {
    json f = json::array(), gc = json::array();
    for (const Rational& c : parse_rational_list(f_text)) f.push_back(str(c));
    for (const Rational& c : parse_rational_list(g_text)) gc.push_back(str(c));
    inv.parameters = {{"f", f}, {"g", gc}};
    action = [&] { return cmd_convolve(f_text, g_text); };
  });

  std::string method = "bernstein";
  auto* pvec = app.add_subcommand("pvec", "Exact law of I_n over (2n)!/2^n");
  add_n(pvec, 1, 200);
  pvec->add_option("--method", method, "bernstein, markov or enum")
      ->check(CLI::IsMember({"bernstein", "markov", "enum"}));
  pvec->callback([&] {
    inv.parameters = {{"n", n}, {"method", method}};
    action = [&] { return cmd_pvec(n, method, g.parallel); };
  });

  auto* delta = app.add_subcommand("delta", "Exact deviations 1/(2n) - P(I_n = k)");
  add_n(delta, 1, 200);
  delta->callback([&] {
    inv.parameters = {{"n", n}};
    action = [&] { return cmd_delta(n); };
  });

  auto* qm = app.add_subcommand("qmatrix", "Integer transition counts Q_n of the insertion chain");
  add_n(qm, 2, 500);
  qm->callback([&] {
    inv.parameters = {{"n", n}};
    action = [&] { return cmd_qmatrix(n); };
  });

  std::string joint_method = "recursion";
  std::string spec_text;
  auto* joint = app.add_subcommand("joint", "Joint counts #(n; i, d) of the stopping index and lap count");
  joint->add_option("n", n, "Number of symbols, each with multiplicity 2")->check(CLI::Range(1u, 60u));
  joint->add_option("--spec", spec_text, "Multiplicities for enumeration, e.g. 2,3,2")->check(validate_spec);
  joint->add_option("--method", joint_method, "enum or recursion")->check(CLI::IsMember({"enum", "recursion"}));
  joint->callback([&] {
    if (spec_text.empty() == (n == 0)) throw CLI::ValidationError("joint", "give exactly one of n and --spec");
    const MultisetSpec spec = spec_text.empty() ? MultisetSpec::uniform(n, 2) : parse_multiset_spec(spec_text);
    inv.parameters = {{"spec", spec.to_string()}, {"method", joint_method}};
    action = [&, spec] { return cmd_joint(spec, joint_method, g.parallel); };
  });

  std::string at_text;
  auto* cdf = app.add_subcommand("cdf", "Exact distribution function of a sum of beta(1, m_i) variables");
  cdf->add_option("--spec", spec_text, "Multiplicities m_i, e.g. 2,2,2")->required()->check(validate_spec);
  cdf->add_option("--at", at_text, "Comma-separated evaluation points")->required()->check(validate_rational_list);
  cdf->callback([&] {
    json at = json::array();
    for (const Rational& x : parse_rational_list(at_text)) at.push_back(str(x));
    inv.parameters = {{"spec", parse_multiset_spec(spec_text).to_string()}, {"at", at}};
    action = [&] { return cmd_cdf(parse_multiset_spec(spec_text), at_text); };
  });

  auto* dcount = app.add_subcommand("dcount", "Number of arrangements with D_n = d, d = 0..n-1");
  add_n(dcount, 1, 200);
  dcount->callback([&] {
    inv.parameters = {{"n", n}};
    action = [&] { return cmd_dcount(n); };
  });

  auto* acount = app.add_subcommand("acount", "a(n), arrangements of 1122..nn containing 1..n in order");
  add_n(acount, 1, 5000);
  acount->callback([&] {
    inv.parameters = {{"n", n}};
    action = [&] { return cmd_acount(n); };
  });

  auto* hk = app.add_subcommand("hk-count", "Multiset permutations containing 1, 2, ..., n as a subsequence");
  hk->add_option("--spec", spec_text, "Multiplicities m_i")->required()->check(validate_spec);
  hk->callback([&] {
    inv.parameters = {{"spec", parse_multiset_spec(spec_text).to_string()}};
    action = [&] { return cmd_hk_count(parse_multiset_spec(spec_text)); };
  });

  std::uint64_t trials = 0;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo histograms of I, D and L");
  sim->add_option("--spec", spec_text, "Multiplicities m_i")->required()->check(validate_spec);
  sim->add_option("--trials", trials, "Number of trials")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  sim->callback([&] {
    inv.uses_seed = true;
    inv.parameters = {{"spec", parse_multiset_spec(spec_text).to_string()}, {"trials", trials}};
    action = [&] { return cmd_simulate(parse_multiset_spec(spec_text), trials, g.seed, g.parallel); };
  });

  unsigned grid = 0;
  auto* mean = app.add_subcommand("mean-fn", "Renewal mean function M(t) for beta(1, m) jumps on t = k/G");
  add_n(mean, 1, 200);
  mean->add_option("--grid", grid, "Number of grid intervals G")->default_val(10u)->check(CLI::Range(1u, 100000u));
  mean->callback([&] {
    inv.parameters = {{"m", n}, {"grid", grid}};
    action = [&] { return cmd_mean_fn(n, grid, g.precision_bits); };
  });

  unsigned shape = 1;
  std::string lambda_text;
  std::string wrapped_method = "series";
  unsigned terms = 60;
  std::string tol_text;
  auto* wrapped = app.add_subcommand("wrapped", "Wrapped gamma density on u = k/G, k = 0..G-1");
  wrapped->add_option("--r", shape, "Shape r")->required()->check(CLI::Range(1u, 1000u));
  wrapped->add_option("--lambda", lambda_text, "Rate lambda, exact decimal or p/q")
      ->required()
      ->check(validate_rational);
  wrapped->add_option("--method", wrapped_method, "series or expansion")
      ->check(CLI::IsMember({"series", "expansion"}));
  wrapped->add_option("--grid", grid, "Number of grid points")->default_val(17u)->check(CLI::Range(1u, 100000u));
  wrapped->add_option("--terms", terms, "Last Bernoulli term of the expansion")->check(CLI::Range(1u, 2000u));
  wrapped->add_option("--tol", tol_text, "Tail tolerance of the series")->check(validate_rational);
  wrapped->callback([&] {
    inv.parameters = {
        {"r", shape}, {"lambda", str(parse_rational(lambda_text))}, {"method", wrapped_method}, {"grid", grid}};
    if (wrapped_method == "expansion") inv.parameters["terms"] = terms;
    if (wrapped_method == "series" && !tol_text.empty()) inv.parameters["tol"] = str(parse_rational(tol_text));
    action = [&] {
      return cmd_wrapped(shape, parse_rational(lambda_text), wrapped_method, grid, terms, tol_text, g.precision_bits);
    };
  });

  std::vector<unsigned> n_list;
  bool alt = false;
  auto* c1 = app.add_subcommand("conjecture1", "Gap between the clock deviations and the scaled b_n");
  c1->add_option("--n-list", n_list, "Comma-separated n values")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(1u, 5000u));
  c1->add_flag("--alt-argument", alt, "Evaluate b_n at (k-1)/(2n) instead of (k-1)/(2n-1)");
  c1->callback([&] {
    inv.parameters = {{"n_list", n_list}, {"argument", alt ? "(k-1)/(2n)" : "(k-1)/(2n-1)"}};
    action = [&] { return cmd_conjecture1(n_list, alt, std::max(g.precision_bits, 256u)); };
  });

  unsigned max_n = 0;
  auto* c2 = app.add_subcommand("conjecture2", "Bernstein positivity of 1 - 2^n b_n for n = 1..max");
  c2->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::Range(1u, 2000u));
  c2->callback([&] {
    inv.parameters = {{"max_n", max_n}};
    action = [&] { return cmd_conjecture2(max_n); };
  });

  std::vector<std::string> argv_store{"bclock"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (const auto* sub : app.get_subcommands()) inv.command = sub->get_name();
  try {
    inv.table = action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }

  if (g.format == "json") {
    write_json(inv, g, out);
  } else {
    write_csv(inv.table, out);
  }
  return kOk;
}

}  // namespace bclock::cli

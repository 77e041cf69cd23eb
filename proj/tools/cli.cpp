#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "permeq/permeq.hpp"

namespace permeq::cli {

namespace {

struct Options {
  bool json = false;
  std::size_t max_oracle_n = kDefaultMaxOracleDegree;
  std::uint64_t q_bound = kDefaultQBound;
  std::uint64_t centralizer_cap = kDefaultCentralizerCap;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t degree_for(std::initializer_list<std::string> texts,
                       std::optional<std::size_t> n) {
  std::size_t largest = 1;
  for (const std::string& t : texts)
    largest = std::max(largest, largest_point(t));
  if (!n)
    return largest;
  if (*n < largest)
    throw UsageError("degree --n " + std::to_string(*n) +
                     " is smaller than the largest point " +
                     std::to_string(largest));
  return *n;
}

Perm random_perm(std::size_t n, std::uint64_t seed) {
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{1});
  std::mt19937_64 rng(seed);
  std::shuffle(image.begin(), image.end(), rng);
  return Perm::from_image(std::move(image));
}

Perm alpha_from(const std::optional<std::string>& text,
                std::optional<std::size_t> n, const Options& opt) {
  if (text)
    return parse_cycles(*text, degree_for({*text}, n));
  if (opt.seed && n)
    return random_perm(*n, *opt.seed);
  throw UsageError("give alpha in cycle notation, or --n together with --seed "
                   "for a random alpha");
}

std::string fmt(const Perm& p, const Options& opt) {
  return format_cycles(p, opt.verbose);
}

int exit_for(Verdict v) { return v == Verdict::Unknown ? kExitUndecided : kExitOk; }

void print_report(std::ostream& out, const SolutionReport& report,
                  const Options& opt) {
  out << "verdict: " << to_string(report.verdict) << '\n';
  if (!report.reason.empty())
    out << "reason: " << report.reason << '\n';
  out << "solutions (" << report.solutions.size() << "):\n";
  for (const Perm& y : report.solutions)
    out << "  " << fmt(y, opt) << '\n';
  out << "hypotheses:\n";
  for (const HypothesisEntry& h : report.hypotheses_log) {
    out << "  [" << (h.pass ? "pass" : "fail") << "] " << h.condition;
    if (!h.numbers.empty()) {
      out << "  {";
      for (std::size_t k = 0; k < h.numbers.size(); ++k)
        out << (k ? ", " : "") << h.numbers[k].first << ": "
            << h.numbers[k].second;
      out << '}';
    }
    out << '\n';
  }
}

Json header_json(const Perm& alpha, std::int64_t e) {
  Json j;
  j["alpha"] = format_cycles(alpha);
  j["n"] = alpha.degree();
  j["e"] = e;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_classify(std::ostream& out, const Options& opt,
                 const std::optional<std::string>& alpha_text,
                 std::optional<std::size_t> n, std::int64_t e) {
  const Perm alpha = alpha_from(alpha_text, n, opt);
  ClassifyOptions co;
  co.max_oracle_n = opt.max_oracle_n;
  co.q_bound = opt.q_bound;
  co.centralizer_cap = opt.centralizer_cap;
  const SolutionReport report = classify(alpha, e, co);
  if (opt.json) {
    Json j = header_json(alpha, e);
    j.update(report_to_json(report));
    out << j.dump(2) << '\n';
  } else {
    out << "alpha = " << fmt(alpha, opt) << "\n"
        << "n = " << alpha.degree() << ", e = " << e << '\n';
    print_report(out, report, opt);
  }
  return exit_for(report.verdict);
}

int cmd_construct(std::ostream& out, const Options& opt, std::size_t n,
                  std::size_t r, std::int64_t e) {
  const CyclicConstruction c = construct_cyclic_solution(n, r, e);
  const bool ok = is_solution(c.alpha, c.y, e);
  const std::size_t cycles = n / r;
  if (opt.json) {
    Json j;
    j["n"] = n;
    j["r"] = r;
    j["e"] = e;
    j["alpha"] = format_cycles(c.alpha);
    j["y"] = format_cycles(c.y);
    j["cycles_of_y"] = cycles;
    j["verified"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "alpha = " << fmt(c.alpha, opt) << '\n'
        << "y = " << fmt(c.y, opt) << '\n'
        << "y has " << cycles << " cycles of length " << r << '\n'
        << "check: alpha y alpha^-1 = y^" << e << (ok ? " holds" : " FAILS")
        << '\n';
  }
  return ok ? kExitOk : kExitUndecided;
}

int cmd_oracle(std::ostream& out, const Options& opt,
               const std::optional<std::string>& alpha_text,
               std::optional<std::size_t> n, std::int64_t e) {
  const Perm alpha = alpha_from(alpha_text, n, opt);
  const auto sols = brute_force_solutions(alpha, e, opt.max_oracle_n);
  if (opt.json) {
    Json j = header_json(alpha, e);
    Json list = Json::array();
    for (const Perm& y : sols)
      list.push_back(format_cycles(y));
    j["solutions"] = std::move(list);
    out << j.dump(2) << '\n';
  } else {
    out << "alpha = " << fmt(alpha, opt) << "\n"
        << "n = " << alpha.degree() << ", e = " << e << '\n'
        << "solutions (" << sols.size() << "):\n";
    for (const Perm& y : sols)
      out << "  " << fmt(y, opt) << '\n';
  }
  return kExitOk;
}

int cmd_ranges(std::ostream& out, const Options& opt,
               const std::optional<std::string>& alpha_text,
               std::optional<std::size_t> n, std::optional<std::size_t> d) {
  const Perm alpha = alpha_from(alpha_text, n, opt);
  const CycleType t = type_of(alpha);
  std::vector<std::size_t> ds;
  if (d) {
    ds.push_back(*d);
  } else {
    ds.resize(alpha.degree());
    std::iota(ds.begin(), ds.end(), std::size_t{1});
  }
  Json list = Json::array();
  for (std::size_t k : ds) {
    const DRange dr = d_range(t, k);
    if (opt.json) {
      list.push_back(drange_to_json(dr));
      continue;
    }
    out << "F_" << k << "(alpha) = {";
    for (std::size_t i = 0; i < dr.members().size(); ++i)
      out << (i ? ", " : "") << dr.members()[i];
    out << "}\n";
  }
  if (opt.json) {
    Json j;
    j["alpha"] = format_cycles(alpha);
    j["n"] = alpha.degree();
    j["ranges"] = std::move(list);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_qvalue(std::ostream& out, const Options& opt, std::int64_t e,
               std::uint64_t v) {
  const QValue q = q_of(e, v, opt.q_bound);
  if (opt.json) {
    Json j;
    j["e"] = e;
    j["v"] = v;
    j.update(qvalue_to_json(q));
    out << j.dump(2) << '\n';
  } else {
    const std::string head = "q(" + std::to_string(e) + "," + std::to_string(v) + ")";
    if (q.is_at_least())
      out << head << " > " << q.value() << '\n';
    else
      out << head << " = " << q.to_string() << '\n';
  }
  return q.is_at_least() ? kExitUndecided : kExitOk;
}

CubicEquation cubic_from(const std::vector<std::string>& consts,
                         std::optional<std::size_t> n, int r1, int r2, int r3) {
  const std::size_t deg = degree_for({consts[0], consts[1], consts[2]}, n);
  CubicEquation eq{parse_cycles(consts[0], deg), parse_cycles(consts[1], deg),
                   parse_cycles(consts[2], deg), r1, r2, r3};
  eq.validate();
  return eq;
}

Json reduced_json(const CubicEquation& eq, const ReducedForm& rf) {
  Json j;
  j["n"] = eq.degree();
  j["exponents"] = {eq.r1, eq.r2, eq.r3};
  j["inverted_unknown"] = eq.r1 == -1;
  j.update(reduced_form_to_json(rf));
  return j;
}

void print_reduced(std::ostream& out, const CubicEquation& eq,
                   const ReducedForm& rf, const Options& opt) {
  if (eq.r1 == -1)
    out << "r1 = -1: solving for x^-1 with all exponents negated\n";
  out << "case " << to_string(rf.case_tag) << ": alpha y beta = y^"
      << rf.exponent << '\n'
      << "  y = " << rf.forward.text << ",  x = " << rf.backward.text << '\n'
      << "  alpha = " << fmt(rf.alpha, opt) << '\n'
      << "  beta = " << fmt(rf.beta, opt) << '\n'
      << "  beta = alpha^-1: " << (rf.reducible_to_power_conjugate() ? "yes" : "no")
      << '\n';
}

int cmd_reduce(std::ostream& out, const Options& opt,
               const std::vector<std::string>& consts, std::optional<std::size_t> n,
               int r1, int r2, int r3) {
  const CubicEquation eq = cubic_from(consts, n, r1, r2, r3);
  const ReducedForm rf = reduce(normalize(eq));
  if (opt.json)
    out << reduced_json(eq, rf).dump(2) << '\n';
  else
    print_reduced(out, eq, rf, opt);
  return kExitOk;
}

int cmd_solve_cubic(std::ostream& out, const Options& opt,
                    const std::vector<std::string>& consts,
                    std::optional<std::size_t> n, int r1, int r2, int r3) {
  const CubicEquation eq = cubic_from(consts, n, r1, r2, r3);
  const bool inverted = eq.r1 == -1;
  const CubicEquation normalized = normalize(eq);
  const ReducedForm rf = reduce(normalized);

  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::vector<Perm> xs;
  std::optional<SolutionReport> sub;

  auto oracle = [&] {
    xs = exhaustive_search(eq.degree(),
                           [&](const Perm& x) { return eq.is_solved_by(x); },
                           opt.max_oracle_n);
    verdict = Verdict::OracleSet;
    reason = "exhaustive search over x";
  };

  if (rf.reducible_to_power_conjugate()) {
    ClassifyOptions co;
    co.max_oracle_n = opt.max_oracle_n;
    co.q_bound = opt.q_bound;
    co.centralizer_cap = opt.centralizer_cap;
    sub = classify(rf.alpha, rf.exponent, co);
    if (sub->verdict != Verdict::Unknown) {
      verdict = sub->verdict;
      reason = "via the power conjugate equation: " + sub->reason;
      for (const Perm& y : sub->solutions) {
        Perm x = recover_x(rf, y);
        xs.push_back(inverted ? x.inverse() : x);
      }
    } else if (eq.degree() <= opt.max_oracle_n) {
      oracle();
    } else {
      reason = sub->reason;
    }
  } else if (eq.degree() <= opt.max_oracle_n) {
    oracle();
    reason += " (beta != alpha^-1, outside the power conjugate form)";
  } else {
    reason = "beta != alpha^-1 and n exceeds the exhaustive search limit";
  }

  std::sort(xs.begin(), xs.end());
  for (const Perm& x : xs)
    if (!eq.is_solved_by(x))
      throw std::logic_error("recovered x does not solve the cubic; this is a bug");

  if (opt.json) {
    Json j = reduced_json(eq, rf);
    j["verdict"] = to_string(verdict);
    j["reason"] = reason;
    Json list = Json::array();
    for (const Perm& x : xs)
      list.push_back(format_cycles(x));
    j["solutions"] = std::move(list);
    if (sub)
      j["reduced_report"] = report_to_json(*sub);
    out << j.dump(2) << '\n';
  } else {
    print_reduced(out, eq, rf, opt);
    out << "verdict: " << to_string(verdict) << '\n'
        << "reason: " << reason << '\n'
        << "solutions x (" << xs.size() << "):\n";
    for (const Perm& x : xs)
      out << "  " << fmt(x, opt) << '\n';
  }
  return exit_for(verdict);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"permeq: solutions of alpha y alpha^-1 = y^e in S_n", "permeq"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--verbose", opt.verbose, "Print fixed points as 1-cycles");
  app.add_option("--max-oracle-n", opt.max_oracle_n,
                 "Largest degree searched exhaustively")
      ->capture_default_str();
  app.add_option("--q-bound", opt.q_bound, "Trial-division bound for q(e,v)")
      ->capture_default_str();
  app.add_option("--centralizer-cap", opt.centralizer_cap,
                 "Largest centralizer enumerated")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for a random alpha");

  std::optional<std::string> alpha_text;
  std::optional<std::size_t> n;
  std::int64_t e = 2;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the solution set");
  classify_cmd->add_option("alpha", alpha_text, "alpha in cycle notation");
  classify_cmd->add_option("--n", n, "Degree (default: largest point)");
  classify_cmd->add_option("--e", e, "Exponent")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search");
  oracle_cmd->add_option("alpha", alpha_text, "alpha in cycle notation");
  oracle_cmd->add_option("--n", n, "Degree (default: largest point)");
  oracle_cmd->add_option("--e", e, "Exponent")->required();

  std::size_t cn = 0, cr = 0;
  std::int64_t ce = 0;
  auto* construct_cmd =
      app.add_subcommand("construct", "Nontrivial solution for (1 ... n) with r-cycles");
  construct_cmd->add_option("n", cn)->required();
  construct_cmd->add_option("r", cr)->required();
  construct_cmd->add_option("e", ce)->required();

  std::optional<std::size_t> d;
  auto* ranges_cmd = app.add_subcommand("ranges", "Print the d-ranges F_d(alpha)");
  ranges_cmd->add_option("alpha", alpha_text, "alpha in cycle notation");
  ranges_cmd->add_option("--n", n, "Degree (default: largest point)");
  ranges_cmd->add_option("--d", d, "Only this d");

  std::int64_t qe = 0;
  std::uint64_t qv = 0;
  auto* qvalue_cmd = app.add_subcommand("qvalue", "Print q(e,v)");
  qvalue_cmd->add_option("e", qe)->required();
  qvalue_cmd->add_option("v", qv)->required();

  std::vector<std::string> consts;
  int r1 = 1, r2 = 1, r3 = 1;
  auto add_cubic = [&](CLI::App* sub) {
    sub->add_option("constants", consts, "alpha1 alpha2 alpha3")
        ->required()
        ->expected(3);
    sub->add_option("--n", n, "Degree (default: largest point)");
    sub->add_option("--r1", r1, "Exponent of the first x (+1/-1)")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--r2", r2, "Exponent of the second x (+1/-1)")
        ->check(CLI::IsMember({-1, 1}));
    sub->add_option("--r3", r3, "Exponent of the third x (+1/-1)")
        ->check(CLI::IsMember({-1, 1}));
  };
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Rewrite a1 x^r1 a2 x^r2 a3 x^r3 = 1");
  add_cubic(reduce_cmd);
  auto* cubic_cmd =
      app.add_subcommand("solve-cubic", "Solve a1 x^r1 a2 x^r2 a3 x^r3 = 1");
  add_cubic(cubic_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*classify_cmd)
      return cmd_classify(out, opt, alpha_text, n, e);
    if (*oracle_cmd)
      return cmd_oracle(out, opt, alpha_text, n, e);
    if (*construct_cmd)
      return cmd_construct(out, opt, cn, cr, ce);
    if (*ranges_cmd)
      return cmd_ranges(out, opt, alpha_text, n, d);
    if (*qvalue_cmd)
      return cmd_qvalue(out, opt, qe, qv);
    if (*reduce_cmd)
      return cmd_reduce(out, opt, consts, n, r1, r2, r3);
    if (*cubic_cmd)
      return cmd_solve_cubic(out, opt, consts, n, r1, r2, r3);
  } catch (const QUndecided& ex) {
    err << "undecided: " << ex.what() << '\n';
    return kExitUndecided;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace permeq::cli

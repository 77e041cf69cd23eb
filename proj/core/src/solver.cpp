#include "permeq/solver.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "permeq/errors.hpp"
#include "permeq/ranges.hpp"

namespace permeq {

namespace {

using Numbers = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t as_i64(std::uint64_t v) {
  return v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())
             ? std::numeric_limits<std::int64_t>::max()
             : static_cast<std::int64_t>(v);
}

// "e^k - 1", with its value when that fits in 63 bits.
std::string e_pow_text(std::int64_t e, std::uint64_t k) {
  std::string base = e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e);
  std::string out = base + "^" + std::to_string(k) + " - 1";
  __int128 value = 1;
  const __int128 limit = static_cast<__int128>(1) << 62;
  for (std::uint64_t i = 0; i < k; ++i) {
    value *= e;
    if (value > limit || value < -limit)
      return out;
  }
  return out + " = " + std::to_string(static_cast<long long>(value - 1));
}

std::size_t wrap(std::int64_t x, std::size_t r) {
  const std::uint64_t v = mod_floor(x, r);
  return v == 0 ? r : static_cast<std::size_t>(v);
}

Point advance(const Perm& p, Point x, std::uint64_t steps) {
  for (std::uint64_t k = 0; k < steps; ++k)
    x = p(x);
  return x;
}

void add(HypothesisLog& log, std::string condition, bool pass, Numbers numbers) {
  log.push_back({std::move(condition), pass, std::move(numbers)});
}

bool all_pass(const HypothesisLog& log) {
  return std::all_of(log.begin(), log.end(),
                     [](const HypothesisEntry& h) { return h.pass; });
}

void assert_solutions(const Perm& alpha, std::int64_t e,
                      const std::vector<Perm>& ys, const char* route) {
  for (const Perm& y : ys)
    if (!is_solution(alpha, y, e))
      throw std::logic_error(std::string(route) +
                             " produced a non-solution; this is a bug");
}

}  // namespace

void require_nontrivial_exponent(std::int64_t e) {
  if (e >= -1 && e <= 1)
    throw PreconditionFailed("exponent e must lie outside {-1, 0, 1}, got " +
                             std::to_string(e));
}

// ---------------------------------------------------------------------------

std::vector<Perm> exhaustive_search(std::size_t n,
                                    const std::function<bool(const Perm&)>& pred,
                                    std::size_t max_n, unsigned workers) {
  if (n > max_n)
    throw DegreeTooLarge(n, max_n);
  if (n == 0)
    throw InvalidPermutation("degree must be positive");
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  // chunk f holds the candidates with y(1) = f + 1
  std::vector<std::vector<Perm>> chunks(n);
  auto run_chunk = [&](std::size_t f) {
    std::vector<Point> image;
    image.push_back(static_cast<Point>(f + 1));
    for (Point x = 1; x <= n; ++x)
      if (x != f + 1)
        image.push_back(x);
    do {
      Perm p = Perm::from_image(image);
      if (pred(p))
        chunks[f].push_back(std::move(p));
    } while (std::next_permutation(image.begin() + 1, image.end()));
  };
  auto run_stride = [&](unsigned t) {
    for (std::size_t f = t; f < n; f += workers)
      run_chunk(f);
  };

  if (workers == 1) {
    run_stride(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < workers; ++t)
      jobs.push_back(std::async(std::launch::async, run_stride, t));
    for (auto& job : jobs)
      job.get();
  }

  std::vector<Perm> out;
  for (auto& chunk : chunks)
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

std::vector<Perm> brute_force_solutions(const Perm& alpha, std::int64_t e,
                                        std::size_t max_n, unsigned workers) {
  const Perm alpha_inv = alpha.inverse();
  return exhaustive_search(
      alpha.degree(),
      [&](const Perm& y) { return alpha * y * alpha_inv == power(y, e); },
      max_n, workers);
}

// ---------------------------------------------------------------------------

CyclicConstruction construct_cyclic_solution(std::size_t n, std::size_t r,
                                             std::int64_t e) {
  require_nontrivial_exponent(e);
  if (r < 2)
    throw PreconditionFailed("cycle length r must be >= 2, got " +
                             std::to_string(r));
  if (n % r != 0)
    throw PreconditionFailed("r = " + std::to_string(r) +
                             " does not divide n = " + std::to_string(n));
  const std::size_t q = n / r;
  if (!divides_e_pow_minus_one(r, e, q))
    throw PreconditionFailed("r = " + std::to_string(r) +
                             " does not divide e^(n/r) - 1: " +
                             e_pow_text(e, q) + " (residue " +
                             std::to_string((pow_signed_mod(e, q, r) + r - 1) % r) +
                             " mod " + std::to_string(r) + ")");

  CyclicConstruction out;
  out.grid = PairGrid{q, r};
  const PairGrid& grid = out.grid;
  const std::int64_t e_mod = static_cast<std::int64_t>(mod_floor(e, r));

  std::vector<Point> eps(n), ys(n);
  for (std::size_t i = 1; i <= q; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      const std::int64_t ej = e_mod * static_cast<std::int64_t>(j);
      eps[grid.label(i, j) - 1] = i < q ? grid.label(i + 1, wrap(ej, r))
                                        : grid.label(1, wrap(ej + 1, r));
      ys[grid.label(i, j) - 1] = grid.label(i, wrap(static_cast<std::int64_t>(j) + 1, r));
    }
  }
  out.epsilon = Perm::from_image(std::move(eps));
  out.grid_solution = Perm::from_image(std::move(ys));

  // relabel epsilon^k(1, 1) -> k + 1
  std::vector<Point> tau(n, 0);
  Point x = grid.label(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (tau[x - 1] != 0)
      throw std::logic_error("grid map is not a single n-cycle");
    tau[x - 1] = static_cast<Point>(k + 1);
    x = out.epsilon(x);
  }
  const Perm relabel = Perm::from_image(std::move(tau));
  out.alpha = conjugate(relabel, out.epsilon);
  out.y = conjugate(relabel, out.grid_solution);

  if (out.alpha != Perm::standard_cycle(n) || !is_solution(out.alpha, out.y, e))
    throw std::logic_error("cyclic construction failed its own check");
  return out;
}

std::optional<Witness> cyclic_gcd_witness(std::size_t n, std::int64_t e) {
  require_nontrivial_exponent(e);
  const std::uint64_t d = gcd_with_e_pow(n, e);
  if (d == 1)
    return std::nullopt;
  const std::uint64_t p = smallest_prime_factor(d);
  // p | n and p | e^n - 1 force p | e^(n/p) - 1
  CyclicConstruction c = construct_cyclic_solution(n, p, e);
  return Witness{d, std::move(c.y)};
}

std::optional<Witness> cycle_length_witness(const Perm& alpha, std::int64_t e) {
  require_nontrivial_exponent(e);
  const std::size_t n = alpha.degree();
  for (const Cycle& c : cycle_decomposition(alpha)) {
    const std::size_t a = c.length();
    if (a < 2 || gcd_with_e_pow(a, e) == 1)
      continue;

    auto local = cyclic_gcd_witness(a, e);
    const Perm restricted = restrict(alpha, c.elements);
    const Perm tau = *conjugator_between(Perm::standard_cycle(a), restricted);
    const Perm y1 = conjugate(tau, local->y);

    std::vector<Part> parts;
    parts.push_back({c.elements, y1});
    std::vector<Point> rest;
    std::vector<bool> inside(n, false);
    for (Point x : c.elements)
      inside[x - 1] = true;
    for (Point x = 1; x <= n; ++x)
      if (!inside[x - 1])
        rest.push_back(x);
    if (!rest.empty())
      parts.push_back({rest, Perm(rest.size())});

    Perm y = disjoint_union(n, parts);
    assert_solutions(alpha, e, {y}, "cycle_length_witness");
    return Witness{local->d, std::move(y)};
  }
  return std::nullopt;
}

HypothesisLog cyclic_completeness_hypotheses(std::size_t n, std::uint64_t p,
                                             std::int64_t e) {
  HypothesisLog log;
  const bool prime = is_prime(p);
  add(log, "p is prime", prime, {{"p", as_i64(p)}});
  const bool divides = p != 0 && n % p == 0;
  add(log, "p | n", divides, {{"p", as_i64(p)}, {"n", as_i64(n)}});
  if (!prime || !divides)
    return log;

  const std::uint64_t q = n / p;
  add(log, "p | e^(n/p) - 1", divides_e_pow_minus_one(p, e, q),
      {{"p", as_i64(p)},
       {"e", e},
       {"n/p", as_i64(q)},
       {"e^(n/p) - 1 mod p",
        as_i64((pow_signed_mod(e, q, p) + p - 1) % p)}});
  const std::uint64_t g = gcd_e_pow_minus_one(q, e, n);
  add(log, "gcd(n/p, e^n - 1) = 1", g == 1,
      {{"n/p", as_i64(q)}, {"e", e}, {"n", as_i64(n)}, {"gcd", as_i64(g)}});
  return log;
}

SolutionReport cyclic_complete_set(std::size_t n, std::uint64_t p,
                                   std::int64_t e) {
  require_nontrivial_exponent(e);
  SolutionReport report;
  report.hypotheses_log = cyclic_completeness_hypotheses(n, p, e);
  if (!all_pass(report.hypotheses_log)) {
    std::string broken;
    for (const auto& h : report.hypotheses_log)
      if (!h.pass)
        broken += (broken.empty() ? "" : "; ") + h.condition;
    throw HypothesesFailed("cyclic completeness hypotheses failed for n = " +
                           std::to_string(n) + ", p = " + std::to_string(p) +
                           ", e = " + std::to_string(e) + ": " + broken);
  }

  const CyclicConstruction c = construct_cyclic_solution(n, p, e);
  for (std::uint64_t k = 1; k < p; ++k)
    report.solutions.push_back(power(c.y, static_cast<std::int64_t>(k)));
  report.solutions.push_back(Perm(n));
  assert_solutions(c.alpha, e, report.solutions, "cyclic_complete_set");

  report.verdict = Verdict::CompleteSet;
  report.reason = "cyclic alpha: the solutions are the p powers of one "
                  "nontrivial solution (p = " + std::to_string(p) + ")";
  return report;
}

// ---------------------------------------------------------------------------

InducedPerm induced_perm(const Perm& alpha, const Perm& y, std::size_t r,
                         std::int64_t e) {
  if (alpha.degree() != y.degree())
    throw DegreeMismatch(alpha.degree(), y.degree());
  if (!is_solution(alpha, y, e))
    throw NotASolution("y does not satisfy alpha y alpha^-1 = y^" +
                       std::to_string(e));

  const std::size_t n = alpha.degree();
  InducedPerm ip;
  ip.r = r;
  for (Cycle& c : cycle_decomposition(y))
    if (c.length() == r)
      ip.base_sets.push_back(std::move(c));
  if (ip.base_sets.empty())
    throw NoSuchCycleLength("y has no cycle of length " + std::to_string(r));

  std::vector<std::size_t> owner(n, 0);
  for (std::size_t i = 0; i < ip.base_sets.size(); ++i)
    for (Point x : ip.base_sets[i].elements)
      owner[x - 1] = i + 1;

  std::vector<Point> gamma(ip.base_sets.size());
  for (std::size_t i = 0; i < ip.base_sets.size(); ++i) {
    const std::size_t target = owner[alpha(ip.base_sets[i].first()) - 1];
    for (Point x : ip.base_sets[i].elements)
      if (target == 0 || owner[alpha(x) - 1] != target)
        throw std::logic_error("alpha does not permute the base sets");
    gamma[i] = static_cast<Point>(target);
  }
  ip.gamma = Perm::from_image(std::move(gamma));

  const CycleType t = type_of(alpha);
  const std::uint64_t w = order_of(alpha);
  const std::size_t t_r = ip.base_sets.size();
  if (!d_range(t, 1).contains(static_cast<long long>(t_r * r)))
    throw std::logic_error("t_r * r is not in the 1-range of alpha");
  for (const Cycle& gc : cycle_decomposition(ip.gamma)) {
    const std::size_t d = gc.length();
    if (w % d != 0)
      throw std::logic_error("a gamma-cycle length does not divide ord(alpha)");
    if (!d_range(t, d).contains(static_cast<long long>(d * r)))
      throw std::logic_error("d * r is not in the d-range of alpha");
  }
  return ip;
}

Cycle alpha_cycle_in_orbit_union(const Perm& alpha, const Perm& y,
                                 const InducedPerm& ip, const Cycle& gamma_cycle,
                                 std::int64_t e) {
  const std::size_t d = gamma_cycle.length();
  const std::size_t r = ip.r;
  if (gcd_e_pow_minus_one(r, e, d) != 1)
    throw PreconditionFailed(
        "gcd(e^d - 1, r) = " + std::to_string(gcd_e_pow_minus_one(r, e, d)) +
        " != 1 for d = " + std::to_string(d) + ", r = " + std::to_string(r) +
        " (" + e_pow_text(e, d) + ")");
  for (std::size_t k = 0; k < d; ++k) {
    const Point i = gamma_cycle.elements[k];
    if (i < 1 || i > ip.gamma.degree() ||
        ip.gamma(i) != gamma_cycle.elements[(k + 1) % d])
      throw PreconditionFailed("the given cycle is not a cycle of gamma");
  }

  const Point c1 = ip.base_sets[gamma_cycle.first() - 1].first();
  const Point target = advance(alpha, c1, d);
  std::uint64_t s = 0;
  for (Point x = c1; x != target; x = y(x)) {
    if (++s > r)
      throw std::logic_error("alpha^d(c1) left the base set of c1");
  }
  if (s == 0)
    s = r;

  // (e^d - 1) u + s = 0 (mod r)
  const std::uint64_t m = (pow_signed_mod(e, d, r) + r - 1 % r) % r;
  const std::uint64_t inv = *inverse_mod(static_cast<std::int64_t>(m), r);
  const std::uint64_t u = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(r - s % r) % r * inv) % r);

  const Point start = advance(y, c1, u);
  Cycle out;
  Point x = start;
  do {
    out.elements.push_back(x);
    x = alpha(x);
  } while (x != start && out.elements.size() <= d);
  if (out.length() != d)
    throw std::logic_error("constructed alpha-cycle has the wrong length");
  std::rotate(out.elements.begin(),
              std::min_element(out.elements.begin(), out.elements.end()),
              out.elements.end());
  return out;
}

// ---------------------------------------------------------------------------

TrivialityCheck triviality_check(const Perm& alpha, std::int64_t e) {
  require_nontrivial_exponent(e);
  TrivialityCheck out;
  const std::size_t n = alpha.degree();
  const CycleType t = type_of(alpha);
  const std::uint64_t w = order_of(alpha);
  const std::int64_t em1 = e - 1;

  const bool no_fixed = t.count(1) == 0;
  add(out.log, "g_1 = 0", no_fixed, {{"g_1", as_i64(t.count(1))}});
  out.hypotheses_pass = no_fixed;

  std::map<std::size_t, DRange> ranges;
  auto range = [&](std::size_t d) -> const DRange& {
    auto it = ranges.find(d);
    if (it == ranges.end())
      it = ranges.emplace(d, d_range(t, d)).first;
    return it->second;
  };

  std::size_t premises = 0;
  for (std::size_t r = 2; 2 * r <= n; ++r) {
    if (gcd(em1, static_cast<std::int64_t>(r)) != 1 ||
        !divides_e_pow_minus_one(r, e, w))
      continue;
    for (std::size_t d = 2; d * r <= n; ++d) {
      if (w % d != 0 || !range(d).contains(static_cast<long long>(d * r)))
        continue;
      ++premises;
      const bool gd_zero = t.count(d) == 0;
      const std::uint64_t g = gcd_e_pow_minus_one(r, e, d);
      const bool ok = gd_zero && g == 1;
      add(out.log, "g_d = 0 and gcd(e^d - 1, r) = 1 for qualifying (r, d)", ok,
          {{"r", as_i64(r)},
           {"d", as_i64(d)},
           {"w", as_i64(w)},
           {"g_d", as_i64(t.count(d))},
           {"gcd(e^d - 1, r)", as_i64(g)}});
      if (!ok && !out.violation) {
        out.violation = {r, d};
        out.hypotheses_pass = false;
      }
    }
  }
  add(out.log, "qualifying (r, d) pairs examined", true,
      {{"count", as_i64(premises)}});

  // Cycle lengths s sharing a factor with e - 1 are impossible when s does not
  // divide e^w - 1 or no positive multiple of s lies in the 1-range.
  bool unconditional = true;
  if (em1 != 1 && em1 != -1) {
    const DRange& f1 = range(1);
    for (std::size_t s = 2; s <= n; ++s) {
      if (gcd(em1, static_cast<std::int64_t>(s)) == 1)
        continue;
      bool possible = divides_e_pow_minus_one(s, e, w);
      if (possible) {
        possible = false;
        for (std::size_t m = s; m <= n; m += s)
          if (f1.contains(static_cast<long long>(m)))
            possible = true;
      }
      if (possible) {
        unconditional = false;
        add(out.log, "cycle length sharing a factor with e - 1 ruled out", false,
            {{"s", as_i64(s)}, {"e - 1", em1}});
      }
    }
  }
  out.unconditional = out.hypotheses_pass && unconditional;
  add(out.log, "every admissible cycle length is coprime to e - 1",
      unconditional, {{"e - 1", em1}});
  return out;
}

SolutionReport two_cycle_triviality(std::uint64_t a, std::uint64_t b,
                                    std::int64_t e) {
  require_nontrivial_exponent(e);
  if (a < 2 || a >= b)
    throw PreconditionFailed("need 2 <= a < b, got a = " + std::to_string(a) +
                             ", b = " + std::to_string(b));
  if (b % a == 0)
    throw PreconditionFailed("a = " + std::to_string(a) + " divides b = " +
                             std::to_string(b));

  SolutionReport report;
  std::optional<std::uint64_t> failing;
  for (std::uint64_t u : {a, b, a + b}) {
    const std::uint64_t g = gcd_with_e_pow(u, e);
    add(report.hypotheses_log, "gcd(u, e^u - 1) = 1", g == 1,
        {{"u", as_i64(u)}, {"e", e}, {"gcd", as_i64(g)}});
    if (g != 1 && !failing)
      failing = u;
  }
  if (failing) {
    report.verdict = Verdict::Unknown;
    report.reason = "gcd(u, e^u - 1) != 1 for u = " + std::to_string(*failing);
    return report;
  }
  report.verdict = Verdict::OnlyTrivial;
  report.solutions.push_back(Perm(a + b));
  report.reason = "two coprime-gcd cycles: only the identity solves";
  return report;
}

// ---------------------------------------------------------------------------

CentralizerCheck centralizer_hypotheses(const Perm& alpha, std::int64_t e,
                                        std::uint64_t q_bound) {
  require_nontrivial_exponent(e);
  CentralizerCheck out;
  const CycleType t = type_of(alpha);
  const auto lengths = t.lengths();
  auto fail = [&](const std::string& clause) {
    if (out.failed_clause.empty())
      out.failed_clause = clause;
  };

  const bool no_fixed = t.count(1) == 0;
  add(out.log, "g_1 = 0", no_fixed, {{"g_1", as_i64(t.count(1))}});
  if (!no_fixed)
    fail("g_1 = 0");

  for (std::size_t i = 0; i < lengths.size(); ++i)
    for (std::size_t j = i + 1; j < lengths.size(); ++j) {
      const std::uint64_t g = std::gcd(lengths[i], lengths[j]);
      add(out.log, "distinct cycle lengths coprime", g == 1,
          {{"a", as_i64(lengths[i])}, {"b", as_i64(lengths[j])}, {"gcd", as_i64(g)}});
      if (g != 1)
        fail("distinct cycle lengths coprime");
    }

  for (std::size_t a : lengths) {
    const std::uint64_t g = gcd_with_e_pow(a, e);
    add(out.log, "gcd(a, e^a - 1) = 1", g == 1,
        {{"a", as_i64(a)}, {"e", e}, {"gcd", as_i64(g)}});
    if (g != 1)
      fail("gcd(a, e^a - 1) = 1");
  }
  if (!out.failed_clause.empty())
    return out;

  // gcd(a, e^a - 1) = 1 for all a forces gcd(w, e - 1) = 1, so q(e, w) is defined
  const std::uint64_t w = order_of(alpha);
  const QValue q = q_of(e, w, q_bound);
  add(out.log, "q(e, w) computed", true,
      {{"w", as_i64(w)},
       {"q", q.is_finite() ? as_i64(q.value()) : -1},
       {"q_at_least", q.is_at_least() ? as_i64(q.value()) : -1},
       {"q_infinite", q.is_infinite() ? 1 : 0}});
  for (std::size_t a : lengths) {
    const bool ok = q.certifies_at_most_q_minus_one(t.count(a));
    add(out.log, "g_a <= q(e, w) - 1", ok,
        {{"a", as_i64(a)}, {"g_a", as_i64(t.count(a))}, {"w", as_i64(w)}});
    if (!ok) {
      if (q.is_at_least())
        out.q_undecided = true;
      else
        fail("g_a <= q(e, w) - 1");
    }
  }
  out.pass = out.failed_clause.empty() && !out.q_undecided;
  return out;
}

std::uint64_t centralizer_size(const Perm& alpha) {
  const CycleType t = type_of(alpha);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  auto mul = [&](std::uint64_t f) {
    size = (f != 0 && size > kMax / f) ? kMax : size * f;
  };
  for (std::size_t len : t.lengths()) {
    for (std::size_t k = 1; k <= t.count(len); ++k) {
      mul(len);
      mul(k);
    }
  }
  return size;
}

std::vector<Perm> centralizer_elements(const Perm& alpha, std::uint64_t cap) {
  const std::uint64_t size = centralizer_size(alpha);
  if (size > cap)
    throw CapExceeded("centralizer has " + std::to_string(size) +
                      " elements, above the cap of " + std::to_string(cap));

  const std::size_t n = alpha.degree();
  std::map<std::size_t, std::vector<Cycle>> by_length;
  for (Cycle& c : cycle_decomposition(alpha))
    by_length[c.length()].push_back(std::move(c));

  // Every option for one block of equal-length cycles, as (point, image) lists.
  using Patch = std::vector<std::pair<Point, Point>>;
  std::vector<std::vector<Patch>> blocks;
  for (const auto& [len, cycles] : by_length) {
    const std::size_t g = cycles.size();
    std::vector<Patch> options;
    std::vector<std::size_t> target(g);
    std::iota(target.begin(), target.end(), 0);
    do {
      std::vector<std::size_t> rot(g, 0);
      while (true) {
        Patch patch;
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < len; ++j)
            patch.emplace_back(cycles[i].elements[j],
                               cycles[target[i]].elements[(j + rot[i]) % len]);
        options.push_back(std::move(patch));
        std::size_t k = 0;
        while (k < g && ++rot[k] == len)
          rot[k++] = 0;
        if (k == g)
          break;
      }
    } while (std::next_permutation(target.begin(), target.end()));
    blocks.push_back(std::move(options));
  }

  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(size));
  std::vector<std::size_t> pick(blocks.size(), 0);
  std::vector<Point> image(n);
  while (true) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (const auto& [x, img] : blocks[b][pick[b]])
        image[x - 1] = img;
    out.push_back(Perm::from_image(image));
    std::size_t b = 0;
    while (b < blocks.size() && ++pick[b] == blocks[b].size())
      pick[b++] = 0;
    if (b == blocks.size())
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolutionReport centralizer_solutions(const Perm& alpha, std::int64_t e,
                                     std::uint64_t q_bound, std::uint64_t cap) {
  CentralizerCheck check = centralizer_hypotheses(alpha, e, q_bound);
  if (!check.failed_clause.empty())
    throw HypothesesFailed("centralizer hypotheses failed: " +
                           check.failed_clause);
  if (check.q_undecided)
    throw QUndecided("q(e, w) is only known to exceed " +
                     std::to_string(q_bound) +
                     "; raise the bound to decide g_a <= q(e, w) - 1");

  SolutionReport report;
  report.hypotheses_log = std::move(check.log);
  for (Perm& y : centralizer_elements(alpha, cap))
    if (power(y, e - 1).is_identity())
      report.solutions.push_back(std::move(y));
  assert_solutions(alpha, e, report.solutions, "centralizer_solutions");
  add(report.hypotheses_log, "centralizer enumerated", true,
      {{"|C(alpha)|", as_i64(centralizer_size(alpha))},
       {"solutions", as_i64(report.solutions.size())}});
  report.verdict = Verdict::CentralizerTorsion;
  report.reason = "solutions are the elements of the centralizer with y^(e-1) = 1";
  return report;
}

std::optional<Witness> centralizer_power_witness(const Perm& alpha,
                                                 std::int64_t e) {
  require_nontrivial_exponent(e);
  const std::uint64_t w = order_of(alpha);
  const std::uint64_t d = gcd(as_i64(w), e - 1);
  if (d == 1)
    return std::nullopt;
  Perm y = power(alpha, static_cast<std::int64_t>(w / d));
  if (y.is_identity() || !power(y, as_i64(d)).is_identity() ||
      !is_solution(alpha, y, e) || y * alpha != alpha * y)
    throw std::logic_error("alpha^(w/d) failed its own check");
  return Witness{d, std::move(y)};
}

}  // namespace permeq

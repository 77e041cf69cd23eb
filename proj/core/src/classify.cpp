#include <algorithm>
#include <string>

#include "permeq/errors.hpp"
#include "permeq/solver.hpp"

namespace permeq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::OnlyTrivial:
      return "OnlyTrivial";
    case Verdict::CompleteSet:
      return "CompleteSet";
    case Verdict::CentralizerTorsion:
      return "CentralizerTorsion";
    case Verdict::ConstructedWitness:
      return "ConstructedWitness";
    case Verdict::OracleSet:
      return "OracleSet";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

bool is_complete(Verdict v) {
  return v == Verdict::OnlyTrivial || v == Verdict::CompleteSet ||
         v == Verdict::CentralizerTorsion || v == Verdict::OracleSet;
}

namespace {

void append(HypothesisLog& into, const HypothesisLog& from,
            const std::string& prefix) {
  for (HypothesisEntry h : from) {
    h.condition = prefix + ": " + h.condition;
    into.push_back(std::move(h));
  }
}

void note(HypothesisLog& log, std::string condition, bool pass,
          std::vector<std::pair<std::string, std::int64_t>> numbers = {}) {
  log.push_back({std::move(condition), pass, std::move(numbers)});
}

SolutionReport finish(const Perm& alpha, std::int64_t e, SolutionReport report) {
  for (const Perm& y : report.solutions)
    if (!is_solution(alpha, y, e))
      throw std::logic_error("classify produced a non-solution; this is a bug");
  // A centralizer set consisting of the identity alone says exactly that.
  if (report.verdict == Verdict::CentralizerTorsion &&
      report.solutions.size() == 1 && report.solutions.front().is_identity())
    report.verdict = Verdict::OnlyTrivial;
  return report;
}

// Two cycles of lengths a < b, a not dividing b, no fixed points.
std::optional<std::pair<std::size_t, std::size_t>> two_cycle_shape(
    const CycleType& t) {
  const auto lengths = t.lengths();
  if (lengths.size() != 2 || t.count(lengths[0]) != 1 ||
      t.count(lengths[1]) != 1)
    return std::nullopt;
  const std::size_t a = lengths[0], b = lengths[1];
  if (a < 2 || b % a == 0)
    return std::nullopt;
  return std::make_pair(a, b);
}

}  // namespace

SolutionReport classify(const Perm& alpha, std::int64_t e,
                        const ClassifyOptions& options) {
  require_nontrivial_exponent(e);
  const std::size_t n = alpha.degree();
  const CycleType type = type_of(alpha);
  SolutionReport report;
  HypothesisLog& log = report.hypotheses_log;

  // 1. centralizer characterization
  CentralizerCheck cc = centralizer_hypotheses(alpha, e, options.q_bound);
  append(log, cc.log, "centralizer");
  if (cc.q_undecided)
    note(log, "centralizer: q(e, w) undecided at the trial-division bound", false,
         {{"q_bound", static_cast<std::int64_t>(options.q_bound)}});
  if (cc.pass) {
    try {
      SolutionReport sub =
          centralizer_solutions(alpha, e, options.q_bound, options.centralizer_cap);
      report.verdict = sub.verdict;
      report.solutions = std::move(sub.solutions);
      report.reason = sub.reason;
      note(log, "centralizer: enumerated", true,
           {{"solutions", static_cast<std::int64_t>(report.solutions.size())}});
      return finish(alpha, e, std::move(report));
    } catch (const CapExceeded& ex) {
      note(log, std::string("centralizer: ") + ex.what(), false);
    }
  }

  // 2. a single n-cycle
  if (n >= 2 && type.count(n) == 1) {
    const Perm standard = Perm::standard_cycle(n);
    const Perm tau = *conjugator_between(standard, alpha);
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (n % p != 0 || !is_prime(p))
        continue;
      const HypothesisLog hyps = cyclic_completeness_hypotheses(n, p, e);
      append(log, hyps, "cyclic p=" + std::to_string(p));
      if (!std::all_of(hyps.begin(), hyps.end(),
                       [](const HypothesisEntry& h) { return h.pass; }))
        continue;
      SolutionReport sub = cyclic_complete_set(n, p, e);
      for (const Perm& y : sub.solutions)
        report.solutions.push_back(conjugate(tau, y));
      report.verdict = Verdict::CompleteSet;
      report.reason = sub.reason;
      return finish(alpha, e, std::move(report));
    }
  }

  // 3. triviality
  if (auto shape = two_cycle_shape(type)) {
    SolutionReport sub = two_cycle_triviality(shape->first, shape->second, e);
    append(log, sub.hypotheses_log, "two-cycle");
    if (sub.verdict == Verdict::OnlyTrivial) {
      report.verdict = Verdict::OnlyTrivial;
      report.solutions = {Perm(n)};
      report.reason = sub.reason;
      return finish(alpha, e, std::move(report));
    }
  }
  TrivialityCheck tc = triviality_check(alpha, e);
  append(log, tc.log, "triviality");
  if (tc.unconditional) {
    report.verdict = Verdict::OnlyTrivial;
    report.solutions = {Perm(n)};
    report.reason = "triviality criteria hold and no admissible cycle length "
                    "shares a factor with e - 1";
    return finish(alpha, e, std::move(report));
  }
  if (tc.hypotheses_pass)
    note(log,
         "triviality (conditional): every nontrivial solution has a cycle "
         "length sharing a factor with e - 1",
         true, {{"e - 1", e - 1}});

  // 4. exhaustive search
  if (n <= options.max_oracle_n) {
    report.solutions =
        brute_force_solutions(alpha, e, options.max_oracle_n, options.workers);
    report.verdict = Verdict::OracleSet;
    report.reason = "exhaustive search over all " + std::to_string(n) +
                    "! permutations";
    note(log, "oracle: exhaustive search", true,
         {{"n", static_cast<std::int64_t>(n)},
          {"solutions", static_cast<std::int64_t>(report.solutions.size())}});
    return finish(alpha, e, std::move(report));
  }
  note(log, "oracle: degree above the exhaustive search limit", false,
       {{"n", static_cast<std::int64_t>(n)},
        {"max_oracle_n", static_cast<std::int64_t>(options.max_oracle_n)}});

  // 5. witnesses
  if (auto w = cycle_length_witness(alpha, e)) {
    note(log, "witness: cycle length a with gcd(a, e^a - 1) = d != 1", true,
         {{"d", static_cast<std::int64_t>(w->d)}});
    report.verdict = Verdict::ConstructedWitness;
    report.solutions = {w->y};
    report.reason = "nontrivial solution supported on one cycle, y^d = 1 with d = " +
                    std::to_string(w->d);
    return finish(alpha, e, std::move(report));
  }
  note(log, "witness: no cycle length a with gcd(a, e^a - 1) != 1", false);
  if (auto w = centralizer_power_witness(alpha, e)) {
    note(log, "witness: d = gcd(w, e - 1) != 1", true,
         {{"d", static_cast<std::int64_t>(w->d)}});
    report.verdict = Verdict::ConstructedWitness;
    report.solutions = {w->y};
    report.reason = "alpha^(w/d) is a nontrivial solution, d = " +
                    std::to_string(w->d);
    return finish(alpha, e, std::move(report));
  }
  note(log, "witness: gcd(w, e - 1) = 1", false);

  report.verdict = Verdict::Unknown;
  report.reason = cc.q_undecided
                      ? "QUndecided: q(e, w) exceeds the trial-division bound"
                      : "no route applies";
  return report;
}

}  // namespace permeq

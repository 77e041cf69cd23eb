#ifndef PERMEQ_REPORT_HPP
#define PERMEQ_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permeq/perm.hpp"

namespace permeq {

/// One tested condition together with the numbers that decided it.
struct HypothesisEntry {
  std::string condition;
  bool pass = false;
  std::vector<std::pair<std::string, std::int64_t>> numbers;
};

using HypothesisLog = std::vector<HypothesisEntry>;

enum class Verdict {
  OnlyTrivial,         ///< the identity is the only solution
  CompleteSet,         ///< the full solution set, from a completeness criterion
  CentralizerTorsion,  ///< the full set, as {y in C(alpha) : y^(e-1) = 1}
  ConstructedWitness,  ///< one nontrivial solution; the set is not claimed
  OracleSet,           ///< the full set, by exhaustive search
  Unknown,
};

std::string to_string(Verdict v);

/// True for verdicts that pin down the whole solution set.
bool is_complete(Verdict v);

struct SolutionReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<Perm> solutions;
  std::string reason;  ///< which route produced the verdict, or why Unknown
  HypothesisLog hypotheses_log;
};

}  // namespace permeq

#endif  // PERMEQ_REPORT_HPP

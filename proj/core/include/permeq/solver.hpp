#ifndef PERMEQ_SOLVER_HPP
#define PERMEQ_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "permeq/numtheory.hpp"
#include "permeq/perm.hpp"
#include "permeq/report.hpp"

// Solvers for the power conjugate equation  alpha * y * alpha^-1 = y^e  in S_n.

namespace permeq {

inline constexpr std::size_t kDefaultMaxOracleDegree = 8;
inline constexpr std::uint64_t kDefaultCentralizerCap = 1'000'000;

/// Throws PreconditionFailed for e in {-1, 0, 1}.
void require_nontrivial_exponent(std::int64_t e);

// ---------------------------------------------------------------------------
// Exhaustive search

/**
 * Every y in S_n satisfying pred, in lexicographic image-table order.
 *
 * The candidates are split by the image of 1 across `workers` threads
 * (0 picks the hardware concurrency); the output order does not depend on
 * the worker count. Throws DegreeTooLarge when n > max_n.
 */
std::vector<Perm> exhaustive_search(std::size_t n,
                                    const std::function<bool(const Perm&)>& pred,
                                    std::size_t max_n = kDefaultMaxOracleDegree,
                                    unsigned workers = 0);

/// {y in S_n : alpha y alpha^-1 = y^e}, lexicographically ordered. Any e.
std::vector<Perm> brute_force_solutions(
    const Perm& alpha, std::int64_t e,
    std::size_t max_n = kDefaultMaxOracleDegree, unsigned workers = 0);

// ---------------------------------------------------------------------------
// Cyclic alpha

/// The cells (i, j), 1 <= i <= q, 1 <= j <= r, labeled row-major as
/// (i - 1) * r + j.
struct PairGrid {
  std::size_t q = 1;
  std::size_t r = 1;

  std::size_t size() const noexcept { return q * r; }
  Point label(std::size_t i, std::size_t j) const noexcept {
    return static_cast<Point>((i - 1) * r + j);
  }
  std::pair<std::size_t, std::size_t> cell(Point label) const noexcept {
    return {(label - 1) / r + 1, (label - 1) % r + 1};
  }
};

struct CyclicConstruction {
  PairGrid grid;
  Perm epsilon;        ///< the shift-and-multiply map on the grid (row-major)
  Perm grid_solution;  ///< (i, j) -> (i, j + 1) on the grid
  Perm alpha;          ///< epsilon relabeled along its cycle: (1 2 ... n)
  Perm y;              ///< grid_solution under the same relabeling
};

/**
 * A nontrivial solution for alpha = (1 2 ... n) whose cycles all have
 * length r.
 *
 * On the grid with q = n / r rows, epsilon(i, j) = (i + 1, e*j) for i < q and
 * epsilon(q, j) = (1, e*j + 1), with second coordinates taken in {1..r}
 * modulo r; y(i, j) = (i, j + 1). Both are relabeled by
 * epsilon^k(1, 1) -> k + 1. Requires r >= 2, r | n, r | e^(n/r) - 1 and
 * e not in {-1, 0, 1}; throws PreconditionFailed naming the broken condition.
 */
CyclicConstruction construct_cyclic_solution(std::size_t n, std::size_t r,
                                             std::int64_t e);

/// A nontrivial solution y together with an exponent d such that y^d = 1.
struct Witness {
  std::uint64_t d = 1;
  Perm y;
};

/// For alpha = (1 ... n): if d = gcd(n, e^n - 1) != 1, a solution with
/// y^d = 1 built from the least prime p | d. nullopt when d = 1 (no
/// nonexistence claim).
std::optional<Witness> cyclic_gcd_witness(std::size_t n, std::int64_t e);

/// For any alpha: the first cycle length a (by least point) with
/// d = gcd(a, e^a - 1) != 1 yields a solution supported on that cycle and
/// trivial elsewhere.
std::optional<Witness> cycle_length_witness(const Perm& alpha, std::int64_t e);

/// The three completeness conditions for alpha = (1 ... n) and prime p:
/// p | n, p | e^(n/p) - 1 and gcd(n/p, e^n - 1) = 1 (plus primality of p).
HypothesisLog cyclic_completeness_hypotheses(std::size_t n, std::uint64_t p,
                                             std::int64_t e);

/// Under those conditions the solutions for alpha = (1 ... n) are exactly
/// y, y^2, ..., y^(p-1), 1. Throws HypothesesFailed otherwise.
SolutionReport cyclic_complete_set(std::size_t n, std::uint64_t p,
                                   std::int64_t e);

// ---------------------------------------------------------------------------
// Structure of a solution

/// How alpha permutes the supports of the r-cycles of a solution y.
struct InducedPerm {
  std::size_t r = 1;
  std::vector<Cycle> base_sets;  ///< the r-cycles of y, by least point
  Perm gamma;                    ///< alpha(base_sets[i]) = base_sets[gamma(i)]
};

/**
 * Builds the induced permutation and checks what it implies: t_r * r lies in
 * the 1-range of alpha, and every gamma-cycle length d divides ord(alpha) with
 * d * r in the d-range. Throws NotASolution or NoSuchCycleLength.
 */
InducedPerm induced_perm(const Perm& alpha, const Perm& y, std::size_t r,
                         std::int64_t e);

/**
 * Given a d-cycle of gamma with gcd(e^d - 1, r) = 1, the d-cycle of alpha that
 * lives inside the union of the indicated base sets. With c the first point of
 * the first base set and alpha^d(c) = y^s(c), the cycle passes through y^u(c)
 * where (e^d - 1) u + s = 0 mod r.
 */
Cycle alpha_cycle_in_orbit_union(const Perm& alpha, const Perm& y,
                                 const InducedPerm& ip, const Cycle& gamma_cycle,
                                 std::int64_t e);

// ---------------------------------------------------------------------------
// Triviality

struct TrivialityCheck {
  /// g_1 = 0, and every (r, d) with r, d >= 2, gcd(e-1, r) = 1,
  /// r | e^w - 1, d | w and d*r in F_d(alpha) has g_d = 0 and
  /// gcd(e^d - 1, r) = 1.
  bool hypotheses_pass = false;
  /// Also every cycle length s >= 2 sharing a factor with e - 1 is ruled out
  /// for solutions, so the identity is the only solution.
  bool unconditional = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;  ///< (r, d)
  HypothesisLog log;
};

/// When the hypotheses hold, any solution whose cycle lengths s >= 2 are all
/// coprime to e - 1 is the identity.
TrivialityCheck triviality_check(const Perm& alpha, std::int64_t e);

/**
 * alpha = (1 ... a)(a+1 ... a+b) with 2 <= a < b, a not dividing b. If
 * gcd(u, e^u - 1) = 1 for u in {a, b, a+b} the identity is the only solution
 * (OnlyTrivial); otherwise Unknown naming the failing u.
 */
SolutionReport two_cycle_triviality(std::uint64_t a, std::uint64_t b,
                                    std::int64_t e);

// ---------------------------------------------------------------------------
// Centralizer characterization

struct CentralizerCheck {
  bool pass = false;
  bool q_undecided = false;
  std::string failed_clause;
  HypothesisLog log;
};

/// g_1 = 0, distinct cycle lengths pairwise coprime, and for each cycle
/// length a: gcd(a, e^a - 1) = 1 and g_a <= q(e, w) - 1.
CentralizerCheck centralizer_hypotheses(const Perm& alpha, std::int64_t e,
                                        std::uint64_t q_bound = kDefaultQBound);

/// |C(alpha)| = prod over lengths L of L^g_L * g_L!, saturating at UINT64_MAX.
std::uint64_t centralizer_size(const Perm& alpha);

/// Every permutation commuting with alpha: rotations inside each cycle times
/// permutations of equal-length cycles. Throws CapExceeded past `cap`.
std::vector<Perm> centralizer_elements(const Perm& alpha,
                                       std::uint64_t cap = kDefaultCentralizerCap);

/// Under the centralizer hypotheses the solutions are exactly the y in C(alpha)
/// with y^(e-1) = 1. Throws HypothesesFailed, QUndecided or CapExceeded.
SolutionReport centralizer_solutions(const Perm& alpha, std::int64_t e,
                                     std::uint64_t q_bound = kDefaultQBound,
                                     std::uint64_t cap = kDefaultCentralizerCap);

/// If d = gcd(w, e - 1) != 1, y = alpha^(w/d) is a nontrivial solution
/// commuting with alpha and y^d = 1.
std::optional<Witness> centralizer_power_witness(const Perm& alpha,
                                                 std::int64_t e);

// ---------------------------------------------------------------------------
// Pipeline

struct ClassifyOptions {
  std::size_t max_oracle_n = kDefaultMaxOracleDegree;
  std::uint64_t q_bound = kDefaultQBound;
  std::uint64_t centralizer_cap = kDefaultCentralizerCap;
  unsigned workers = 0;
};

/**
 * Runs the routes in a fixed order and returns the first verdict:
 *   1. centralizer characterization (complete set),
 *   2. cyclic alpha completeness (complete set),
 *   3. two-cycle / general triviality (OnlyTrivial when unconditional),
 *   4. exhaustive search when n <= max_oracle_n (complete set),
 *   5. constructed witnesses (cycle-length gcd, then alpha^(w/d)),
 *   6. Unknown.
 * Every tested condition lands in hypotheses_log.
 */
SolutionReport classify(const Perm& alpha, std::int64_t e,
                        const ClassifyOptions& options = {});

}  // namespace permeq

#endif  // PERMEQ_SOLVER_HPP

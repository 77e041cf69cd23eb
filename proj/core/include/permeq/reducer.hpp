#ifndef PERMEQ_REDUCER_HPP
#define PERMEQ_REDUCER_HPP

#include <array>
#include <optional>
#include <string>

#include "permeq/perm.hpp"

namespace permeq {

/// alpha1 * x^r1 * alpha2 * x^r2 * alpha3 * x^r3 = 1, each r in {+1, -1}.
struct CubicEquation {
  Perm alpha1, alpha2, alpha3;
  int r1 = 1, r2 = 1, r3 = 1;

  /// Throws DegreeMismatch or PreconditionFailed on bad exponents.
  void validate() const;

  std::size_t degree() const { return alpha1.degree(); }

  /// The left-hand side evaluated at x.
  Perm evaluate(const Perm& x) const;

  bool is_solved_by(const Perm& x) const { return evaluate(x).is_identity(); }
};

/// The word  left * x^exponent * right  in the unknown x.
struct AffineWord {
  Perm left;
  int exponent = 1;  ///< +1 or -1
  Perm right;
  std::string text;  ///< e.g. "x*a2" over {a1, a2, a3, x, y}

  Perm apply(const Perm& x) const;
};

enum class ReductionCase { Star1, Star2, Star3, Star4 };

std::string to_string(ReductionCase c);

/**
 * alpha * y * beta = y^exponent, where y = forward(x) and x = backward(y).
 *
 *   (r2, r3) = (+1, -1): y = x a2,         alpha = a1^-1,      beta = a2^-1 a3^-1 a2
 *   (r2, r3) = (-1, +1): y = x^-1 a1^-1,   alpha = a2,         beta = a1 a3 a1^-1
 *   (r2, r3) = (-1, -1): y = x a3^-1,      alpha = a1,         beta = a3 a2 a3^-1
 *   (r2, r3) = (+1, +1): y = a3 x,         alpha = a1 a3^-1,   beta = a2 a3^-1,  exponent -2
 */
struct ReducedForm {
  Perm alpha;
  Perm beta;
  int exponent = 2;
  ReductionCase case_tag = ReductionCase::Star1;
  AffineWord forward;   ///< y in terms of x
  AffineWord backward;  ///< x in terms of y

  /// beta == alpha^-1, i.e. y = 1 solves the reduced equation and it is the
  /// power conjugate equation alpha y alpha^-1 = y^exponent.
  bool reducible_to_power_conjugate() const { return beta == alpha.inverse(); }

  bool is_solved_by(const Perm& y) const;
};

/// Rewrites an equation with r1 = -1 as the equation in x^-1 with every
/// exponent negated. The constants are unchanged; x solves the original iff
/// x^-1 solves the result.
CubicEquation normalize(const CubicEquation& eq);

/// Requires r1 = +1 (throws PreconditionFailed otherwise).
ReducedForm reduce(const CubicEquation& eq);

Perm recover_x(const ReducedForm& rf, const Perm& y);

/// Some z with z^2 = sigma, or nullopt when some even length occurs an odd
/// number of times among the cycles of sigma. Odd cycles are powered by
/// (m+1)/2; equal even cycles are paired in order of least point and
/// interleaved.
std::optional<Perm> solve_square_root(const Perm& sigma);

/// Some x with x * a2 * x^-1 = a1^-1, i.e. a solution of a1 x a2 x^-1 = 1.
std::optional<Perm> solve_conjugacy_quadratic(const Perm& a1, const Perm& a2);

/// Some x with a1 x a2 x = 1, via the square root of a1^-1 a2.
std::optional<Perm> solve_square_quadratic(const Perm& a1, const Perm& a2);

}  // namespace permeq

#endif  // PERMEQ_REDUCER_HPP

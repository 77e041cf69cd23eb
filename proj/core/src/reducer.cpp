#include "permeq/reducer.hpp"

#include <algorithm>
#include <map>

#include "permeq/errors.hpp"

namespace permeq {

namespace {

Perm pow_sign(const Perm& x, int r) { return r == 1 ? x : x.inverse(); }

void check_sign(int r, const char* name) {
  if (r != 1 && r != -1)
    throw PreconditionFailed(std::string("exponent ") + name +
                             " must be +1 or -1, got " + std::to_string(r));
}

}  // namespace

void CubicEquation::validate() const {
  if (alpha2.degree() != alpha1.degree())
    throw DegreeMismatch(alpha1.degree(), alpha2.degree());
  if (alpha3.degree() != alpha1.degree())
    throw DegreeMismatch(alpha1.degree(), alpha3.degree());
  check_sign(r1, "r1");
  check_sign(r2, "r2");
  check_sign(r3, "r3");
}

Perm CubicEquation::evaluate(const Perm& x) const {
  return alpha1 * pow_sign(x, r1) * alpha2 * pow_sign(x, r2) * alpha3 *
         pow_sign(x, r3);
}

Perm AffineWord::apply(const Perm& x) const {
  return left * pow_sign(x, exponent) * right;
}

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::Star1:
      return "*1";
    case ReductionCase::Star2:
      return "*2";
    case ReductionCase::Star3:
      return "*3";
    case ReductionCase::Star4:
      return "*4";
  }
  return "?";
}

bool ReducedForm::is_solved_by(const Perm& y) const {
  return alpha * y * beta == power(y, exponent);
}

CubicEquation normalize(const CubicEquation& eq) {
  eq.validate();
  if (eq.r1 == 1)
    return eq;
  CubicEquation out = eq;
  out.r1 = -eq.r1;
  out.r2 = -eq.r2;
  out.r3 = -eq.r3;
  return out;
}

ReducedForm reduce(const CubicEquation& eq) {
  eq.validate();
  if (eq.r1 != 1)
    throw PreconditionFailed("reduce needs r1 = +1; normalize first");

  const std::size_t n = eq.degree();
  const Perm id(n);
  const Perm& a1 = eq.alpha1;
  const Perm& a2 = eq.alpha2;
  const Perm& a3 = eq.alpha3;

  ReducedForm rf;
  if (eq.r2 == 1 && eq.r3 == -1) {
    rf.case_tag = ReductionCase::Star1;
    rf.alpha = a1.inverse();
    rf.beta = a2.inverse() * a3.inverse() * a2;
    rf.exponent = 2;
    rf.forward = {id, 1, a2, "x*a2"};
    rf.backward = {id, 1, a2.inverse(), "y*a2^-1"};
  } else if (eq.r2 == -1 && eq.r3 == 1) {
    rf.case_tag = ReductionCase::Star2;
    rf.alpha = a2;
    rf.beta = a1 * a3 * a1.inverse();
    rf.exponent = 2;
    rf.forward = {id, -1, a1.inverse(), "x^-1*a1^-1"};
    rf.backward = {a1.inverse(), -1, id, "a1^-1*y^-1"};
  } else if (eq.r2 == -1 && eq.r3 == -1) {
    rf.case_tag = ReductionCase::Star3;
    rf.alpha = a1;
    rf.beta = a3 * a2 * a3.inverse();
    rf.exponent = 2;
    rf.forward = {id, 1, a3.inverse(), "x*a3^-1"};
    rf.backward = {id, 1, a3, "y*a3"};
  } else {
    rf.case_tag = ReductionCase::Star4;
    rf.alpha = a1 * a3.inverse();
    rf.beta = a2 * a3.inverse();
    rf.exponent = -2;
    rf.forward = {a3, 1, id, "a3*x"};
    rf.backward = {a3.inverse(), 1, id, "a3^-1*y"};
  }
  return rf;
}

Perm recover_x(const ReducedForm& rf, const Perm& y) {
  if (y.degree() != rf.alpha.degree())
    throw DegreeMismatch(rf.alpha.degree(), y.degree());
  return rf.backward.apply(y);
}

std::optional<Perm> solve_square_root(const Perm& sigma) {
  std::vector<Cycle> roots;
  std::map<std::size_t, std::vector<const Cycle*>> even_by_length;
  const auto cycles = cycle_decomposition(sigma);

  for (const Cycle& c : cycles) {
    const std::size_t m = c.length();
    if (m % 2 == 0) {
      even_by_length[m].push_back(&c);
      continue;
    }
    // sigma restricted to c, raised to (m+1)/2
    Cycle z;
    const std::size_t step = (m + 1) / 2;
    for (std::size_t k = 0; k < m; ++k)
      z.elements.push_back(c.elements[(k * step) % m]);
    roots.push_back(std::move(z));
  }

  for (const auto& [m, group] : even_by_length) {
    if (group.size() % 2 != 0)
      return std::nullopt;
    // cycles arrive sorted by least point already
    for (std::size_t k = 0; k < group.size(); k += 2) {
      Cycle z;
      for (std::size_t j = 0; j < m; ++j) {
        z.elements.push_back(group[k]->elements[j]);
        z.elements.push_back(group[k + 1]->elements[j]);
      }
      roots.push_back(std::move(z));
    }
  }
  return from_cycles(sigma.degree(), roots);
}

std::optional<Perm> solve_conjugacy_quadratic(const Perm& a1, const Perm& a2) {
  return conjugator_between(a2, a1.inverse());
}

std::optional<Perm> solve_square_quadratic(const Perm& a1, const Perm& a2) {
  // a1 x a2 x = 1  <=>  (x a2)^2 = a1^-1 a2
  auto z = solve_square_root(a1.inverse() * a2);
  if (!z)
    return std::nullopt;
  return *z * a2.inverse();
}

}  // namespace permeq

#ifndef PERMEQ_TESTS_TEST_SUPPORT_HPP
#define PERMEQ_TESTS_TEST_SUPPORT_HPP

// Naive reference implementations. Nothing here calls into the library
// except Perm::from_image and the accessors, so the tests compare the
// library against independent arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "permeq/perm.hpp"

namespace permeq::testing {

inline std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{1});
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_image(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline Perm table(std::vector<Point> img) { return Perm::from_image(std::move(img)); }

inline Perm naive_compose(const Perm& a, const Perm& b) {
  std::vector<Point> img(a.degree());
  for (Point i = 1; i <= a.degree(); ++i)
    img[i - 1] = a(b(i));
  return table(img);
}

inline Perm naive_inverse(const Perm& a) {
  std::vector<Point> img(a.degree());
  for (Point i = 1; i <= a.degree(); ++i)
    img[a(i) - 1] = i;
  return table(img);
}

// Repeated composition, |k| small.
inline Perm naive_power(const Perm& a, long long k) {
  Perm base = k < 0 ? naive_inverse(a) : a;
  Perm acc = Perm(a.degree());
  for (long long i = 0; i < (k < 0 ? -k : k); ++i)
    acc = naive_compose(base, acc);
  return acc;
}

// Order by iterating until the identity comes back.
inline std::uint64_t naive_order(const Perm& a) {
  Perm p = a;
  std::uint64_t k = 1;
  while (!p.is_identity()) {
    p = naive_compose(a, p);
    ++k;
  }
  return k;
}

// y^e with e reduced modulo the order of y found by iteration.
inline Perm naive_power_mod_order(const Perm& y, long long e) {
  const auto w = static_cast<long long>(naive_order(y));
  return naive_power(y, ((e % w) + w) % w);
}

inline bool naive_is_solution(const Perm& alpha, const Perm& y, long long e) {
  Perm lhs = naive_compose(naive_compose(alpha, y), naive_inverse(alpha));
  return lhs == naive_power_mod_order(y, e);
}

inline std::vector<Perm> naive_solutions(const Perm& alpha, long long e) {
  std::vector<Perm> out;
  for (const Perm& y : all_perms(alpha.degree()))
    if (naive_is_solution(alpha, y, e))
      out.push_back(y);
  return out;
}

// Orbit lengths by tracing.
inline std::vector<std::size_t> naive_cycle_lengths(const Perm& a) {
  std::vector<bool> seen(a.degree() + 1, false);
  std::vector<std::size_t> out;
  for (Point i = 1; i <= a.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = a(j)) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// e^k mod m by exact 128-bit power (small |e|, k).
inline std::uint64_t naive_pow_mod(long long e, unsigned k, std::uint64_t m) {
  __int128 v = 1;
  for (unsigned i = 0; i < k; ++i)
    v *= e;
  __int128 r = v % static_cast<__int128>(m);
  if (r < 0)
    r += m;
  return static_cast<std::uint64_t>(r);
}

// Every sum over sub-multisets of the given lengths.
inline std::set<std::size_t> naive_subset_sums(const std::vector<std::size_t>& lengths) {
  std::set<std::size_t> sums;
  const std::size_t k = lengths.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1)
        s += lengths[i];
    sums.insert(s);
  }
  return sums;
}

inline std::vector<std::vector<std::size_t>> partitions(std::size_t n,
                                                        std::size_t max_part) {
  if (n == 0)
    return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t p = std::min(n, max_part); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(std::move(rest));
    }
  return out;
}

inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  return partitions(n, n);
}

// One permutation per partition: consecutive blocks.
inline Perm perm_with_lengths(const std::vector<std::size_t>& lengths) {
  std::size_t n = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  std::vector<Point> img(n);
  Point start = 1;
  for (std::size_t len : lengths) {
    for (std::size_t k = 0; k < len; ++k)
      img[start - 1 + k] = static_cast<Point>(start + (k + 1) % len);
    start += static_cast<Point>(len);
  }
  return table(img);
}

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{1});
  std::shuffle(img.begin(), img.end(), rng);
  return table(img);
}

}  // namespace permeq::testing

#endif  // PERMEQ_TESTS_TEST_SUPPORT_HPP

#ifndef PERMEQ_RANGES_HPP
#define PERMEQ_RANGES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "permeq/perm.hpp"

namespace permeq {

/**
 * The d-range of a permutation: every sum q_d*d + q_2d*2d + ... with
 * 0 <= q_j <= g_j, i.e. the total size of any collection of its cycles whose
 * lengths are multiples of d.
 */
class DRange {
 public:
  DRange(std::size_t d, std::vector<std::size_t> members)
      : d_(d), members_(std::move(members)) {}

  std::size_t d() const noexcept { return d_; }

  /// Sorted ascending; always contains 0.
  const std::vector<std::size_t>& members() const& noexcept { return members_; }
  std::vector<std::size_t> members() && { return std::move(members_); }

  bool contains(long long s) const;

  friend bool operator==(const DRange&, const DRange&) = default;

 private:
  std::size_t d_;
  std::vector<std::size_t> members_;
};

/// Bounded-multiplicity subset-sum over the cycle lengths divisible by d.
/// Requires 1 <= d <= n; throws PreconditionFailed otherwise.
DRange d_range(const CycleType& t, std::size_t d);

inline bool contains(const DRange& dr, long long s) { return dr.contains(s); }

}  // namespace permeq

#endif  // PERMEQ_RANGES_HPP

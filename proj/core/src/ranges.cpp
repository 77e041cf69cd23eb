#include "permeq/ranges.hpp"

#include <algorithm>
#include <string>

#include "permeq/errors.hpp"

namespace permeq {

bool DRange::contains(long long s) const {
  if (s < 0)
    return false;
  return std::binary_search(members_.begin(), members_.end(),
                            static_cast<std::size_t>(s));
}

DRange d_range(const CycleType& t, std::size_t d) {
  const std::size_t n = t.degree();
  if (d < 1 || d > n)
    throw PreconditionFailed("d-range needs 1 <= d <= n, got d = " +
                             std::to_string(d) + ", n = " + std::to_string(n));

  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  // used[s]: copies of the current length spent to first reach s
  std::vector<std::size_t> used(n + 1);
  for (std::size_t j = d; j <= n; j += d) {
    const std::size_t g = t.count(j);
    if (g == 0)
      continue;
    std::fill(used.begin(), used.end(), 0);
    for (std::size_t s = j; s <= n; ++s) {
      if (!reachable[s] && reachable[s - j] && used[s - j] < g) {
        reachable[s] = 1;
        used[s] = used[s - j] + 1;
      }
    }
  }

  std::vector<std::size_t> members;
  for (std::size_t s = 0; s <= n; ++s)
    if (reachable[s])
      members.push_back(s);
  return DRange(d, std::move(members));
}

}  // namespace permeq

#include "permeq/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permeq/errors.hpp"

namespace permeq {

namespace {

void require_same_degree(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
}

std::vector<Point> identity_table(std::size_t n) {
  if (n == 0)
    throw InvalidPermutation("degree must be positive");
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{1});
  return image;
}

}  // namespace

Perm::Perm() : Perm(1) {}

Perm::Perm(std::size_t n) : image_(identity_table(n)) {}

Perm Perm::from_image(std::vector<Point> image) {
  const std::size_t n = image.size();
  if (n == 0)
    throw InvalidPermutation("degree must be positive");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point v = image[i];
    if (v < 1 || v > n)
      throw InvalidPermutation("image of " + std::to_string(i + 1) + " is " +
                               std::to_string(v) + ", outside 1.." +
                               std::to_string(n));
    if (seen[v - 1])
      throw InvalidPermutation("value " + std::to_string(v) +
                               " appears twice in the image table");
    seen[v - 1] = true;
  }
  return Perm(std::move(image), Unchecked{});
}

Perm Perm::standard_cycle(std::size_t n) {
  std::vector<Point> image = identity_table(n);
  std::rotate(image.begin(), image.begin() + 1, image.end());
  return Perm(std::move(image), Unchecked{});
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i + 1)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[image_[i] - 1] = static_cast<Point>(i + 1);
  return Perm(std::move(inv), Unchecked{});
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(
      a.image_.begin(), a.image_.end(), b.image_.begin(), b.image_.end());
}

CycleType::CycleType(std::vector<std::size_t> counts)
    : counts_(std::move(counts)) {
  std::size_t total = 0;
  for (std::size_t j = 1; j <= counts_.size(); ++j)
    total += counts_[j - 1] * j;
  if (total != counts_.size())
    throw InvalidPermutation("cycle type does not sum to its degree");
}

std::vector<std::size_t> CycleType::lengths() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= counts_.size(); ++j)
    if (counts_[j - 1] != 0)
      out.push_back(j);
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  require_same_degree(a, b);
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.image_[b.image_[i] - 1];
  return Perm(std::move(out), Perm::Unchecked{});
}

Perm power(const Perm& a, std::int64_t k) {
  std::vector<Point> out(a.degree());
  for (const Cycle& c : cycle_decomposition(a)) {
    const auto len = static_cast<std::int64_t>(c.length());
    const auto shift = static_cast<std::size_t>(((k % len) + len) % len);
    for (std::size_t j = 0; j < c.length(); ++j)
      out[c.elements[j] - 1] = c.elements[(j + shift) % c.length()];
  }
  return Perm(std::move(out), Perm::Unchecked{});
}

Perm conjugate(const Perm& t, const Perm& p) {
  require_same_degree(t, p);
  // (t p t^-1)(t(i)) = t(p(i))
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[t.image_[i] - 1] = t.image_[p.image_[i] - 1];
  return Perm(std::move(out), Perm::Unchecked{});
}

std::vector<Cycle> cycle_decomposition(const Perm& a) {
  const std::size_t n = a.degree();
  std::vector<bool> seen(n, false);
  std::vector<Cycle> cycles;
  for (Point start = 1; start <= n; ++start) {
    if (seen[start - 1])
      continue;
    Cycle c;
    for (Point x = start; !seen[x - 1]; x = a(x)) {
      seen[x - 1] = true;
      c.elements.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

Perm from_cycles(std::size_t n, std::span<const Cycle> cycles) {
  std::vector<Point> image = identity_table(n);
  std::vector<bool> used(n, false);
  for (const Cycle& c : cycles) {
    for (std::size_t j = 0; j < c.length(); ++j) {
      const Point x = c.elements[j];
      if (x < 1 || x > n)
        throw InvalidPermutation("point " + std::to_string(x) +
                                 " outside 1.." + std::to_string(n));
      if (used[x - 1])
        throw InvalidPermutation("point " + std::to_string(x) +
                                 " appears in more than one cycle");
      used[x - 1] = true;
      image[x - 1] = c.elements[(j + 1) % c.length()];
    }
  }
  return Perm::from_image(std::move(image));
}

CycleType type_of(const Perm& a) {
  std::vector<std::size_t> counts(a.degree(), 0);
  for (const Cycle& c : cycle_decomposition(a))
    ++counts[c.length() - 1];
  return CycleType(std::move(counts));
}

std::uint64_t order_of(const Perm& a) {
  std::uint64_t w = 1;
  for (std::size_t len : type_of(a).lengths()) {
    const std::uint64_t g = std::gcd(w, static_cast<std::uint64_t>(len));
    const std::uint64_t step = len / g;
    if (w > UINT64_MAX / step)
      throw std::overflow_error("permutation order exceeds 64 bits");
    w *= step;
  }
  return w;
}

std::optional<Perm> conjugator_between(const Perm& p1, const Perm& p2) {
  require_same_degree(p1, p2);
  auto by_length_then_min = [](const Cycle& x, const Cycle& y) {
    if (x.length() != y.length())
      return x.length() < y.length();
    return x.first() < y.first();
  };
  auto c1 = cycle_decomposition(p1);
  auto c2 = cycle_decomposition(p2);
  if (c1.size() != c2.size())
    return std::nullopt;
  std::sort(c1.begin(), c1.end(), by_length_then_min);
  std::sort(c2.begin(), c2.end(), by_length_then_min);

  std::vector<Point> tau(p1.degree());
  for (std::size_t k = 0; k < c1.size(); ++k) {
    if (c1[k].length() != c2[k].length())
      return std::nullopt;
    for (std::size_t j = 0; j < c1[k].length(); ++j)
      tau[c1[k].elements[j] - 1] = c2[k].elements[j];
  }
  return Perm::from_image(std::move(tau));
}

Perm restrict(const Perm& a, std::span<const Point> h) {
  std::vector<Point> sorted(h.begin(), h.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty())
    throw InvalidPermutation("cannot restrict to the empty set");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidPermutation("restriction subset has repeated points");
  if (sorted.front() < 1 || sorted.back() > a.degree())
    throw InvalidPermutation("restriction subset leaves 1.." +
                             std::to_string(a.degree()));

  std::vector<Point> label(a.degree(), 0);
  for (std::size_t k = 0; k < sorted.size(); ++k)
    label[sorted[k] - 1] = static_cast<Point>(k + 1);

  std::vector<Point> out(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const Point img = a(sorted[k]);
    if (label[img - 1] == 0)
      throw InvalidPermutation("subset is not invariant: " +
                               std::to_string(sorted[k]) + " maps to " +
                               std::to_string(img));
    out[k] = label[img - 1];
  }
  return Perm::from_image(std::move(out));
}

Perm disjoint_union(std::size_t n, std::span<const Part> parts) {
  std::vector<Point> image(n, 0);
  for (const Part& part : parts) {
    std::vector<Point> sorted = part.points;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != part.perm.degree())
      throw DegreeMismatch(sorted.size(), part.perm.degree());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      const Point x = sorted[k];
      if (x < 1 || x > n || image[x - 1] != 0)
        throw InvalidPermutation("parts do not partition 1.." +
                                 std::to_string(n));
      image[x - 1] = sorted[part.perm(static_cast<Point>(k + 1)) - 1];
    }
  }
  if (std::find(image.begin(), image.end(), Point{0}) != image.end())
    throw InvalidPermutation("parts do not cover 1.." + std::to_string(n));
  return Perm::from_image(std::move(image));
}

bool is_solution(const Perm& alpha, const Perm& y, std::int64_t e) {
  return conjugate(alpha, y) == power(y, e);
}

}  // namespace permeq

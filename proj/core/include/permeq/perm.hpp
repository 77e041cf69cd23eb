#ifndef PERMEQ_PERM_HPP
#define PERMEQ_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace permeq {

/// A point of {1, ..., n}. All public interfaces are one-based.
using Point = std::uint32_t;

/**
 * A bijection of {1, ..., n} stored as an image table.
 *
 * Composition is right-to-left: (a * b)(i) = a(b(i)). Values are immutable
 * once built; every operation returns a fresh permutation.
 */
class Perm {
 public:
  /// Identity of degree 1.
  Perm();

  /// Identity of degree n (n >= 1).
  explicit Perm(std::size_t n);

  /// Builds from a one-based image table; throws InvalidPermutation unless
  /// the table is a bijection of {1..n}.
  static Perm from_image(std::vector<Point> image);

  static Perm identity(std::size_t n) { return Perm(n); }

  /// The n-cycle (1, 2, ..., n).
  static Perm standard_cycle(std::size_t n);

  std::size_t degree() const noexcept { return image_.size(); }

  /// Image of the one-based point i.
  Point operator()(Point i) const noexcept { return image_[i - 1]; }

  /// One-based image table: image()[i - 1] is the image of i.
  std::span<const Point> image() const noexcept { return image_; }

  bool is_identity() const noexcept;

  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;

  /// Lexicographic order on image tables (degree first).
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

 private:
  struct Unchecked {};
  Perm(std::vector<Point> image, Unchecked) : image_(std::move(image)) {}

  std::vector<Point> image_;

  friend Perm compose(const Perm&, const Perm&);
  friend Perm power(const Perm&, std::int64_t);
  friend Perm conjugate(const Perm&, const Perm&);
};

/// A cycle rotated so that its least point comes first.
struct Cycle {
  std::vector<Point> elements;

  std::size_t length() const noexcept { return elements.size(); }
  Point first() const noexcept { return elements.front(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Multiplicities <g_1, ..., g_n> of the cycle lengths of a permutation.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> counts);

  /// Number of cycles of length j; zero for j outside 1..n.
  std::size_t count(std::size_t j) const noexcept {
    return j >= 1 && j <= counts_.size() ? counts_[j - 1] : 0;
  }

  std::size_t degree() const noexcept { return counts_.size(); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

  /// Lengths j with g_j != 0, ascending.
  std::vector<std::size_t> lengths() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::size_t> counts_;
};

/// (a * b)(i) = a(b(i)). Throws DegreeMismatch.
Perm compose(const Perm& a, const Perm& b);

inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

/// a^k for any integer k. Each cycle is shifted by k modulo its own length,
/// so k may be arbitrarily large in magnitude.
Perm power(const Perm& a, std::int64_t k);

/// t * p * t^-1.
Perm conjugate(const Perm& t, const Perm& p);

/// Disjoint cycles covering {1..n} (fixed points included), each starting at
/// its least point, sorted by that point.
std::vector<Cycle> cycle_decomposition(const Perm& a);

/// Inverse of cycle_decomposition. Throws InvalidPermutation if the cycles
/// overlap or contain points outside {1..n}; uncovered points are fixed.
Perm from_cycles(std::size_t n, std::span<const Cycle> cycles);

CycleType type_of(const Perm& a);

/// lcm of the cycle lengths. Throws std::overflow_error past 64 bits.
std::uint64_t order_of(const Perm& a);

/// Some tau with tau * p1 * tau^-1 = p2, or nullopt when the types differ.
/// Cycles of both sides are sorted by (length, least point) and matched
/// pointwise.
std::optional<Perm> conjugator_between(const Perm& p1, const Perm& p2);

/// Restriction of a to the a-invariant subset h, relabeled order-preservingly
/// onto {1..|h|}. Throws InvalidPermutation if a(h) is not h.
Perm restrict(const Perm& a, std::span<const Point> h);

struct Part {
  std::vector<Point> points;  ///< subset of {1..n}
  Perm perm;                  ///< permutation of {1..|points|}
};

/// Glues permutations of the parts back into one permutation of {1..n}.
/// The parts must partition {1..n}.
Perm disjoint_union(std::size_t n, std::span<const Part> parts);

/// alpha * y * alpha^-1 == y^e.
bool is_solution(const Perm& alpha, const Perm& y, std::int64_t e);

}  // namespace permeq

#endif  // PERMEQ_PERM_HPP

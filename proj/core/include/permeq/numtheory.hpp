#ifndef PERMEQ_NUMTHEORY_HPP
#define PERMEQ_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace permeq {

inline constexpr std::uint64_t kDefaultQBound = 1'000'000;

/**
 * q(e, v): the least prime dividing e^v - 1 but not e - 1.
 *
 * Finite carries that prime. Infinite means every prime factor of e^v - 1
 * divides e - 1. AtLeast(b) means no such prime is <= b, so q(e, v) > b.
 */
class QValue {
 public:
  enum class Kind { Finite, Infinite, AtLeast };

  static QValue finite(std::uint64_t p) { return QValue(Kind::Finite, p); }
  static QValue infinite() { return QValue(Kind::Infinite, 0); }
  static QValue at_least(std::uint64_t bound) {
    return QValue(Kind::AtLeast, bound);
  }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  bool is_at_least() const noexcept { return kind_ == Kind::AtLeast; }

  /// The prime (Finite) or the certified lower bound (AtLeast).
  std::uint64_t value() const noexcept { return value_; }

  /// Whether g <= q - 1 is certified. For AtLeast(b) this holds when g <= b.
  bool certifies_at_most_q_minus_one(std::uint64_t g) const noexcept;

  std::string to_string() const;

  friend bool operator==(const QValue&, const QValue&) = default;

 private:
  QValue(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

/// Nonnegative residue of a modulo m (m >= 1).
std::uint64_t mod_floor(std::int64_t a, std::uint64_t m);

/// e^k mod m in [0, m), valid for negative e.
std::uint64_t pow_signed_mod(std::int64_t e, std::uint64_t k, std::uint64_t m);

/// r | e^k - 1, computed without forming e^k.
bool divides_e_pow_minus_one(std::uint64_t r, std::int64_t e, std::uint64_t k);

std::uint64_t gcd(std::int64_t a, std::int64_t b);

/// Throws std::invalid_argument on empty input, std::overflow_error past
/// 64 bits.
std::uint64_t lcm_list(std::span<const std::uint64_t> xs);

/// gcd(u, e^u - 1), via (e^u - 1) mod u.
std::uint64_t gcd_with_e_pow(std::uint64_t u, std::int64_t e);

/// gcd(m, e^k - 1) for m >= 1, via (e^k - 1) mod m.
std::uint64_t gcd_e_pow_minus_one(std::uint64_t m, std::int64_t e,
                                  std::uint64_t k);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> inverse_mod(std::int64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Least prime factor of n >= 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// q(e, v) by trial division over primes up to bound. Throws
/// PreconditionFailed unless v >= 2, bound >= 2 and gcd(v, e - 1) = 1.
QValue q_of(std::int64_t e, std::uint64_t v,
            std::uint64_t bound = kDefaultQBound);

}  // namespace permeq

#endif  // PERMEQ_NUMTHEORY_HPP

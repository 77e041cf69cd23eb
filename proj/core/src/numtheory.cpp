#include "permeq/numtheory.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "permeq/errors.hpp"

namespace permeq {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t k, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (k != 0) {
    if (k & 1)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    k >>= 1;
  }
  return result;
}

std::uint64_t abs_u64(std::int64_t a) {
  return a < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(a)
               : static_cast<std::uint64_t>(a);
}

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// |e^v - 1| when it fits in 127 bits.
std::optional<u128> exact_abs_e_pow_minus_one(std::int64_t e, std::uint64_t v) {
  const u128 limit = static_cast<u128>(1) << 126;
  const std::uint64_t base = abs_u64(e);
  u128 magnitude = 1;
  for (std::uint64_t k = 0; k < v; ++k) {
    if (base != 0 && magnitude > limit / base)
      return std::nullopt;
    magnitude *= base;
  }
  const bool negative = e < 0 && (v % 2 == 1);
  if (negative)
    return magnitude + 1;
  return magnitude == 0 ? u128{1} : magnitude - 1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p])
      continue;
    primes.push_back(p);
    for (std::uint64_t m = p * p; m <= bound; m += p)
      composite[m] = true;
  }
  return primes;
}

}  // namespace

bool QValue::certifies_at_most_q_minus_one(std::uint64_t g) const noexcept {
  switch (kind_) {
    case Kind::Finite:
      return g + 1 <= value_;
    case Kind::Infinite:
      return true;
    case Kind::AtLeast:
      return g <= value_;
  }
  return false;
}

std::string QValue::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(value_);
    case Kind::Infinite:
      return "infinity";
    case Kind::AtLeast:
      return "> " + std::to_string(value_);
  }
  return {};
}

std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
  if (a >= 0)
    return static_cast<std::uint64_t>(a) % m;
  const std::uint64_t r = abs_u64(a) % m;
  return r == 0 ? 0 : m - r;
}

std::uint64_t pow_signed_mod(std::int64_t e, std::uint64_t k, std::uint64_t m) {
  if (m == 0)
    throw std::invalid_argument("modulus must be positive");
  return pow_mod(mod_floor(e, m), k, m);
}

bool divides_e_pow_minus_one(std::uint64_t r, std::int64_t e, std::uint64_t k) {
  if (r == 0)
    throw std::invalid_argument("divisor must be positive");
  return pow_signed_mod(e, k, r) == 1 % r;
}

std::uint64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(abs_u64(a), abs_u64(b));
}

std::uint64_t lcm_list(std::span<const std::uint64_t> xs) {
  if (xs.empty())
    throw std::invalid_argument("lcm of an empty list");
  std::uint64_t acc = 1;
  for (std::uint64_t x : xs) {
    if (x == 0)
      return 0;
    const std::uint64_t step = x / std::gcd(acc, x);
    if (acc > std::numeric_limits<std::uint64_t>::max() / step)
      throw std::overflow_error("lcm exceeds 64 bits");
    acc *= step;
  }
  return acc;
}

std::uint64_t gcd_e_pow_minus_one(std::uint64_t m, std::int64_t e,
                                  std::uint64_t k) {
  if (m == 0)
    throw std::invalid_argument("modulus must be positive");
  const std::uint64_t residue = (pow_signed_mod(e, k, m) + m - 1 % m) % m;
  return std::gcd(m, residue);
}

std::uint64_t gcd_with_e_pow(std::uint64_t u, std::int64_t e) {
  return gcd_e_pow_minus_one(u, e, u);
}

std::optional<std::uint64_t> inverse_mod(std::int64_t a, std::uint64_t m) {
  if (m == 0)
    return std::nullopt;
  if (m == 1)
    return 0;
  // extended Euclid on signed 128-bit values
  __int128 old_r = static_cast<__int128>(mod_floor(a, m)), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0)
    inv += m;
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2)
    throw std::invalid_argument("smallest_prime_factor needs n >= 2");
  if (n % 2 == 0)
    return 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0)
      return d;
  return n;
}

QValue q_of(std::int64_t e, std::uint64_t v, std::uint64_t bound) {
  if (v < 2)
    throw PreconditionFailed("q(e,v) needs v >= 2, got v = " +
                             std::to_string(v));
  if (bound < 2)
    throw PreconditionFailed("q(e,v) needs a trial-division bound >= 2");
  const std::int64_t e_minus_one = e - 1;
  if (gcd(static_cast<std::int64_t>(v), e_minus_one) != 1)
    throw PreconditionFailed(
        "q(e,v) is defined only when gcd(v, e-1) = 1; gcd(" +
        std::to_string(v) + ", " + std::to_string(e_minus_one) + ") = " +
        std::to_string(gcd(static_cast<std::int64_t>(v), e_minus_one)));

  // Fast path: |e^v - 1| is known exactly. Strip the primes of e - 1; the
  // least prime factor of what remains is q(e, v).
  if (auto exact = exact_abs_e_pow_minus_one(e, v)) {
    u128 cofactor = *exact;
    const u128 strip = abs_u64(e_minus_one);
    for (u128 g = gcd_u128(cofactor, strip); g > 1;
         g = gcd_u128(cofactor, strip))
      cofactor /= g;
    if (cofactor == 1)
      return QValue::infinite();

    std::uint64_t d = 2;
    for (; d <= bound && static_cast<u128>(d) * d <= cofactor; ++d)
      if (cofactor % d == 0)
        return QValue::finite(d);
    if (static_cast<u128>(d) * d > cofactor)
      return QValue::finite(static_cast<std::uint64_t>(cofactor));
    if (cofactor <= std::numeric_limits<std::uint64_t>::max() &&
        is_prime(static_cast<std::uint64_t>(cofactor)))
      return QValue::finite(static_cast<std::uint64_t>(cofactor));
    return QValue::at_least(bound);
  }

  for (std::uint64_t p : primes_up_to(bound)) {
    if (divides_e_pow_minus_one(p, e, v) && mod_floor(e_minus_one, p) != 0)
      return QValue::finite(p);
  }
  return QValue::at_least(bound);
}

}  // namespace permeq

#pragma once

/**
 * @file modarith.hpp
 * @brief Exact arithmetic over Z/NZ for moduli up to 2^62.
 *
 * Residues are always stored least non-negative. Products are carried in
 * 128-bit intermediates, so no operation here can overflow.
 *
 * Primality is a deterministic Miller-Rabin test using the seven-base set
 * {2, 325, 9375, 28178, 450775, 9780504, 1795265022} (Sinclair), which is
 * exact for every n < 2^64. Factorization does trial division by odd
 * candidates below kTrialDivisionBound, then Brent's variant of Pollard rho
 * with f(x) = x^2 + c, starting point x0 = 2 and c = 1, 2, 3, ... tried in
 * order until a split is found.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibfield/error.hpp"

namespace fibfield {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;

inline constexpr u64 kMaxModulus = u64{1} << 62;
inline constexpr u64 kTrialDivisionBound = 1 << 12;
/// Largest set that enumeration helpers (power_subgroup and friends) will materialize.
inline constexpr u64 kMaxSetSize = u64{1} << 24;

/// Sorted, duplicate-free list of least non-negative residues.
using ValueSet = std::vector<u64>;

constexpr u64 mul_mod(u64 a, u64 b, u64 n) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}
constexpr u64 add_mod(u64 a, u64 b, u64 n) noexcept {
  const u64 s = a + b;  // a, b < n <= 2^62, cannot wrap
  return s >= n ? s - n : s;
}
constexpr u64 sub_mod(u64 a, u64 b, u64 n) noexcept { return a >= b ? a - b : a + (n - b); }

/// Least non-negative representative of a signed integer.
constexpr u64 reduce_signed(i64 x, u64 n) noexcept {
  const i64 r = x % static_cast<i64>(n);
  return r < 0 ? static_cast<u64>(r + static_cast<i64>(n)) : static_cast<u64>(r);
}

u64 pow_mod(u64 base, u64 exp, u64 n) noexcept;

class Modulus {
 public:
  /// Throws OutOfRange unless 2 <= n <= 2^62.
  explicit Modulus(u64 n);

  u64 value() const noexcept { return n_; }
  bool operator==(const Modulus&) const = default;

 private:
  u64 n_;
};

class Residue {
 public:
  Residue(u64 value, Modulus modulus) : value_(value % modulus.value()), modulus_(modulus) {}
  static Residue from_signed(i64 value, Modulus modulus) {
    return Residue(reduce_signed(value, modulus.value()), modulus);
  }

  u64 value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const { return Residue(sub_mod(0, value_, modulus_.value()), modulus_); }

  bool operator==(const Residue&) const = default;

 private:
  u64 value_;
  Modulus modulus_;
};

struct PrimePower {
  u64 prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// n = product of prime^exponent, primes strictly increasing.
class Factorization {
 public:
  Factorization() = default;
  /// Validates the invariants; throws InternalInvariantViolation on a bad list.
  Factorization(u64 n, std::vector<PrimePower> factors);

  u64 value() const noexcept { return n_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool operator==(const Factorization&) const = default;

 private:
  u64 n_ = 1;
  std::vector<PrimePower> factors_;
};

bool is_prime(u64 n) noexcept;
Factorization factorize(u64 n);

/// Factorization of lcm(a, b); throws OutOfRange if the lcm exceeds 64 bits.
Factorization lcm(const Factorization& a, const Factorization& b);
/// Factorization of a * b; throws OutOfRange on overflow.
Factorization product(const Factorization& a, const Factorization& b);

std::vector<u64> divisors(const Factorization& f);

Residue mod_pow(const Residue& base, u64 exp);
Residue mod_inv(const Residue& a);

/**
 * Standard order algorithm: starting from a known exponent bound, strip each
 * prime factor as long as the element stays trivial.
 *
 * `is_identity_at(t)` must report whether g^t is the identity; the caller is
 * responsible for checking `is_identity_at(bound.value())` beforehand.
 */
template <class IsIdentityAt>
u64 order_by_stripping(const Factorization& bound, IsIdentityAt&& is_identity_at) {
  u64 t = bound.value();
  for (const auto& [prime, exponent] : bound.factors()) {
    for (unsigned i = 0; i < exponent && is_identity_at(t / prime); ++i) t /= prime;
  }
  return t;
}

u64 multiplicative_order(const Residue& a, u64 group_order);
u64 multiplicative_order(const Residue& a, const Factorization& group_order);

/// Euler's criterion. The residue's modulus must be an odd prime (BadPrime otherwise).
int legendre(const Residue& a);

/// Tonelli-Shanks. Returns (r, p - r) with r <= p - r, (0, 0) for a = 0, nullopt for non-residues.
std::optional<std::pair<Residue, Residue>> sqrt_mod(const Residue& a);

/// Least generator of F_p^x.
u64 primitive_root(u64 p);

/// {a^r : a in F_p^x}, which has exactly (p-1)/r elements.
ValueSet power_subgroup(u64 p, u64 r);

}  // namespace fibfield

#include "fibfield/modarith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

namespace fibfield {

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "residues mod " + std::to_string(a.modulus().value()) +
                                                " and mod " + std::to_string(b.modulus().value()));
  }
}

void require_odd_prime(u64 p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not an odd prime");
}

bool checked_mul(u64 a, u64 b, u64& out) { return !__builtin_mul_overflow(a, b, &out); }

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (!checked_mul(r, base, r)) throw Error(ErrorCode::OutOfRange, "factorization value exceeds 64 bits");
  }
  return r;
}

Factorization from_map(const std::map<u64, unsigned>& exps) {
  std::vector<PrimePower> factors;
  u64 n = 1;
  for (const auto& [prime, e] : exps) {
    factors.push_back({prime, e});
    if (!checked_mul(n, checked_pow(prime, e), n)) {
      throw Error(ErrorCode::OutOfRange, "factorization value exceeds 64 bits");
    }
  }
  return Factorization(n, std::move(factors));
}

// Strong probable-prime test to base a; n odd, n > 2.
bool sprp(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 abs_diff(u64 a, u64 b) { return a > b ? a - b : b - a; }

// Brent's cycle-finding variant of Pollard rho. n is odd, composite and has no
// factor below kTrialDivisionBound. Returns a nontrivial divisor.
u64 rho_split(u64 n) {
  constexpr u64 kBatch = 128;
  for (u64 c = 1;; ++c) {
    auto f = [n, c](u64 v) { return static_cast<u64>((static_cast<u128>(mul_mod(v, v, n)) + c) % n); };
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = f(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

u64 pow_mod(u64 base, u64 exp, u64 n) noexcept {
  u64 result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

Modulus::Modulus(u64 n) : n_(n) {
  if (n < 2 || n > kMaxModulus) {
    throw Error(ErrorCode::OutOfRange, "modulus " + std::to_string(n) + " outside [2, 2^62]");
  }
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(add_mod(a.value_, b.value_, a.modulus_.value()), a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(sub_mod(a.value_, b.value_, a.modulus_.value()), a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(mul_mod(a.value_, b.value_, a.modulus_.value()), a.modulus_);
}

Factorization::Factorization(u64 n, std::vector<PrimePower> factors) : n_(n), factors_(std::move(factors)) {
  u64 product = 1;
  u64 last = 1;
  for (const auto& [prime, e] : factors_) {
    if (prime <= last || e == 0 || !is_prime(prime) || !checked_mul(product, checked_pow(prime, e), product)) {
      throw Error(ErrorCode::InternalInvariantViolation, "malformed factorization of " + std::to_string(n));
    }
    last = prime;
  }
  if (product != n_) {
    throw Error(ErrorCode::InternalInvariantViolation, "factors do not multiply to " + std::to_string(n));
  }
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  if (n < 37 * 37) return true;
  static constexpr std::array<u64, 7> kBases = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  return std::all_of(kBases.begin(), kBases.end(), [n](u64 a) { return sprp(n, a); });
}

Factorization factorize(u64 n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "cannot factor 0");
  std::map<u64, unsigned> exps;
  while ((n & 1) == 0) {
    ++exps[2];
    n >>= 1;
  }
  for (u64 d = 3; d < kTrialDivisionBound && d * d <= n; d += 2) {
    while (n % d == 0) {
      ++exps[d];
      n /= d;
    }
  }
  std::vector<u64> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    const u64 m = pending.back();
    pending.pop_back();
    if (m < kTrialDivisionBound * kTrialDivisionBound || is_prime(m)) {
      ++exps[m];
      continue;
    }
    const u64 d = rho_split(m);
    pending.push_back(d);
    pending.push_back(m / d);
  }
  return from_map(exps);
}

Factorization lcm(const Factorization& a, const Factorization& b) {
  std::map<u64, unsigned> exps;
  for (const auto& [prime, e] : a.factors()) exps[prime] = e;
  for (const auto& [prime, e] : b.factors()) exps[prime] = std::max(exps[prime], e);
  return from_map(exps);
}

Factorization product(const Factorization& a, const Factorization& b) {
  std::map<u64, unsigned> exps;
  for (const auto& [prime, e] : a.factors()) exps[prime] += e;
  for (const auto& [prime, e] : b.factors()) exps[prime] += e;
  return from_map(exps);
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out = {1};
  for (const auto& [prime, e] : f.factors()) {
    const std::size_t base_count = out.size();
    u64 power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= prime;
      for (std::size_t j = 0; j < base_count; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Residue mod_pow(const Residue& base, u64 exp) {
  return Residue(pow_mod(base.value(), exp, base.modulus().value()), base.modulus());
}

Residue mod_inv(const Residue& a) {
  const i64 n = static_cast<i64>(a.modulus().value());
  i64 old_r = static_cast<i64>(a.value()), r = n;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorCode::NotInvertible, std::to_string(a.value()) + " mod " + std::to_string(n));
  }
  return Residue::from_signed(old_s, a.modulus());
}

u64 multiplicative_order(const Residue& a, u64 group_order) {
  if (group_order == 0) throw Error(ErrorCode::BadGroupOrder, "group order must be positive");
  return multiplicative_order(a, factorize(group_order));
}

u64 multiplicative_order(const Residue& a, const Factorization& group_order) {
  const u64 n = a.modulus().value();
  if (std::gcd(a.value(), n) != 1) {
    throw Error(ErrorCode::NotInvertible, std::to_string(a.value()) + " mod " + std::to_string(n));
  }
  if (pow_mod(a.value(), group_order.value(), n) != 1) {
    throw Error(ErrorCode::BadGroupOrder, std::to_string(a.value()) + "^" + std::to_string(group_order.value()) +
                                              " != 1 mod " + std::to_string(n));
  }
  return order_by_stripping(group_order, [&](u64 t) { return pow_mod(a.value(), t, n) == 1; });
}

int legendre(const Residue& a) {
  const u64 p = a.modulus().value();
  require_odd_prime(p);
  if (a.is_zero()) return 0;
  return pow_mod(a.value(), (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<std::pair<Residue, Residue>> sqrt_mod(const Residue& a) {
  const Modulus mod = a.modulus();
  const u64 p = mod.value();
  const int symbol = legendre(a);
  if (symbol == 0) return std::pair{Residue(0, mod), Residue(0, mod)};
  if (symbol < 0) return std::nullopt;

  u64 root;
  if (p % 4 == 3) {
    root = pow_mod(a.value(), (p + 1) / 4, p);
  } else {
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a.value(), q, p);
    root = pow_mod(a.value(), (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      for (u64 t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
      u64 b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      root = mul_mod(root, b, p);
    }
  }
  const u64 other = p - root;
  return std::pair{Residue(std::min(root, other), mod), Residue(std::max(root, other), mod)};
}

u64 primitive_root(u64 p) {
  if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const Factorization group = factorize(p - 1);
  for (u64 g = 2;; ++g) {
    const bool generates = std::all_of(group.factors().begin(), group.factors().end(), [&](const PrimePower& pp) {
      return pow_mod(g, (p - 1) / pp.prime, p) != 1;
    });
    if (generates) return g;
  }
}

ValueSet power_subgroup(u64 p, u64 r) {
  if (!is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  if (r == 0 || (p - 1) % r != 0) {
    throw Error(ErrorCode::BadDivisor, std::to_string(r) + " does not divide " + std::to_string(p - 1));
  }
  const u64 size = (p - 1) / r;
  if (size > kMaxSetSize) throw Error(ErrorCode::CapExceeded, "subgroup of order " + std::to_string(size));
  const u64 h = pow_mod(primitive_root(p), r, p);
  ValueSet out;
  out.reserve(size);
  u64 x = 1;
  for (u64 i = 0; i < size; ++i) {
    out.push_back(x);
    x = mul_mod(x, h, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fibfield

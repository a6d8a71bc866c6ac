#pragma once

// Naive reference implementations. Deliberately share no code with the library
// beyond plain integer types, so that agreement means something.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % n); }

inline u64 norm_mod(i64 x, u64 n) {
  const i64 r = x % static_cast<i64>(n);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(n) : r);
}

inline u64 naive_pow(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  for (u64 i = 0; i < e; ++i) r = mulmod(r, a % n, n);
  return r;
}

inline u64 naive_order(u64 a, u64 n) {
  u64 x = a % n;
  for (u64 t = 1;; ++t) {
    if (x == 1) return t;
    x = mulmod(x, a, n);
  }
}

inline bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<u64> naive_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::set<u64> squares_mod(u64 p) {
  std::set<u64> s;
  for (u64 x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

inline std::vector<u64> direct_power_set(u64 p, u64 r) {
  std::set<u64> s;
  for (u64 a = 1; a < p; ++a) s.insert(naive_pow(a, r, p));
  return {s.begin(), s.end()};
}

// Quadratic-ring element c0 + c1 L as the 2x2 matrix c0 I + c1 B, B = (0 1; -Q P).
struct Mat {
  u64 a, b, c, d;
};

inline Mat ring_element_matrix(u64 c0, u64 c1, u64 P, u64 Q, u64 p) {
  const u64 negQ = (p - Q % p) % p;
  return {c0 % p, c1 % p, mulmod(c1, negQ, p), (c0 + mulmod(c1, P, p)) % p};
}

inline Mat mat_product(const Mat& x, const Mat& y, u64 p) {
  return {(mulmod(x.a, y.a, p) + mulmod(x.b, y.c, p)) % p, (mulmod(x.a, y.b, p) + mulmod(x.b, y.d, p)) % p,
          (mulmod(x.c, y.a, p) + mulmod(x.d, y.c, p)) % p, (mulmod(x.c, y.b, p) + mulmod(x.d, y.d, p)) % p};
}

// The matrix of a ring element has first row (c0, c1).
inline std::pair<u64, u64> ring_mul(std::pair<u64, u64> x, std::pair<u64, u64> y, u64 P, u64 Q, u64 p) {
  const Mat m = mat_product(ring_element_matrix(x.first, x.second, P, Q, p),
                            ring_element_matrix(y.first, y.second, P, Q, p), p);
  return {m.a, m.b};
}

inline u64 ring_order(std::pair<u64, u64> x, u64 P, u64 Q, u64 p) {
  auto y = x;
  for (u64 t = 1;; ++t) {
    if (y == std::pair<u64, u64>{1, 0}) return t;
    y = ring_mul(y, x, P, Q, p);
  }
}

inline std::pair<u64, u64> step(std::pair<u64, u64> v, i64 P, i64 Q, u64 n) {
  return {v.second, (mulmod(norm_mod(P, n), v.second, n) + mulmod(norm_mod(-Q, n), v.first, n)) % n};
}

inline u64 walk_period(u64 a1, u64 a2, i64 P, i64 Q, u64 n) {
  std::pair<u64, u64> v{a1, a2};
  for (u64 k = 1;; ++k) {
    v = step(v, P, Q, n);
    if (v == std::pair<u64, u64>{a1, a2}) return k;
  }
}

struct WalkedOrbit {
  u64 period;
  bool star;
  std::vector<u64> values;
};

inline WalkedOrbit walk(u64 a1, u64 a2, i64 P, i64 Q, u64 n) {
  WalkedOrbit w{walk_period(a1, a2, P, Q, n), true, {}};
  std::set<u64> vals;
  std::pair<u64, u64> v{a1, a2};
  for (u64 k = 0; k < w.period; ++k) {
    vals.insert(v.first);
    v = step(v, P, Q, n);
  }
  w.star = !vals.count(0);
  w.values.assign(vals.begin(), vals.end());
  return w;
}

}  // namespace oracle

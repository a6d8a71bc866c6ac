#pragma once

/**
 * @file fibseq.hpp
 * @brief Second-order recurrences a_n = P a_{n-1} - Q a_{n-2} over Z/NZ.
 *
 * The orbit map is the companion matrix B = (0 1; -Q P) acting on consecutive
 * pairs (a_n, a_{n+1}). Sequences are 1-based: a SequenceId carries the seed
 * (a_1, a_2) and the seed terms belong to the value set.
 *
 * Composite moduli are supported for periods and enumeration; gcd(Q, N) != 1
 * makes B singular and is rejected with ErrorCode::SingularMatrix.
 */

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fibfield/modarith.hpp"

namespace fibfield {

/// Upper bound on N for exhaustive pair sweeps (N^2 pairs). Callers may lower it.
inline constexpr u64 kDefaultEnumerationCap = 4096;
/// Longest period that is walked term by term (star flag, value set, iteration oracle).
inline constexpr u64 kMaxIterationLength = u64{1} << 28;

struct RecurrenceParams {
  i64 P = 1;
  i64 Q = -1;

  static constexpr RecurrenceParams fibonacci() noexcept { return {1, -1}; }
  constexpr bool is_fibonacci() const noexcept { return P == 1 && Q == -1; }
  bool operator==(const RecurrenceParams&) const = default;
};

struct Mat2 {
  u64 a, b, c, d;  // (a b; c d), entries reduced
  Modulus modulus;

  static Mat2 identity(Modulus m) { return {1, 0, 0, 1, m}; }
  std::pair<u64, u64> apply(u64 x, u64 y) const noexcept;
  bool operator==(const Mat2&) const = default;
};

Mat2 companion_matrix(const RecurrenceParams& params, Modulus n);
Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_pow(const Mat2& x, u64 e);

/// A known multiple of the order of B: lcm over q^e || N of q^(e-1) * (q-1, q^2-1 or q(q-1)).
Factorization mat_order_bound(const RecurrenceParams& params, Modulus n);
/// Least t >= 1 with B^t = Id (the Pisano period for Fibonacci parameters).
u64 mat_order(const RecurrenceParams& params, Modulus n);

class SequenceId {
 public:
  SequenceId(Modulus n, u64 a1, u64 a2, RecurrenceParams params = RecurrenceParams::fibonacci())
      : modulus_(n), a1_(a1 % n.value()), a2_(a2 % n.value()), params_(params) {}

  Modulus modulus() const noexcept { return modulus_; }
  u64 a1() const noexcept { return a1_; }
  u64 a2() const noexcept { return a2_; }
  const RecurrenceParams& params() const noexcept { return params_; }
  bool is_zero_pair() const noexcept { return a1_ == 0 && a2_ == 0; }

  bool operator==(const SequenceId&) const = default;

 private:
  Modulus modulus_;
  u64 a1_;
  u64 a2_;
  RecurrenceParams params_;
};

struct PeriodReport {
  u64 minimal_period = 1;
  bool nonvanishing = false;
  ValueSet value_set;
  bool operator==(const PeriodReport&) const = default;
};

/// a_1, ..., a_count.
std::vector<u64> generate(const SequenceId& seq, std::size_t count);

/// Least divisor d of mat_order with B^d (a1, a2) = (a1, a2); the zero pair has period 1.
u64 minimal_period(const SequenceId& seq);
/// Same quantity by walking the pair orbit; limited to kMaxIterationLength steps.
u64 minimal_period_by_iteration(const SequenceId& seq);

bool is_star(const SequenceId& seq);
ValueSet value_set(const SequenceId& seq);
PeriodReport period_report(const SequenceId& seq);

struct StarOrbit {
  SequenceId representative;  // lexicographically least pair of the orbit
  PeriodReport report;
};

/// Every nonzero pair sorted into orbits under B.
struct OrbitCensus {
  Modulus modulus;
  RecurrenceParams params;
  u64 orbit_count = 0;
  u64 pairs_visited = 0;
  std::map<u64, u64> length_histogram;  // orbit length -> number of orbits
  std::vector<StarOrbit> star;          // ascending by representative
};

OrbitCensus orbit_census(u64 n, const RecurrenceParams& params, u64 cap = kDefaultEnumerationCap);
std::vector<StarOrbit> enumerate_star(u64 n, const RecurrenceParams& params = RecurrenceParams::fibonacci(),
                                      u64 cap = kDefaultEnumerationCap);

}  // namespace fibfield

#pragma once

/**
 * @file theorem.hpp
 * @brief Eigenvalue data of companion matrices and exhaustive checks of the
 *        value-set / minimal-period / eigenvalue-order equivalence.
 *
 * For a prime p != 2, 5 and m | p-1 the following hold simultaneously or not
 * at all for the Fibonacci recurrence:
 *   (powerset) some zero-free orbit has value set (F_p^x)^((p-1)/m);
 *   (period)   some zero-free orbit has minimal period m;
 *   (order)    p splits and ord(phi) = m or ord(phi') = m.
 * verify_main evaluates all three by brute force for every m. The Lucas and
 * N^+- variants use the same machinery but only report what they find.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fibfield/fibseq.hpp"
#include "fibfield/modarith.hpp"
#include "fibfield/quadext.hpp"

namespace fibfield {

enum class Splitting { Split, Inert };

std::string_view to_string(Splitting s) noexcept;

struct SplitRoots {
  u64 phi;
  u64 phi_prime;
};

struct InertRoots {
  QuadElement phi;
  QuadElement phi_prime;
};

struct EigenData {
  u64 p;
  RecurrenceParams params;
  std::variant<SplitRoots, InertRoots> roots;
  u64 l;        // order of phi
  u64 l_prime;  // order of phi'
  u64 M0;       // min(l, l')
  u64 M1;       // max(l, l')

  Splitting splitting() const noexcept {
    return std::holds_alternative<SplitRoots>(roots) ? Splitting::Split : Splitting::Inert;
  }
};

/// Requires p an odd prime with p !| Q (BadPrime) and p !| D (DegenerateDiscriminant).
Splitting splitting_type(u64 p, const RecurrenceParams& params = RecurrenceParams::fibonacci());

/// Split: phi = (P + r)/2, phi' = (P - r)/2 with r the smaller square root of D.
/// Inert: phi = lambda = (0, 1), phi' = its conjugate.
EigenData eigen_data(u64 p, const RecurrenceParams& params = RecurrenceParams::fibonacci());

struct ConditionTriple {
  bool powerset = false;
  bool period = false;
  bool order = false;

  bool uniform() const noexcept { return powerset == period && period == order; }
  bool operator==(const ConditionTriple&) const = default;
};

struct MainEntry {
  u64 m;
  ConditionTriple conditions;
};

struct MainReport {
  u64 p;
  RecurrenceParams params;
  Splitting splitting;
  u64 l;
  u64 l_prime;
  u64 star_orbits;
  std::vector<MainEntry> entries;  // one per divisor of p-1, ascending
  bool consistent;
  bool theorem_proven;  // only the Fibonacci statement is a theorem; other params are exploratory
};

bool cond_order(const EigenData& ed, u64 m);
bool cond_period(u64 p, u64 m, const RecurrenceParams& params = RecurrenceParams::fibonacci(),
                 u64 cap = kDefaultEnumerationCap);
bool cond_powerset(u64 p, u64 m, const RecurrenceParams& params = RecurrenceParams::fibonacci(),
                   u64 cap = kDefaultEnumerationCap);

/// Condition sweep from precomputed pieces; verify_main and verify_lucas are thin wrappers.
MainReport evaluate_conditions(const EigenData& ed, const OrbitCensus& census);

/// Fibonacci only; p in {2, 5} raises SpecialPrime (see special_case_report).
MainReport verify_main(u64 p, u64 cap = kDefaultEnumerationCap);
/// Requires gcd(P*Q, p) = 1 and p !| D.
MainReport verify_lucas(u64 p, const RecurrenceParams& params, u64 cap = kDefaultEnumerationCap);

enum class Verdict { False, True, Inapplicable };

std::string_view to_string(Verdict v) noexcept;

struct ComplementaryEntry {
  u64 m;
  bool period;
  bool order;        // p inert and (l = m or l' = m)
  Verdict powerset;  // literal value-set comparison; Inapplicable if the target leaves F_p
};

struct ComplementaryReport {
  u64 p;
  Splitting splitting;
  u64 l;
  u64 l_prime;
  u64 seed;
  u64 star_orbits;
  std::vector<u64> star_periods;           // distinct, ascending
  std::vector<ComplementaryEntry> entries;  // one per divisor of 2(p+1), ascending
  bool equivalence_23;                      // period <=> order for every m
  std::vector<std::string> notes;
};

/// Reporting checker for the N^+- analogue (m | 2(p+1)). Never asserts anything.
ComplementaryReport verify_complementary(u64 p, u64 cap = kDefaultEnumerationCap, u64 seed = kGeneratorSeed);

/// Star orbits for the two primes excluded from verify_main.
std::vector<StarOrbit> special_case_report(u64 p);

}  // namespace fibfield

#include "fibfield/theorem.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace fibfield;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected fibfield::Error";
  return ErrorCode::InternalInvariantViolation;
}

const RecurrenceParams kFib = RecurrenceParams::fibonacci();

std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 p = lo; p <= hi; ++p)
    if (oracle::trial_prime(p)) out.push_back(p);
  return out;
}

const MainEntry& entry(const MainReport& r, u64 m) {
  auto it = std::find_if(r.entries.begin(), r.entries.end(), [m](const MainEntry& e) { return e.m == m; });
  if (it == r.entries.end()) throw std::logic_error("no entry for m");
  return *it;
}

const ComplementaryEntry& entry(const ComplementaryReport& r, u64 m) {
  auto it = std::find_if(r.entries.begin(), r.entries.end(), [m](const ComplementaryEntry& e) { return e.m == m; });
  if (it == r.entries.end()) throw std::logic_error("no entry for m");
  return *it;
}

// Brute-force triple for one (p, m): value sets and periods from walking every pair.
ConditionTriple oracle_triple(u64 p, u64 m) {
  ConditionTriple t;
  const std::vector<u64> target = oracle::direct_power_set(p, (p - 1) / m);
  for (u64 a = 0; a < p; ++a)
    for (u64 b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      const auto w = oracle::walk(a, b, 1, -1, p);
      if (!w.star) continue;
      t.period |= w.period == m;
      t.powerset |= w.values == target;
    }
  if (oracle::squares_mod(p).count(5)) {
    for (u64 r = 1; r < p; ++r)
      if ((r * r + p - r + p - 1) % p == 0) t.order |= oracle::naive_order(r, p) == m;
  }
  return t;
}

}  // namespace

TEST(SplittingType, Examples) {
  EXPECT_EQ(splitting_type(11), Splitting::Split);
  EXPECT_EQ(splitting_type(7), Splitting::Inert);
  EXPECT_EQ(splitting_type(19), Splitting::Split);
  EXPECT_EQ(splitting_type(7, {3, 1}), Splitting::Inert);
  EXPECT_EQ(splitting_type(11, {4, 1}), Splitting::Split);
  EXPECT_EQ(to_string(Splitting::Split), "split");
}

TEST(SplittingType, MatchesResidueClassModFive) {
  for (u64 p : primes_between(3, 3000)) {
    if (p == 5) continue;
    const bool split = p % 5 == 1 || p % 5 == 4;
    ASSERT_EQ(splitting_type(p) == Splitting::Split, split) << p;
  }
}

TEST(SplittingType, Errors) {
  EXPECT_EQ(code_of([] { splitting_type(5); }), ErrorCode::DegenerateDiscriminant);
  EXPECT_EQ(code_of([] { splitting_type(2); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { splitting_type(9); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { splitting_type(3, {1, 3}); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { splitting_type(7, {2, 1}); }), ErrorCode::DegenerateDiscriminant);
}

TEST(EigenData, Examples) {
  const EigenData e11 = eigen_data(11);
  ASSERT_EQ(e11.splitting(), Splitting::Split);
  const auto roots = std::get<SplitRoots>(e11.roots);
  EXPECT_EQ(roots.phi, 8u);
  EXPECT_EQ(roots.phi_prime, 4u);
  EXPECT_EQ(e11.l, 10u);
  EXPECT_EQ(e11.l_prime, 5u);
  EXPECT_EQ(e11.M0, 5u);
  EXPECT_EQ(e11.M1, 10u);

  const EigenData e7 = eigen_data(7);
  ASSERT_EQ(e7.splitting(), Splitting::Inert);
  EXPECT_EQ(e7.l, 16u);
  EXPECT_EQ(e7.l_prime, 16u);
  EXPECT_EQ(e7.M0, 16u);
  EXPECT_EQ(e7.M1, 16u);

  const EigenData e3 = eigen_data(3);
  EXPECT_EQ(e3.l, 8u);
  EXPECT_EQ(e3.l_prime, 8u);
}

TEST(EigenData, Invariants) {
  for (u64 p : primes_between(3, 600)) {
    if (p == 5) continue;
    const EigenData ed = eigen_data(p);
    if (const auto* s = std::get_if<SplitRoots>(&ed.roots)) {
      ASSERT_EQ(s->phi * s->phi_prime % p, p - 1);
      ASSERT_EQ((s->phi + s->phi_prime) % p, 1u);
      ASSERT_EQ(ed.l, oracle::naive_order(s->phi, p));
      ASSERT_EQ(ed.l_prime, oracle::naive_order(s->phi_prime, p));
    } else {
      const auto& q = std::get<InertRoots>(ed.roots);
      ASSERT_EQ(q_mul(q.phi, q.phi_prime), QuadElement(p - 1, 0, q.phi.context()));
      ASSERT_EQ(ed.l, ed.l_prime);
    }
    ASSERT_EQ((2 * ed.l) % ed.l_prime, 0u);
    ASSERT_EQ((2 * ed.l_prime) % ed.l, 0u);
    ASSERT_TRUE(ed.M1 == ed.M0 || ed.M1 == 2 * ed.M0);
    ASSERT_EQ(ed.M1, mat_order(kFib, Modulus(p))) << p;
  }
}

TEST(EigenData, LucasParameters) {
  const EigenData ed = eigen_data(11, {4, 1});
  const auto roots = std::get<SplitRoots>(ed.roots);
  EXPECT_EQ(roots.phi * roots.phi_prime % 11, 1u);
  EXPECT_EQ((roots.phi + roots.phi_prime) % 11, 4u);
}

TEST(CondOrder, Examples) {
  const EigenData e11 = eigen_data(11);
  EXPECT_TRUE(cond_order(e11, 5));
  EXPECT_TRUE(cond_order(e11, 10));
  EXPECT_FALSE(cond_order(e11, 2));
  const EigenData e7 = eigen_data(7);
  for (u64 m : {1u, 2u, 3u, 6u, 16u}) EXPECT_FALSE(cond_order(e7, m));
}

TEST(CondPeriod, Examples) {
  EXPECT_TRUE(cond_period(11, 5));
  EXPECT_FALSE(cond_period(11, 2));
  EXPECT_FALSE(cond_period(7, 16));
}

TEST(CondPowerset, Examples) {
  EXPECT_TRUE(cond_powerset(11, 5));
  EXPECT_TRUE(cond_powerset(11, 10));
  EXPECT_FALSE(cond_powerset(11, 1));
  EXPECT_FALSE(cond_powerset(11, 2));
  EXPECT_EQ(code_of([] { cond_powerset(11, 3); }), ErrorCode::BadDivisor);
}

TEST(VerifyMain, Examples) {
  const MainReport r11 = verify_main(11);
  EXPECT_TRUE(r11.consistent);
  EXPECT_TRUE(r11.theorem_proven);
  for (u64 m : {5u, 10u}) EXPECT_EQ(entry(r11, m).conditions, (ConditionTriple{true, true, true}));
  for (u64 m : {1u, 2u}) EXPECT_EQ(entry(r11, m).conditions, (ConditionTriple{}));

  const MainReport r7 = verify_main(7);
  EXPECT_TRUE(r7.consistent);
  EXPECT_EQ(r7.star_orbits, 0u);
  for (const auto& e : r7.entries) EXPECT_EQ(e.conditions, ConditionTriple{});

  const MainReport r19 = verify_main(19);
  EXPECT_TRUE(r19.consistent);
  for (const auto& e : r19.entries) {
    const bool expected = e.m == 9 || e.m == 18;
    EXPECT_EQ(e.conditions, (ConditionTriple{expected, expected, expected})) << "m=" << e.m;
  }
}

TEST(VerifyMain, AgreesWithBruteForceTriples) {
  for (u64 p : primes_between(3, 110)) {
    if (p == 5) continue;
    const MainReport r = verify_main(p);
    for (const auto& e : r.entries) ASSERT_EQ(e.conditions, oracle_triple(p, e.m)) << "p=" << p << " m=" << e.m;
  }
}

TEST(VerifyMain, SweepUpTo1000) {
  // Independent brute force finds exactly two non-uniform triples below 1000: a zero-free
  // orbit of period 2(p+1) covers all of F_p^x at p = 13 and p = 17.
  const std::set<std::pair<u64, u64>> known{{13, 12}, {17, 16}};
  for (u64 p : primes_between(3, 1000)) {
    if (p == 5) continue;
    const MainReport r = verify_main(p);
    ASSERT_EQ(r.consistent, p != 13 && p != 17) << p;
    for (const auto& e : r.entries) {
      if (known.count({p, e.m})) {
        ASSERT_EQ(e.conditions, (ConditionTriple{true, false, false}));
      } else {
        ASSERT_TRUE(e.conditions.uniform()) << "p=" << p << " m=" << e.m;
      }
    }
  }
}

TEST(VerifyMain, FullCoverageAtThirteen) {
  // One zero-free orbit mod 13 takes every nonzero value.
  const auto w = oracle::walk(2, 1, 1, -1, 13);
  EXPECT_TRUE(w.star);
  EXPECT_EQ(w.period, 28u);
  EXPECT_EQ(w.values.size(), 12u);
  EXPECT_TRUE(cond_powerset(13, 12));
  EXPECT_FALSE(cond_period(13, 12));
}

TEST(VerifyMain, Errors) {
  EXPECT_EQ(code_of([] { verify_main(5); }), ErrorCode::SpecialPrime);
  EXPECT_EQ(code_of([] { verify_main(2); }), ErrorCode::SpecialPrime);
  EXPECT_EQ(code_of([] { verify_main(15); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { verify_main(101, 100); }), ErrorCode::CapExceeded);
}

TEST(VerifyLucas, Examples) {
  const MainReport r7 = verify_lucas(7, {3, 1});
  EXPECT_EQ(r7.splitting, Splitting::Inert);
  EXPECT_FALSE(r7.theorem_proven);
  for (const auto& e : r7.entries) EXPECT_FALSE(e.conditions.order);

  const MainReport r11 = verify_lucas(11, {4, 1});
  EXPECT_EQ(r11.splitting, Splitting::Split);
  const EigenData ed = eigen_data(11, {4, 1});
  const u64 lambda = std::get<SplitRoots>(ed.roots).phi;
  const PeriodReport rep = period_report(SequenceId(Modulus(11), 1, lambda, {4, 1}));
  EXPECT_TRUE(rep.nonvanishing);
  EXPECT_EQ(rep.minimal_period, ed.l);
  EXPECT_EQ(rep.value_set, power_subgroup(11, 10 / ed.l));
  EXPECT_TRUE(entry(r11, ed.l).conditions.period);
  EXPECT_TRUE(entry(r11, ed.l).conditions.order);
}

TEST(VerifyLucas, FibonacciParametersMatchVerifyMain) {
  for (u64 p : {7u, 11u, 13u, 29u, 31u}) {
    const MainReport a = verify_main(p), b = verify_lucas(p, kFib);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) ASSERT_EQ(a.entries[i].conditions, b.entries[i].conditions);
  }
}

TEST(VerifyLucas, Errors) {
  EXPECT_EQ(code_of([] { verify_lucas(3, {3, 1}); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { verify_lucas(7, {1, 7}); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { verify_lucas(3, {1, 1}); }), ErrorCode::DegenerateDiscriminant);
}

TEST(VerifyComplementary, Seven) {
  const ComplementaryReport r = verify_complementary(7);
  EXPECT_EQ(r.splitting, Splitting::Inert);
  EXPECT_EQ(r.l, 16u);
  EXPECT_EQ(r.star_orbits, 0u);
  EXPECT_TRUE(entry(r, 16).order);
  EXPECT_FALSE(entry(r, 16).period);
  EXPECT_FALSE(r.equivalence_23);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_EQ(r.entries.size(), oracle::naive_divisors(16).size());
}

TEST(VerifyComplementary, Three) {
  const ComplementaryReport r = verify_complementary(3);
  EXPECT_EQ(r.l, 8u);
  EXPECT_EQ(r.l_prime, 8u);
  EXPECT_EQ(r.star_orbits, 0u);
  EXPECT_FALSE(r.equivalence_23);
}

TEST(VerifyComplementary, FortySeven) {
  const ComplementaryReport r = verify_complementary(47);
  EXPECT_EQ(r.star_orbits, 46u);
  EXPECT_EQ(r.star_periods, (std::vector<u64>{32}));
  EXPECT_TRUE(entry(r, 32).period);
  EXPECT_TRUE(entry(r, 32).order);
  EXPECT_TRUE(r.equivalence_23);
}

TEST(VerifyComplementary, MatchesOracleDisagreementSet) {
  // Oracle: equivalence fails exactly where no zero-free orbit exists, for p <= 200.
  const std::set<u64> expected_false{3, 7, 23, 43, 67, 83, 103, 127, 163, 167};
  for (u64 p : primes_between(3, 200)) {
    if (p == 5) continue;
    const ComplementaryReport r = verify_complementary(p);
    if (r.splitting == Splitting::Split) {
      EXPECT_FALSE(r.notes.empty());
      for (const auto& e : r.entries) EXPECT_EQ(e.powerset, Verdict::Inapplicable);
      continue;
    }
    EXPECT_EQ(r.equivalence_23, !expected_false.count(p)) << p;
  }
}

TEST(VerifyComplementary, DeterministicPerSeed) {
  const ComplementaryReport a = verify_complementary(47), b = verify_complementary(47);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].powerset, b.entries[i].powerset);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(SpecialCaseReport, Examples) {
  EXPECT_TRUE(special_case_report(2).empty());
  const auto five = special_case_report(5);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].representative.a1(), 1u);
  EXPECT_EQ(five[0].representative.a2(), 3u);
  EXPECT_EQ(five[0].report.minimal_period, 4u);
  EXPECT_EQ(five[0].report.value_set, (ValueSet{1, 2, 3, 4}));
  EXPECT_EQ(code_of([] { special_case_report(7); }), ErrorCode::BadPrime);
}

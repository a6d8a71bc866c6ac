#include "fibfield/theorem.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fibfield {

namespace {

void require_odd_prime(u64 p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not an odd prime");
}

void require_not_special(u64 p) {
  if (p == 2 || p == 5) {
    throw Error(ErrorCode::SpecialPrime, std::to_string(p) + " is handled by special_case_report");
  }
}

u64 discriminant_mod(u64 p, const RecurrenceParams& params) {
  const u64 trace = reduce_signed(params.P, p);
  const u64 det = reduce_signed(params.Q, p);
  return sub_mod(mul_mod(trace, trace, p), mul_mod(4 % p, det, p), p);
}

bool has_star_period(const OrbitCensus& census, u64 m) {
  return std::any_of(census.star.begin(), census.star.end(),
                     [m](const StarOrbit& o) { return o.report.minimal_period == m; });
}

bool has_star_value_set(const OrbitCensus& census, const ValueSet& target) {
  return std::any_of(census.star.begin(), census.star.end(),
                     [&](const StarOrbit& o) { return o.report.value_set == target; });
}

}  // namespace

std::string_view to_string(Splitting s) noexcept { return s == Splitting::Split ? "split" : "inert"; }

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

Splitting splitting_type(u64 p, const RecurrenceParams& params) {
  require_odd_prime(p);
  if (reduce_signed(params.Q, p) == 0) throw Error(ErrorCode::BadPrime, "p = " + std::to_string(p) + " divides Q");
  const u64 disc = discriminant_mod(p, params);
  if (disc == 0) throw Error(ErrorCode::DegenerateDiscriminant, "p = " + std::to_string(p) + " divides P^2 - 4Q");
  const Splitting s = legendre(Residue(disc, Modulus(p))) == 1 ? Splitting::Split : Splitting::Inert;
  if (params.is_fibonacci()) {
    const bool by_residue_class = p % 5 == 1 || p % 5 == 4;
    if (by_residue_class != (s == Splitting::Split)) {
      throw Error(ErrorCode::InternalInvariantViolation, "Legendre symbol disagrees with p mod 5");
    }
  }
  return s;
}

EigenData eigen_data(u64 p, const RecurrenceParams& params) {
  const Splitting s = splitting_type(p, params);
  EigenData ed{p, params, SplitRoots{0, 0}, 0, 0, 0, 0};
  if (s == Splitting::Split) {
    const Modulus mod(p);
    const Residue trace = Residue::from_signed(params.P, mod);
    const Residue r = sqrt_mod(Residue(discriminant_mod(p, params), mod))->first;
    const Residue half = mod_inv(Residue(2, mod));
    const Residue phi = (trace + r) * half;
    const Residue phi_prime = (trace - r) * half;
    const Factorization group = factorize(p - 1);
    ed.roots = SplitRoots{phi.value(), phi_prime.value()};
    ed.l = multiplicative_order(phi, group);
    ed.l_prime = multiplicative_order(phi_prime, group);
  } else {
    const QuadContext ctx(p, params.P, params.Q);
    const QuadElement phi = QuadElement::root(ctx);
    const QuadElement phi_prime = conjugate(phi);
    ed.roots = InertRoots{phi, phi_prime};
    ed.l = ext_order(phi);
    ed.l_prime = ext_order(phi_prime);
  }
  ed.M0 = std::min(ed.l, ed.l_prime);
  ed.M1 = std::max(ed.l, ed.l_prime);
  return ed;
}

bool cond_order(const EigenData& ed, u64 m) {
  return ed.splitting() == Splitting::Split && (ed.l == m || ed.l_prime == m);
}

bool cond_period(u64 p, u64 m, const RecurrenceParams& params, u64 cap) {
  require_odd_prime(p);
  return has_star_period(orbit_census(p, params, cap), m);
}

bool cond_powerset(u64 p, u64 m, const RecurrenceParams& params, u64 cap) {
  require_odd_prime(p);
  if (m == 0 || (p - 1) % m != 0) {
    throw Error(ErrorCode::BadDivisor, std::to_string(m) + " does not divide " + std::to_string(p - 1));
  }
  const ValueSet target = power_subgroup(p, (p - 1) / m);
  return has_star_value_set(orbit_census(p, params, cap), target);
}

MainReport evaluate_conditions(const EigenData& ed, const OrbitCensus& census) {
  const u64 p = ed.p;
  MainReport report{p, ed.params, ed.splitting(), ed.l, ed.l_prime, census.star.size(), {}, true,
                    ed.params.is_fibonacci()};
  std::set<u64> star_periods;
  for (const StarOrbit& o : census.star) star_periods.insert(o.report.minimal_period);

  for (u64 m : divisors(factorize(p - 1))) {
    ConditionTriple c;
    c.order = cond_order(ed, m);
    c.period = star_periods.count(m) > 0;
    c.powerset = has_star_value_set(census, power_subgroup(p, (p - 1) / m));
    report.consistent = report.consistent && c.uniform();
    report.entries.push_back({m, c});
  }
  return report;
}

MainReport verify_main(u64 p, u64 cap) {
  require_not_special(p);
  const RecurrenceParams fib = RecurrenceParams::fibonacci();
  const EigenData ed = eigen_data(p, fib);
  return evaluate_conditions(ed, orbit_census(p, fib, cap));
}

MainReport verify_lucas(u64 p, const RecurrenceParams& params, u64 cap) {
  require_odd_prime(p);
  if (reduce_signed(params.P, p) == 0 || reduce_signed(params.Q, p) == 0) {
    throw Error(ErrorCode::BadPrime, "gcd(P*Q, " + std::to_string(p) + ") != 1");
  }
  const EigenData ed = eigen_data(p, params);
  return evaluate_conditions(ed, orbit_census(p, params, cap));
}

ComplementaryReport verify_complementary(u64 p, u64 cap, u64 seed) {
  require_not_special(p);
  const RecurrenceParams fib = RecurrenceParams::fibonacci();
  const EigenData ed = eigen_data(p, fib);
  const OrbitCensus census = orbit_census(p, fib, cap);
  const bool inert = ed.splitting() == Splitting::Inert;

  ComplementaryReport report{p, ed.splitting(), ed.l, ed.l_prime, seed, census.star.size(), {}, {}, true, {}};
  std::set<u64> star_periods;
  for (const StarOrbit& o : census.star) star_periods.insert(o.report.minimal_period);
  report.star_periods.assign(star_periods.begin(), star_periods.end());

  if (!inert) report.notes.push_back("p splits: N^+- is not formed, value-set condition inapplicable");

  const u64 group_order = 2 * (p + 1);
  for (u64 m : divisors(factorize(group_order))) {
    ComplementaryEntry entry{m, star_periods.count(m) > 0, inert && (ed.l == m || ed.l_prime == m),
                             Verdict::Inapplicable};
    if (inert) {
      const auto subgroup = n_pm_power_subgroup(QuadContext::fibonacci(p), group_order / m, seed);
      const bool in_base = std::all_of(subgroup.begin(), subgroup.end(),
                                       [](const QuadElement& x) { return x.in_base_field(); });
      if (in_base) {
        ValueSet target;
        for (const QuadElement& x : subgroup) target.push_back(x.c0());
        std::sort(target.begin(), target.end());
        entry.powerset = has_star_value_set(census, target) ? Verdict::True : Verdict::False;
      }
    }
    if (entry.period != entry.order) {
      report.equivalence_23 = false;
      report.notes.push_back("m=" + std::to_string(m) + ": " +
                             (entry.order ? "order condition holds but no zero-free orbit has this period"
                                          : "zero-free orbit has this period but order condition fails"));
    }
    report.entries.push_back(entry);
  }
  return report;
}

std::vector<StarOrbit> special_case_report(u64 p) {
  if (p != 2 && p != 5) throw Error(ErrorCode::BadPrime, "special cases are p = 2 and p = 5 only");
  return enumerate_star(p, RecurrenceParams::fibonacci());
}

}  // namespace fibfield

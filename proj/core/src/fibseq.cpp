#include "fibfield/fibseq.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fibfield {

namespace {

void require_invertible(const RecurrenceParams& params, Modulus n) {
  if (std::gcd(reduce_signed(params.Q, n.value()), n.value()) != 1) {
    throw Error(ErrorCode::SingularMatrix,
                "gcd(Q = " + std::to_string(params.Q) + ", N = " + std::to_string(n.value()) + ") != 1");
  }
}

void require_cap(u64 n, u64 cap) {
  if (cap > kDefaultEnumerationCap) {
    throw Error(ErrorCode::OutOfRange, "enumeration cap may be lowered, not raised above " +
                                           std::to_string(kDefaultEnumerationCap));
  }
  if (n > cap) throw Error(ErrorCode::CapExceeded, "N = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Exponent bound for B over F_q: q-1 when the characteristic polynomial splits
// with distinct roots, q^2-1 when it is irreducible, q(q-1) for a repeated root.
Factorization local_bound(const RecurrenceParams& params, u64 q) {
  if (q == 2) return factorize(6);
  const u64 trace = reduce_signed(params.P, q);
  const u64 det = reduce_signed(params.Q, q);
  const u64 disc = sub_mod(mul_mod(trace, trace, q), mul_mod(4 % q, det, q), q);
  switch (legendre(Residue(disc, Modulus(q)))) {
    case 0: return product(factorize(q), factorize(q - 1));
    case 1: return factorize(q - 1);
    default: return product(factorize(q - 1), factorize(q + 1));
  }
}

struct Step {
  u64 P, negQ, n;
  std::pair<u64, u64> operator()(u64 x, u64 y) const noexcept {
    return {y, add_mod(mul_mod(P, y, n), mul_mod(negQ, x, n), n)};
  }
};

Step step_for(const RecurrenceParams& params, Modulus n) {
  return {reduce_signed(params.P, n.value()), sub_mod(0, reduce_signed(params.Q, n.value()), n.value()), n.value()};
}

}  // namespace

std::pair<u64, u64> Mat2::apply(u64 x, u64 y) const noexcept {
  const u64 n = modulus.value();
  return {add_mod(mul_mod(a, x, n), mul_mod(b, y, n), n), add_mod(mul_mod(c, x, n), mul_mod(d, y, n), n)};
}

Mat2 companion_matrix(const RecurrenceParams& params, Modulus n) {
  const u64 m = n.value();
  return {0, 1 % m, sub_mod(0, reduce_signed(params.Q, m), m), reduce_signed(params.P, m), n};
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  if (x.modulus != y.modulus) throw Error(ErrorCode::ModulusMismatch, "matrices over different moduli");
  const u64 n = x.modulus.value();
  auto dot = [n](u64 p, u64 q, u64 r, u64 s) { return add_mod(mul_mod(p, q, n), mul_mod(r, s, n), n); };
  return {dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c), dot(x.c, y.b, x.d, y.d),
          x.modulus};
}

Mat2 mat_pow(const Mat2& x, u64 e) {
  Mat2 result = Mat2::identity(x.modulus);
  Mat2 base = x;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return result;
}

Factorization mat_order_bound(const RecurrenceParams& params, Modulus n) {
  require_invertible(params, n);
  Factorization bound;
  const Factorization modulus_factors = factorize(n.value());
  for (const auto& [q, e] : modulus_factors.factors()) {
    Factorization local = local_bound(params, q);
    if (e > 1) {
      // The kernel of reduction mod q has exponent q^(e-1).
      u64 lift = 1;
      for (unsigned i = 1; i < e; ++i) lift *= q;
      local = product(local, Factorization(lift, {{q, e - 1}}));
    }
    bound = lcm(bound, local);
  }
  return bound;
}

u64 mat_order(const RecurrenceParams& params, Modulus n) {
  const Factorization bound = mat_order_bound(params, n);
  const Mat2 b = companion_matrix(params, n);
  const Mat2 id = Mat2::identity(n);
  if (!(mat_pow(b, bound.value()) == id)) {
    throw Error(ErrorCode::InternalInvariantViolation, "B^bound != Id mod " + std::to_string(n.value()));
  }
  return order_by_stripping(bound, [&](u64 t) { return mat_pow(b, t) == id; });
}

std::vector<u64> generate(const SequenceId& seq, std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  const Step step = step_for(seq.params(), seq.modulus());
  u64 x = seq.a1(), y = seq.a2();
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(x);
    std::tie(x, y) = step(x, y);
  }
  return out;
}

u64 minimal_period(const SequenceId& seq) {
  require_invertible(seq.params(), seq.modulus());
  if (seq.is_zero_pair()) return 1;
  const u64 order = mat_order(seq.params(), seq.modulus());
  const Mat2 b = companion_matrix(seq.params(), seq.modulus());
  const std::pair<u64, u64> start{seq.a1(), seq.a2()};
  for (u64 d : divisors(factorize(order))) {
    if (mat_pow(b, d).apply(seq.a1(), seq.a2()) == start) return d;
  }
  throw Error(ErrorCode::InternalInvariantViolation, "B^order does not fix the seed pair");
}

u64 minimal_period_by_iteration(const SequenceId& seq) {
  require_invertible(seq.params(), seq.modulus());
  const Step step = step_for(seq.params(), seq.modulus());
  u64 x = seq.a1(), y = seq.a2();
  for (u64 k = 1; k <= kMaxIterationLength; ++k) {
    std::tie(x, y) = step(x, y);
    if (x == seq.a1() && y == seq.a2()) return k;
  }
  throw Error(ErrorCode::CapExceeded, "period longer than " + std::to_string(kMaxIterationLength));
}

PeriodReport period_report(const SequenceId& seq) {
  PeriodReport report;
  report.minimal_period = minimal_period(seq);
  if (report.minimal_period > kMaxIterationLength) {
    throw Error(ErrorCode::CapExceeded, "period " + std::to_string(report.minimal_period) + " too long to walk");
  }
  report.value_set = generate(seq, report.minimal_period);
  std::sort(report.value_set.begin(), report.value_set.end());
  report.value_set.erase(std::unique(report.value_set.begin(), report.value_set.end()), report.value_set.end());
  report.nonvanishing = report.value_set.front() != 0;
  return report;
}

bool is_star(const SequenceId& seq) { return period_report(seq).nonvanishing; }

ValueSet value_set(const SequenceId& seq) { return period_report(seq).value_set; }

OrbitCensus orbit_census(u64 n, const RecurrenceParams& params, u64 cap) {
  require_cap(n, cap);
  const Modulus mod(n);
  require_invertible(params, mod);
  const Step step = step_for(params, mod);

  OrbitCensus census{mod, params, 0, 0, {}, {}};
  std::vector<std::uint8_t> visited(n * n, 0);
  std::vector<u64> terms;
  for (u64 a = 0; a < n; ++a) {
    for (u64 b = 0; b < n; ++b) {
      if ((a == 0 && b == 0) || visited[a * n + b]) continue;
      // Pairs are scanned in lexicographic order, so (a, b) is the least pair of its orbit.
      terms.clear();
      bool hits_zero = false;
      u64 x = a, y = b;
      do {
        visited[x * n + y] = 1;
        terms.push_back(x);
        hits_zero |= x == 0;
        std::tie(x, y) = step(x, y);
      } while (x != a || y != b);

      ++census.orbit_count;
      census.pairs_visited += terms.size();
      ++census.length_histogram[terms.size()];
      if (hits_zero) continue;

      PeriodReport report;
      report.minimal_period = terms.size();
      report.nonvanishing = true;
      std::sort(terms.begin(), terms.end());
      terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
      report.value_set = terms;
      census.star.push_back({SequenceId(mod, a, b, params), std::move(report)});
    }
  }
  return census;
}

std::vector<StarOrbit> enumerate_star(u64 n, const RecurrenceParams& params, u64 cap) {
  return orbit_census(n, params, cap).star;
}

}  // namespace fibfield

#include "fibfield/quadext.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace fibfield {

namespace {

void require_same_context(const QuadElement& x, const QuadElement& y) {
  if (!(x.context() == y.context())) throw Error(ErrorCode::ContextMismatch, "operands live in different rings");
}

void require_inert(const QuadContext& ctx) {
  if (!ctx.inert()) {
    throw Error(ErrorCode::SplitContext, "p = " + std::to_string(ctx.p()) + ", D = " +
                                             std::to_string(ctx.discriminant()) + " is not a non-residue");
  }
}

bool is_generator(const QuadElement& g, const Factorization& group) {
  const u64 order = group.value();
  return std::all_of(group.factors().begin(), group.factors().end(), [&](const PrimePower& pp) {
    return !(q_pow(g, order / pp.prime) == QuadElement::one(g.context()));
  });
}

}  // namespace

QuadContext::QuadContext(u64 p, i64 trace, i64 norm) : p_(p) {
  if (p == 2 || p >= kMaxQuadPrime || !is_prime(p)) {
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not an odd prime below 2^31");
  }
  trace_ = reduce_signed(trace, p);
  norm_ = reduce_signed(norm, p);
  disc_ = sub_mod(mul_mod(trace_, trace_, p), mul_mod(4 % p, norm_, p), p);
  inert_ = legendre(Residue(disc_, Modulus(p))) == -1;
}

Factorization QuadContext::unit_group_order() const { return product(factorize(p_ - 1), factorize(p_ + 1)); }

QuadElement q_mul(const QuadElement& x, const QuadElement& y) {
  require_same_context(x, y);
  const QuadContext& ctx = x.context();
  const u64 p = ctx.p();
  // (a0 + a1 L)(b0 + b1 L) with L^2 = P L - Q
  const u64 hi = mul_mod(x.c1(), y.c1(), p);
  const u64 c0 = sub_mod(mul_mod(x.c0(), y.c0(), p), mul_mod(ctx.norm(), hi, p), p);
  const u64 cross = add_mod(mul_mod(x.c0(), y.c1(), p), mul_mod(x.c1(), y.c0(), p), p);
  const u64 c1 = add_mod(cross, mul_mod(ctx.trace(), hi, p), p);
  return QuadElement(c0, c1, ctx);
}

QuadElement q_pow(const QuadElement& x, u64 e) {
  QuadElement result = QuadElement::one(x.context());
  QuadElement base = x;
  while (e > 0) {
    if (e & 1) result = q_mul(result, base);
    base = q_mul(base, base);
    e >>= 1;
  }
  return result;
}

QuadElement conjugate(const QuadElement& x) {
  const QuadContext& ctx = x.context();
  const u64 p = ctx.p();
  return QuadElement(add_mod(x.c0(), mul_mod(x.c1(), ctx.trace(), p), p), sub_mod(0, x.c1(), p), ctx);
}

Residue norm(const QuadElement& x) {
  // x * conj(x) = c0^2 + P c0 c1 + Q c1^2, which lies in F_p
  const QuadElement prod = q_mul(x, conjugate(x));
  if (prod.c1() != 0) {
    throw Error(ErrorCode::InternalInvariantViolation, "x * conj(x) has a nonzero lambda component");
  }
  return Residue(prod.c0(), Modulus(x.context().p()));
}

u64 ext_order(const QuadElement& x) {
  require_inert(x.context());
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "0 has no multiplicative order");
  const Factorization group = x.context().unit_group_order();
  const QuadElement one = QuadElement::one(x.context());
  if (!(q_pow(x, group.value()) == one)) {
    throw Error(ErrorCode::InternalInvariantViolation, "x^(p^2-1) != 1 in an inert context");
  }
  return order_by_stripping(group, [&](u64 t) { return q_pow(x, t) == one; });
}

bool n_pm_contains(const QuadElement& x) {
  require_inert(x.context());
  const u64 n = norm(x).value();
  return n == 1 || n == x.context().p() - 1;
}

QuadElement n_pm_generator(const QuadContext& ctx, u64 seed) {
  require_inert(ctx);
  const u64 p = ctx.p();
  const Factorization group = ctx.unit_group_order();
  std::mt19937_64 rng(seed);
  for (;;) {
    const QuadElement g(rng() % p, rng() % p, ctx);
    if (g.is_zero() || !is_generator(g, group)) continue;
    const QuadElement e = q_pow(g, (p - 1) / 2);
    if (ext_order(e) != 2 * (p + 1)) {
      throw Error(ErrorCode::InternalInvariantViolation, "N^+- generator failed order certification");
    }
    return e;
  }
}

std::vector<QuadElement> n_pm_power_subgroup(const QuadContext& ctx, u64 k, u64 seed) {
  require_inert(ctx);
  const u64 group_order = 2 * (ctx.p() + 1);
  if (k == 0 || group_order % k != 0) {
    throw Error(ErrorCode::BadDivisor, std::to_string(k) + " does not divide " + std::to_string(group_order));
  }
  const u64 size = group_order / k;
  if (size > kMaxSetSize) throw Error(ErrorCode::CapExceeded, "subgroup of order " + std::to_string(size));
  const QuadElement h = q_pow(n_pm_generator(ctx, seed), k);
  std::vector<QuadElement> out;
  out.reserve(size);
  QuadElement x = QuadElement::one(ctx);
  for (u64 i = 0; i < size; ++i) {
    out.push_back(x);
    x = q_mul(x, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fibfield

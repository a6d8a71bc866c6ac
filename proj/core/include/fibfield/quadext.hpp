#pragma once

/**
 * @file quadext.hpp
 * @brief The ring F_p[x]/(x^2 - P x + Q) in the basis {1, lambda}.
 *
 * lambda is the class of x, so lambda^2 = P lambda - Q, and the companion
 * root is always the element (0, 1). When the discriminant D = P^2 - 4Q is a
 * non-residue the ring is the field F_{p^2} ("inert" context); otherwise it
 * is split and field-only operations refuse with ErrorCode::SplitContext.
 *
 * Conjugation is the ring automorphism lambda -> P - lambda; in an inert
 * context it coincides with the Frobenius x -> x^p.
 */

#include <cstdint>
#include <vector>

#include "fibfield/modarith.hpp"

namespace fibfield {

inline constexpr u64 kMaxQuadPrime = u64{1} << 31;
inline constexpr u64 kGeneratorSeed = 0x5eedf1b07ac1ULL;

class QuadContext {
 public:
  /// p must be an odd prime below 2^31 (so p^2 - 1 fits comfortably).
  QuadContext(u64 p, i64 trace, i64 norm);
  static QuadContext fibonacci(u64 p) { return QuadContext(p, 1, -1); }

  u64 p() const noexcept { return p_; }
  /// P, reduced mod p.
  u64 trace() const noexcept { return trace_; }
  /// Q, reduced mod p.
  u64 norm() const noexcept { return norm_; }
  u64 discriminant() const noexcept { return disc_; }
  bool inert() const noexcept { return inert_; }

  /// Factorization of p^2 - 1, the order of F_{p^2}^x.
  Factorization unit_group_order() const;

  bool operator==(const QuadContext& other) const noexcept {
    return p_ == other.p_ && trace_ == other.trace_ && norm_ == other.norm_;
  }

 private:
  u64 p_;
  u64 trace_;
  u64 norm_;
  u64 disc_;
  bool inert_;
};

class QuadElement {
 public:
  QuadElement(u64 c0, u64 c1, const QuadContext& ctx) : c0_(c0 % ctx.p()), c1_(c1 % ctx.p()), ctx_(ctx) {}

  static QuadElement one(const QuadContext& ctx) { return QuadElement(1, 0, ctx); }
  static QuadElement root(const QuadContext& ctx) { return QuadElement(0, 1, ctx); }

  u64 c0() const noexcept { return c0_; }
  u64 c1() const noexcept { return c1_; }
  const QuadContext& context() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return c0_ == 0 && c1_ == 0; }
  bool in_base_field() const noexcept { return c1_ == 0; }

  bool operator==(const QuadElement& other) const noexcept {
    return c0_ == other.c0_ && c1_ == other.c1_ && ctx_ == other.ctx_;
  }
  /// Lexicographic on (c0, c1); used for deterministic set ordering.
  bool operator<(const QuadElement& other) const noexcept {
    return c0_ != other.c0_ ? c0_ < other.c0_ : c1_ < other.c1_;
  }

 private:
  u64 c0_;
  u64 c1_;
  QuadContext ctx_;
};

QuadElement q_mul(const QuadElement& x, const QuadElement& y);
QuadElement q_pow(const QuadElement& x, u64 e);
QuadElement conjugate(const QuadElement& x);
Residue norm(const QuadElement& x);

/// Order in F_{p^2}^x; requires an inert context and x != 0.
u64 ext_order(const QuadElement& x);

bool n_pm_contains(const QuadElement& x);

/// An element of exact order 2(p+1), i.e. a generator of N^+- = {x : Nr(x) = +-1}.
QuadElement n_pm_generator(const QuadContext& ctx, u64 seed = kGeneratorSeed);

/// {e^k : e in N^+-}, the cyclic subgroup of order 2(p+1)/k, sorted by (c0, c1).
std::vector<QuadElement> n_pm_power_subgroup(const QuadContext& ctx, u64 k, u64 seed = kGeneratorSeed);

}  // namespace fibfield

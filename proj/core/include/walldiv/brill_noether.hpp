#pragma once

// Pencils on nodal curves in the continuous system {L}: existence, dimensions
// of the Brill-Noether locus, and the class of the rational curves they sweep
// out in S^[k] (resp. K^k(S)).

#include "walldiv/mukai.hpp"

#include <cstdint>
#include <optional>

namespace walldiv {

/// Brill-Noether number rho(p, r, d) = p - (r + 1)(p - d + r).
Integer bn_rho(const Integer& p, const Integer& r, const Integer& d);

/// (p, k, eps) together with the number of nodes delta, 0 <= delta <= p - 2eps.
class BNParams {
 public:
  /// Throws DomainError when delta is outside [0, p - 2eps].
  BNParams(SurfaceContext ctx, std::int64_t delta);
  /// Convenience: BNParams(SurfaceContext(eps, p, k), delta).
  static BNParams make(int epsilon, std::int64_t p, std::int64_t delta, std::int64_t k);

  const SurfaceContext& ctx() const { return ctx_; }
  std::int64_t delta() const { return delta_; }
  Integer nodes() const { return delta_; }
  /// Geometric genus g = p - delta.
  Integer geometric_genus() const { return ctx_.genus() - delta_; }
  /// floor((p - delta - eps) / (2(k - 1 + 2eps))).
  Integer alpha() const;
  /// (2 alpha + 1)(k - 1 + 2eps) - p + delta + eps.
  Integer beta() const;
  /// rho(p, alpha, (k + eps) alpha + delta).
  Integer rho_at_alpha() const;
  /// p - delta + k - 1 + eps, the r_k-coefficient of the curve class (with sign flipped).
  Integer slope() const;

 private:
  SurfaceContext ctx_;
  std::int64_t delta_;
};

/// delta >= alpha (p - delta - eps - (k - 1 + 2eps)(alpha + 1)).
bool exists_pencil(const BNParams& params);

/// rho(p, l, (k + eps) l + delta) + eps l (l + 2) >= 0 for all 0 <= l <= l_max.
/// Default l_max is alpha + 2.
bool exists_pencil_via_rho(const BNParams& params, std::optional<std::int64_t> l_max = std::nullopt);

struct BNDimensions {
  Integer locus_dim;  // min(p - delta, 2(k - 1 + eps))
  Integer g1_dim;     // max(0, 2(k - 1 + eps) - (p - delta))
};
/// Throws DomainError when no pencil exists.
BNDimensions bn_dims(const BNParams& params);

/// R = L - (p - delta + k - 1 + eps) r_k.
CurveClass curve_class(const BNParams& params);
/// D = L - (p - delta + k - 1 + eps) / (2(k - 1 + 2eps)) e_k.
DivisorClass dual_divisor(const BNParams& params);

struct CurveSquare {
  Rational value;        // 2(p - 1) - (p - delta + k - 1 + eps)^2 / (2(k - 1 + 2eps))
  Rational alternate;    // 2(rho + eps alpha(alpha + 2) + eps - 1) - beta^2 / (2(k - 1 + 2eps))
  Integer rho;
  Integer beta;
  Integer alpha;
  /// value == -(k + 3 - 2eps)/2
  bool minimal;
  /// p == alpha(alpha+1)(k-1+2eps) + eps and delta == alpha(alpha-1)(k-1+2eps)
  bool equality_case;
  bool forms_agree;
};
CurveSquare curve_square(const BNParams& params);

/// q(R) < 0; throws DomainError when no pencil exists.
bool is_wall_by_square(const BNParams& params);

}  // namespace walldiv

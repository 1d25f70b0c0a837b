#pragma once

// Wall-divisor test for S^[k] and K^k(S) in Picard rank one.
//
// For a divisor D with q(D) < 0, let T be the saturation of <v, D> inside the
// Mukai lattice. D is a wall divisor iff some s in T satisfies
//   (i)  0 <= q(s) < b(s,v) <= (q(v) + q(s)) / 2, or
//   (ii) eps = 0, q(s) = -2 and 0 <= b(s,v) <= q(v) / 2.
//
// Witnesses are found line by line: on each affine line b(s, v) = n the form
// restricts to a downward-opening quadratic (v^perp is negative definite in a
// hyperbolic T), so each line carries finitely many candidates. Case (i)
// forces 1 <= n < q(v), case (ii) 0 <= n <= q(v)/2.

#include "walldiv/binary_form.hpp"
#include "walldiv/mukai.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace walldiv {

enum class WitnessBranch { case_i, case_ii };
std::string to_string(WitnessBranch b);

struct PrimitiveDual {
  DivisorClass divisor;  // primitive and integral
  Integer divisibility;  // div(divisor) in H^2(X, Z)
  /// input curve class == scale * divisor / divisibility
  Integer scale;
};

/// Primitive integral divisor positively proportional to R under N_1 -> Pic (x) Q.
/// Throws DomainError for R == 0.
PrimitiveDual primitive_dual_divisor(const CurveClass& r, const SurfaceContext& ctx);

/// Rescale a rational divisor class to the primitive integral class on the same ray.
/// Returns the multiplier c with primitive == c * d.
struct ScaledDivisor {
  DivisorClass divisor;
  Rational multiplier;
};
ScaledDivisor primitive_divisor(const DivisorClass& d, const SurfaceContext& ctx);

/// Saturation T of <v, D> inside the rank-3 Mukai model, in the basis (w, v).
struct SaturatedLattice {
  Gram2 gram;                        // [[q(w), b(w,v)], [b(w,v), q(v)]]
  std::array<LatticeVector, 2> basis;  // ambient coordinates of (w, v)
  std::array<Integer, 2> v_coords;   // always (0, 1)
  Integer index;                     // [T : <v, D>]
};

/// Throws DomainError unless q(D) < 0; throws ContractViolation for non-integral D.
SaturatedLattice saturated_T(const DivisorClass& d, const SurfaceContext& ctx);
/// Same construction without the sign check; T may then be definite or degenerate.
SaturatedLattice saturate_with_v(const DivisorClass& d, const SurfaceContext& ctx);

struct WitnessCandidate {
  std::array<Integer, 2> coords;  // in the basis of T
  WitnessBranch branch;
  Integer pairing_with_v;  // b(s, v)
  Integer square;          // q(s)

  friend bool operator==(const WitnessCandidate&, const WitnessCandidate&) = default;
};

/// Orders by (branch, b(s,v), q(s), coords); the first element is the reported witness.
bool witness_less(const WitnessCandidate& x, const WitnessCandidate& y);

/// All s in T satisfying (i), plus all s satisfying (ii) when eps = 0, sorted by witness_less.
/// Throws DomainError unless T has signature (1,1) and q(v) > 0.
std::vector<WitnessCandidate> enumerate_witnesses(const Gram2& t_gram, const std::array<Integer, 2>& v_coords,
                                                  int epsilon);

struct Witness {
  WitnessCandidate in_t;
  MukaiTriple ambient;
};

struct WallVerdict {
  bool is_wall = false;
  /// "wall", "no-witness" or "nonnegative-square"
  std::string status;
  std::optional<Witness> witness;
  std::optional<WitnessBranch> branch;
  std::optional<Gram2> t_gram;
  std::optional<SaturatedLattice> t_lattice;
  DivisorClass primitive_d;
  Integer divisor_div;
  /// input == scale * primitive_d / divisor_div for curve input; for divisor input,
  /// primitive_d == scale * input.
  Rational scale;
  Rational input_square;
};

WallVerdict wall_test(const CurveClass& r, const SurfaceContext& ctx);
WallVerdict wall_test(const DivisorClass& d, const SurfaceContext& ctx);

/// q(R) >= -(k + 3 - 2eps) / 2.
bool mbm_bound_check(const CurveClass& r, const SurfaceContext& ctx);
Rational mbm_bound(const SurfaceContext& ctx);

}  // namespace walldiv

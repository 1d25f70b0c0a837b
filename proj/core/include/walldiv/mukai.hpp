#pragma once

// Picard-rank-one model of the Mukai lattice of a K3 or abelian surface
// (S, L): triples (r, m, s) standing for r*(1,0,0) + m*L + s*(0,0,1). The
// Hilbert scheme S^[k] (or generalised Kummer K^k(S)) has
//
//   H^2 = H^2(S) (+) Z e_k  ~=  v^perp,   v = (1, 0, 1-2eps-k),   e_k -> (1, 0, k-1+2eps),
//
// and Pic = Z L (+) Z e_k, N_1 = Z L (+) Z r_k with r_k = e_k / (2(k-1+2eps)).

#include "walldiv/arith.hpp"
#include "walldiv/lattice.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace walldiv {

enum class SurfaceKind : int { k3 = 0, abelian = 1 };

/// Surface type, genus p of the primitive polarisation (L^2 = 2p-2) and the
/// number of points k.
class SurfaceContext {
 public:
  /// Throws DomainError unless eps in {0,1}, p >= 2 and k >= 2.
  SurfaceContext(int epsilon, std::int64_t p, std::int64_t k);

  int epsilon() const { return epsilon_; }
  SurfaceKind kind() const { return static_cast<SurfaceKind>(epsilon_); }
  std::int64_t p() const { return p_; }
  std::int64_t k() const { return k_; }

  Integer eps() const { return epsilon_; }
  Integer genus() const { return p_; }
  Integer points() const { return k_; }
  /// L^2 = 2p - 2.
  Integer polarization_square() const { return 2 * Integer(p_) - 2; }
  /// k - 1 + 2eps; q(v) = 2 * this, q(e_k) = -2 * this.
  Integer exceptional_index() const { return Integer(k_) - 1 + 2 * Integer(epsilon_); }
  /// 2(k - 1 + 2eps) = div(e_k).
  Integer exceptional_divisibility() const { return 2 * exceptional_index(); }

  friend bool operator==(const SurfaceContext&, const SurfaceContext&) = default;

 private:
  int epsilon_;
  std::int64_t p_;
  std::int64_t k_;
};

/// r*(1,0,0) + m*L + s*(0,0,1) with rational coefficients.
struct MukaiTriple {
  Rational r;
  Rational m;
  Rational s;

  bool is_integral() const;
  /// Throws ContractViolation when a coordinate is not an integer.
  LatticeVector to_lattice_vector() const;
  static MukaiTriple from_lattice_vector(const LatticeVector& v);

  friend bool operator==(const MukaiTriple&, const MukaiTriple&) = default;
};

MukaiTriple operator+(const MukaiTriple& a, const MukaiTriple& b);
MukaiTriple operator-(const MukaiTriple& a, const MukaiTriple& b);
MukaiTriple operator*(const Rational& c, const MukaiTriple& a);
std::string to_string(const MukaiTriple& t);

/// l_coeff * L + e_coeff * e_k in Pic (x) Q.
struct DivisorClass {
  Rational l_coeff;
  Rational e_coeff;

  bool is_integral() const { return walldiv::is_integral(l_coeff) && walldiv::is_integral(e_coeff); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// l_coeff * L + r_coeff * r_k in N_1.
struct CurveClass {
  Integer l_coeff;
  Integer r_coeff;

  bool is_zero() const { return l_coeff == 0 && r_coeff == 0; }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

std::string to_string(const DivisorClass& d);
std::string to_string(const CurveClass& c);

/// Gram matrix of the rank-3 model Z(1,0,0) + ZL + Z(0,0,1).
GramLattice mukai_model_lattice(const SurfaceContext& ctx);

/// m1 m2 (2p-2) - r1 s2 - s1 r2.
Rational mukai_pairing(const MukaiTriple& a, const MukaiTriple& b, const SurfaceContext& ctx);
inline Rational mukai_square(const MukaiTriple& a, const SurfaceContext& ctx) { return mukai_pairing(a, a, ctx); }

/// v = (1, 0, 1 - 2eps - k).
MukaiTriple hilb_vector(const SurfaceContext& ctx);
/// Image of e_k: (1, 0, k - 1 + 2eps).
MukaiTriple ek_vector(const SurfaceContext& ctx);
/// l*(0,1,0) + e*ek_vector(ctx).
MukaiTriple embed_divisor(const DivisorClass& d, const SurfaceContext& ctx);

/// Beauville-Bogomolov square l^2 (2p-2) - 2(k-1+2eps) e^2.
Rational bb_square(const DivisorClass& d, const SurfaceContext& ctx);
Rational bb_pairing(const DivisorClass& x, const DivisorClass& y, const SurfaceContext& ctx);
/// Square of a curve class under the duality embedding N_1 -> Pic (x) Q.
Rational bb_square(const CurveClass& c, const SurfaceContext& ctx);
/// r_k = e_k / (2(k-1+2eps)).
DivisorClass curve_to_divisor(const CurveClass& c, const SurfaceContext& ctx);

/// div(aL + b e_k) in H^2(X, Z) = gcd(a, 2(k-1+2eps) b), using that H^2(S,Z)
/// is unimodular and L is primitive there. Throws DomainError for 0 and
/// ContractViolation for non-integral input.
Integer divisor_divisibility(const DivisorClass& d, const SurfaceContext& ctx);

struct LazarsfeldMukaiVector {
  MukaiTriple vector;  // (2, 1, chi + 2(eps - 1))
  Integer chi;         // p - delta - k + 3 - 5eps
};

/// Mukai vector of the Lazarsfeld-Mukai bundle of a delta-nodal curve in |L|
/// with a pencil of degree k + eps on its normalisation.
LazarsfeldMukaiVector lm_mukai_vector(const SurfaceContext& ctx, std::int64_t delta);

/// 2p - 4chi + 8(1 - eps); throws DomainError("parameters outside moduli regime") when negative.
Integer moduli_dim(const SurfaceContext& ctx, std::int64_t delta);

}  // namespace walldiv

#pragma once

// Dimension bookkeeping for the algebraically coisotropic subvarieties of
// S^[k] / K^k(S) swept out by rational curves: P^r-bundles over a
// (2k-2r)-dimensional holomorphic symplectic base, with r the codimension.
//
//   projbundle      from a delta-nodal curve, chi = p - delta - k + 3 - 5eps,
//                   max(2delta + 2, 4eps) <= chi <= delta + k + 1, r = chi - 2delta - 1
//   severi_family   the same construction pushed from S^[k'] into S^[k]
//   symprod         k' points on one curve plus k - k' free points

#include "walldiv/mukai.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walldiv {

enum class SubvarietySource { thm_projbundle, thm_severi_family, thm_symprod };
std::string to_string(SubvarietySource s);

struct SubvarietyDescriptor {
  SubvarietySource source;
  std::int64_t codim = 0;      // r
  std::int64_t total_dim = 0;  // 2k - r
  std::int64_t fiber_dim = 0;  // r
  std::int64_t base_dim = 0;
  CurveClass line_class;       // class of a line in a fiber
  std::int64_t p = 0;
  std::optional<std::int64_t> delta;
  std::optional<std::int64_t> k_prime;
  std::int64_t k = 0;
  int epsilon = 0;
  Rational q_line;
};

/// chi = p - delta - k + 3 - 5eps.
Integer projbundle_chi(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon);
/// max(2delta + 2, 4eps) <= chi <= delta + k + 1.
bool projbundle_bound(std::int64_t p, std::int64_t delta, std::int64_t k, int epsilon);

/// nullopt unless the bound above holds. Throws DomainError when
/// (p, k, eps) is not a surface context or delta is outside [0, p - 2eps].
std::optional<SubvarietyDescriptor> thm61_descriptor(std::int64_t p, std::int64_t delta, std::int64_t k,
                                                     int epsilon);

struct SeveriFamilyPoint {
  std::int64_t r;
  std::int64_t delta;
  std::int64_t k_prime;  // p - 5eps - 3delta + 2 - r
  SubvarietyDescriptor descriptor;
};
/// Every (r, delta) with
///   1 <= r <= min(2k - 5 - (p - 5eps)/2, (p - 5eps)/2 + 1),
///   p >= 9 if (eps, r) = (1, 1), p >= 11 if (eps, r) = (1, 2),
///   max(0, (p - 5eps + 2 - r - k)/3) <= delta <= (p - 5eps + 2 - 2r)/4, delta > 0 if r <= 2 and eps = 1.
/// Line class L - [2(p - 2delta - 2eps) - r + 1] r_k. Sorted by (r, delta).
std::vector<SeveriFamilyPoint> thm63_enumerate(std::int64_t p, std::int64_t k, int epsilon);

struct SymprodPoint {
  std::int64_t r;
  std::int64_t k_prime;
  SubvarietyDescriptor descriptor;
};
/// 1 <= r <= k - eps, r + eps <= k' <= min(k, p + r - eps); line class
/// L - [2(k' + eps) - r - 1] r_k, base (MRC quotient) of dimension 2(k - r).
/// Sorted by (r, k').
std::vector<SymprodPoint> thm64_enumerate(std::int64_t p, std::int64_t k, int epsilon);

struct LagrangianPlane {
  std::int64_t p;      // 2(k - 1) + 5eps
  std::int64_t delta;  // 0
  SubvarietyDescriptor descriptor;  // r = k, base 0
  Integer chi;
  bool satisfies_projbundle_bound;
  /// dimension of the moduli space M of the Lazarsfeld-Mukai bundles (= 2eps)
  Integer moduli_dim;
  /// q(line) == -(k + 3 - 2eps)/2
  bool line_is_minimal;
};
LagrangianPlane lagrangian_plane_params(std::int64_t k, int epsilon);

}  // namespace walldiv

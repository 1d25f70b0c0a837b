#pragma once

// Isometry of rank-2 integral lattices, i.e. GL2(Z)-equivalence of binary
// quadratic forms with even middle coefficient.
//
// A Gram matrix [[a, b], [b, c]] is the form a x^2 + 2b xy + c y^2. Each
// nondegenerate class gets a canonical representative:
//   definite      Gauss-reduced form, |2b| <= a <= c, b >= 0 (after fixing the sign)
//   indefinite    lexicographically least Gram among the reduced cycles of the
//                 form and of its mirror image
//   zero-divisor  (-det a square) the unique [[0, n], [n, c]] with n > 0, 0 <= c < 2n
// Equal canonical representatives <=> isometric lattices.

#include "walldiv/arith.hpp"
#include "walldiv/lattice.hpp"

#include <array>
#include <optional>
#include <string>

namespace walldiv {

/// Symmetric 2x2 integer matrix [[a, b], [b, c]].
struct Gram2 {
  Integer a;
  Integer b;
  Integer c;

  Integer determinant() const { return a * c - b * b; }
  Matrix to_matrix() const { return Matrix{{a, b}, {b, c}}; }
  static Gram2 from_matrix(const Matrix& m);

  friend bool operator==(const Gram2&, const Gram2&) = default;
  friend bool operator<(const Gram2& x, const Gram2& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

std::string to_string(const Gram2& g);

/// 2x2 integer matrix acting on column coordinate vectors.
struct Transform2 {
  Integer m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  Integer determinant() const { return m00 * m11 - m01 * m10; }
  friend Transform2 operator*(const Transform2& x, const Transform2& y);
  friend bool operator==(const Transform2&, const Transform2&) = default;
};

/// P^T G P.
Gram2 apply(const Gram2& g, const Transform2& p);
/// Inverse of a unimodular transform; throws ContractViolation otherwise.
Transform2 inverse(const Transform2& p);

enum class FormKind { positive_definite, negative_definite, indefinite, zero_divisor };

struct CanonicalForm {
  FormKind kind;
  Gram2 representative;
  /// representative == apply(input, to_representative), det = +-1.
  Transform2 to_representative;
};

/// Throws DomainError for degenerate input.
CanonicalForm canonical_form(const Gram2& g);

/// Stable identifier of the isometry class, e.g. "indef:[[-2,1],[1,2]]".
std::string isometry_class_id(const Gram2& g);

/// A unimodular P with P^T g1 P == g2, if one exists. Throws DomainError on
/// degenerate input.
std::optional<Transform2> find_isometry(const Gram2& g1, const Gram2& g2);

bool rank2_isometric(const Gram2& g1, const Gram2& g2);
bool rank2_isometric(const Matrix& g1, const Matrix& g2);

}  // namespace walldiv

#pragma once

// Integer lattices given by Gram matrices: pairing, Hermite/Smith normal
// forms, saturation and divisibility.

#include "walldiv/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace walldiv {

/// Dense row-major matrix of exact integers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  /// Fraction-free Bareiss elimination; square matrices only.
  Integer determinant() const;
  /// Rank over the rationals.
  std::size_t rank() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Symmetric integral bilinear form on Z^rank.
class GramLattice {
 public:
  /// Throws ContractViolation if gram is not square and symmetric.
  explicit GramLattice(Matrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Integer discriminant() const { return gram_.determinant(); }
  bool nondegenerate() const { return discriminant() != 0; }

 private:
  Matrix gram_;
};

struct LatticeVector {
  std::vector<Integer> coords;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Integer& n, const LatticeVector& a);

struct Sublattice {
  GramLattice ambient;
  std::vector<LatticeVector> basis;

  /// Rows are the basis vectors.
  Matrix basis_matrix() const;
};

/// x^T G y.
Integer inner(const LatticeVector& x, const LatticeVector& y, const GramLattice& g);
inline Integer norm(const LatticeVector& x, const GramLattice& g) { return inner(x, x, g); }

/// U*M = H with U unimodular. H is in row Hermite normal form: nonzero rows
/// first, strictly increasing pivot columns, positive pivots, entries above
/// a pivot reduced into [0, pivot).
struct HermiteForm {
  Matrix h;
  Matrix u;
};
HermiteForm hnf(const Matrix& m);

/// U*M*V = S with U, V unimodular, S diagonal with nonnegative entries
/// d1 | d2 | ... (zeros last). v_inverse is V^{-1}.
struct SmithForm {
  Matrix s;
  Matrix u;
  Matrix v;
  Matrix v_inverse;

  std::vector<Integer> invariants() const;
};
SmithForm snf(const Matrix& m);

/// Basis of {x in ambient : n*x in span(sub.basis) for some n > 0}.
/// Throws ContractViolation for a dependent basis.
Sublattice saturate(const Sublattice& sub);

/// Index of span(sub.basis) in its saturation.
Integer saturation_index(const Sublattice& sub);

/// gcd of the entries of G*x; throws DomainError for x == 0.
Integer divisibility(const LatticeVector& x, const GramLattice& g);

}  // namespace walldiv

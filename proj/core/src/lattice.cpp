#include "walldiv/lattice.hpp"

#include <ostream>
#include <utility>

namespace walldiv {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractViolation("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ContractViolation("Matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Integer Matrix::determinant() const {
  if (rows_ != cols_) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  Matrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t Matrix::rank() const {
  HermiteForm hf = hnf(*this);
  std::size_t r = 0;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < hf.h.cols(); ++j) nonzero = nonzero || hf.h(i, j) != 0;
    if (nonzero) ++r;
  }
  return r;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ContractViolation("Matrix product: dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

GramLattice::GramLattice(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw ContractViolation("Gram matrix must be square and symmetric");
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw ContractViolation("vector sum: dimension mismatch");
  LatticeVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw ContractViolation("vector difference: dimension mismatch");
  LatticeVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

LatticeVector operator*(const Integer& n, const LatticeVector& a) {
  LatticeVector r = a;
  for (auto& c : r.coords) c *= n;
  return r;
}

Matrix Sublattice::basis_matrix() const {
  Matrix m(basis.size(), ambient.rank());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != ambient.rank()) throw ContractViolation("basis vector has wrong length");
    for (std::size_t j = 0; j < ambient.rank(); ++j) m(i, j) = basis[i].coords[j];
  }
  return m;
}

Integer inner(const LatticeVector& x, const LatticeVector& y, const GramLattice& g) {
  const std::size_t n = g.rank();
  if (x.size() != n || y.size() != n) throw ContractViolation("inner: coordinate length differs from lattice rank");
  Integer sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += g.gram()(i, j) * y.coords[j];
    sum += x.coords[i] * row;
  }
  return sum;
}

namespace {

// rows (p, i) <- [[x, y], [-b/g, a/g]] * rows (p, i); determinant 1.
void combine_rows(Matrix& m, std::size_t p, std::size_t i, const Integer& x, const Integer& y,
                  const Integer& c, const Integer& d) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer top = x * m(p, j) + y * m(i, j);
    Integer bottom = c * m(p, j) + d * m(i, j);
    m(p, j) = std::move(top);
    m(i, j) = std::move(bottom);
  }
}

void combine_cols(Matrix& m, std::size_t p, std::size_t j, const Integer& x, const Integer& y,
                  const Integer& c, const Integer& d) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer left = x * m(i, p) + y * m(i, j);
    Integer right = c * m(i, p) + d * m(i, j);
    m(i, p) = std::move(left);
    m(i, j) = std::move(right);
  }
}

void add_row_multiple(Matrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(Matrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(Matrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hnf(const Matrix& m) {
  HermiteForm out{m, Matrix::identity(m.rows())};
  Matrix& h = out.h;
  Matrix& u = out.u;
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    for (std::size_t i = pivot + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      const Integer a = h(pivot, col);
      const Integer b = h(i, col);
      ExtendedGcd eg = extended_gcd(a, b);
      const Integer c = -b / eg.g;
      const Integer d = a / eg.g;
      combine_rows(h, pivot, i, eg.x, eg.y, c, d);
      combine_rows(u, pivot, i, eg.x, eg.y, c, d);
    }
    if (h(pivot, col) == 0) continue;
    if (h(pivot, col) < 0) {
      negate_row(h, pivot);
      negate_row(u, pivot);
    }
    for (std::size_t i = 0; i < pivot; ++i) {
      Integer q = floor_div(h(i, col), h(pivot, col));
      add_row_multiple(h, i, pivot, -q);
      add_row_multiple(u, i, pivot, -q);
    }
    ++pivot;
  }
  return out;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < s.rows() && i < s.cols(); ++i) d.push_back(s(i, i));
  return d;
}

SmithForm snf(const Matrix& m) {
  SmithForm out{m, Matrix::identity(m.rows()), Matrix::identity(m.cols()), Matrix::identity(m.cols())};
  Matrix& s = out.s;
  const std::size_t diag = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j)
        if (s(i, j) != 0 && (!found || abs(s(i, j)) < best)) {
          found = true;
          best = abs(s(i, j));
          pr = i;
          pc = j;
        }
    if (!found) break;
    s.swap_rows(t, pr);
    out.u.swap_rows(t, pr);
    s.swap_cols(t, pc);
    out.v.swap_cols(t, pc);
    out.v_inverse.swap_rows(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        const Integer a = s(t, t);
        const Integer b = s(i, t);
        if (b % a == 0) {
          // plain elimination; extgcd may pick a swap here and cycle
          add_row_multiple(s, i, t, -(b / a));
          add_row_multiple(out.u, i, t, -(b / a));
          continue;
        }
        ExtendedGcd eg = extended_gcd(a, b);
        const Integer c = -b / eg.g;
        const Integer d = a / eg.g;
        combine_rows(s, t, i, eg.x, eg.y, c, d);
        combine_rows(out.u, t, i, eg.x, eg.y, c, d);
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        const Integer a = s(t, t);
        const Integer b = s(t, j);
        if (b % a == 0) {
          add_col_multiple(s, j, t, -(b / a));
          add_col_multiple(out.v, j, t, -(b / a));
          add_row_multiple(out.v_inverse, t, j, b / a);
          continue;
        }
        ExtendedGcd eg = extended_gcd(a, b);
        const Integer ag = a / eg.g;
        const Integer bg = b / eg.g;
        // V <- V*E with E = [[x, -b/g], [y, a/g]] on columns (t, j).
        combine_cols(s, t, j, eg.x, eg.y, -bg, ag);
        combine_cols(out.v, t, j, eg.x, eg.y, -bg, ag);
        // V^{-1} <- E^{-1} V^{-1}, E^{-1} = [[a/g, b/g], [-y, x]].
        combine_rows(out.v_inverse, t, j, ag, bg, -eg.y, eg.x);
        clean = false;
      }
      for (std::size_t i = t + 1; i < s.rows(); ++i) clean = clean && s(i, t) == 0;
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row_multiple(s, t, i, 1);
            add_row_multiple(out.u, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(out.u, t);
    }
  }
  return out;
}

Sublattice saturate(const Sublattice& sub) {
  const Matrix b = sub.basis_matrix();
  const std::size_t r = b.rows();
  if (r == 0) return sub;
  SmithForm sf = snf(b);
  if (sf.s(r - 1, r - 1) == 0) throw ContractViolation("saturate: basis vectors are linearly dependent");
  Sublattice out{sub.ambient, {}};
  for (std::size_t i = 0; i < r; ++i) out.basis.push_back({sf.v_inverse.row(i)});
  return out;
}

Integer saturation_index(const Sublattice& sub) {
  const Matrix b = sub.basis_matrix();
  if (b.rows() == 0) return 1;
  SmithForm sf = snf(b);
  Integer index = 1;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (sf.s(i, i) == 0) throw ContractViolation("saturation_index: basis vectors are linearly dependent");
    index *= sf.s(i, i);
  }
  return index;
}

Integer divisibility(const LatticeVector& x, const GramLattice& g) {
  if (x.size() != g.rank()) throw ContractViolation("divisibility: coordinate length differs from lattice rank");
  if (x.is_zero()) throw DomainError("divisibility of the zero vector is undefined");
  Integer d = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Integer entry = 0;
    for (std::size_t j = 0; j < g.rank(); ++j) entry += g.gram()(i, j) * x.coords[j];
    d = gcd(d, entry);
  }
  if (d == 0) throw DomainError("divisibility: vector lies in the radical of a degenerate form");
  return d;
}

}  // namespace walldiv

#pragma once

#include "braidrep/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace braidrep {

/// Incrementally maintained reduced row echelon basis of a span.
///
/// Every stored row has a leading 1 at its pivot, and every other stored
/// row is zero in that pivot column. After sorting rows by pivot this is
/// the unique reduced echelon form of the span, which is what makes
/// Subspace equality a syntactic check.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// v minus its projection along the stored pivots.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vector& v);

  /// Rows sorted by pivot column.
  std::vector<Vector> canonical_rows() const;

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Subspace of Q^d stored by its canonical basis: the columns of the
/// reduced column echelon matrix (pivot entries equal to 1).
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::span<const Vector> vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool is_zero() const { return vectors_.empty(); }

  /// Canonical basis vectors, ordered by pivot position.
  const std::vector<Vector>& vectors() const { return vectors_; }
  /// The same basis as the columns of an ambient_dim x dim matrix.
  Matrix basis() const;

  bool contains(const Vector& v) const;
  /// True when M maps every basis vector back into the subspace.
  bool is_invariant_under(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> vectors_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace kernel_basis(const Matrix& m);

/// Zassenhaus: row-reduce [[U, U], [V, 0]]; rows with vanishing left half span U ∩ V.
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

/// Throws SingularMatrixError for singular input.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
/// C^{-1} M C.
Matrix conjugate(const Matrix& m, const Matrix& c);

/// Coefficients c_0..c_n of det(xI - M), low degree first (c_n = 1).
std::vector<Rational> characteristic_polynomial(const Matrix& m);

/// Distinct rational roots of c_0 + c_1 x + ... in increasing order.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// Distinct rational eigenvalues of M in increasing order.
std::vector<Rational> rational_eigenvalues(const Matrix& m);

}  // namespace braidrep

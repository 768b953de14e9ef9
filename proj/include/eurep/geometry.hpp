#pragma once

// Exact affine geometry over Q^n.
//
// Elimination always pivots on the first nonzero entry of a column and never
// reorders rows otherwise, so ranks, kernel bases and affine coefficients are
// reproducible bit for bit.

#include "eurep/lottery.hpp"
#include "eurep/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eurep {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in row order.
std::vector<std::size_t> reduce_to_echelon(RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Null space basis. Free columns are taken in ascending order; each basis
/// vector sets its free column to 1 and the other free columns to 0.
std::vector<EmbeddedPoint> kernel_basis(const RationalMatrix& m);

/// Dimension of span{p_k - p_0}. Zero for a single point.
std::size_t affine_rank(std::span<const EmbeddedPoint> points);

/// Coefficients lambda with sum 1 and sum lambda_k * p_k = x, or nullopt when
/// x lies outside aff(points). With dependent directions, coefficients of
/// non-pivot directions are zero.
std::optional<std::vector<Rational>> affine_coefficients(const EmbeddedPoint& x, std::span<const EmbeddedPoint> points);

enum class Side { negative = -1, on = 0, positive = 1 };

/// An affine hyperplane {h : <h - base, normal> = 0}. The normal is a
/// primitive integer vector with its first nonzero entry positive.
struct Hyperplane {
  EmbeddedPoint normal;
  EmbeddedPoint base;

  std::size_t dimension() const { return normal.dimension(); }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

Hyperplane hyperplane_from_points(std::span<const EmbeddedPoint> points);

/// Sign of <q - base, normal>.
Side halfspace_classify(const EmbeddedPoint& q, const Hyperplane& h);

Rational dot(const EmbeddedPoint& a, const EmbeddedPoint& b);
EmbeddedPoint operator-(const EmbeddedPoint& a, const EmbeddedPoint& b);
EmbeddedPoint operator+(const EmbeddedPoint& a, const EmbeddedPoint& b);
EmbeddedPoint operator*(const Rational& s, const EmbeddedPoint& v);

/// Scales v by a positive rational so that it becomes a primitive integer
/// vector, then flips it so the first nonzero entry is positive.
EmbeddedPoint primitive_direction(const EmbeddedPoint& v);

}  // namespace eurep

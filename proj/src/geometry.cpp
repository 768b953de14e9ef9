#include "eurep/geometry.hpp"

#include "eurep/error.hpp"

#include <utility>

namespace eurep {

namespace {

void require_same_dimension(std::span<const EmbeddedPoint> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.dimension() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "expected dimension " + std::to_string(dim) + ", got " +
                                                    std::to_string(p.dimension()));
    }
  }
}

// Rows are the direction vectors p_k - p_0.
RationalMatrix direction_matrix(std::span<const EmbeddedPoint> points) {
  const std::size_t dim = points.front().dimension();
  RationalMatrix m(points.size() - 1, dim);
  for (std::size_t k = 1; k < points.size(); ++k) {
    for (std::size_t j = 0; j < dim; ++j) m(k - 1, j) = points[k][j] - points[0][j];
  }
  return m;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one row");
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::size_t> reduce_to_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(row, c));
    }
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return reduce_to_echelon(work).size();
}

std::vector<EmbeddedPoint> kernel_basis(const RationalMatrix& m) {
  RationalMatrix work = m;
  const auto pivots = reduce_to_echelon(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<EmbeddedPoint> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    EmbeddedPoint v{std::vector<Rational>(m.cols())};
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t affine_rank(std::span<const EmbeddedPoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "affine_rank of an empty point set");
  require_same_dimension(points, points.front().dimension());
  if (points.size() == 1 || points.front().dimension() == 0) return 0;
  return rank(direction_matrix(points));
}

std::optional<std::vector<Rational>> affine_coefficients(const EmbeddedPoint& x, std::span<const EmbeddedPoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "affine_coefficients needs at least one point");
  const std::size_t dim = points.front().dimension();
  require_same_dimension(points, dim);
  if (x.dimension() != dim) throw Error(ErrorCode::DimensionMismatch, "query point dimension differs");

  const std::size_t m = points.size();
  std::vector<Rational> lambda(m);
  if (m == 1) {
    if (x != points[0]) return std::nullopt;
    lambda[0] = 1;
    return lambda;
  }

  // Solve sum_{k>=1} mu_k (p_k - p_0) = x - p_0 on the augmented system.
  RationalMatrix aug(dim, m);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 1; k < m; ++k) aug(j, k - 1) = points[k][j] - points[0][j];
    aug(j, m - 1) = x[j] - points[0][j];
  }
  const auto pivots = reduce_to_echelon(aug);
  if (!pivots.empty() && pivots.back() == m - 1) return std::nullopt;

  Rational rest(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    lambda[pivots[r] + 1] = aug(r, m - 1);
    rest -= aug(r, m - 1);
  }
  lambda[0] = rest;
  return lambda;
}

Hyperplane hyperplane_from_points(std::span<const EmbeddedPoint> points) {
  if (points.empty()) throw Error(ErrorCode::WrongCount, "hyperplane needs n points, got none");
  const std::size_t dim = points.front().dimension();
  require_same_dimension(points, dim);
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "points must have dimension >= 1");
  if (points.size() != dim) {
    throw Error(ErrorCode::WrongCount, "hyperplane in dimension " + std::to_string(dim) + " needs " +
                                           std::to_string(dim) + " points, got " + std::to_string(points.size()));
  }
  if (dim == 1) return Hyperplane{EmbeddedPoint{{Rational(1)}}, points[0]};

  const std::size_t r = affine_rank(points);
  if (r != dim - 1) {
    throw Error(ErrorCode::RankDeficient, "indifferent points have affine rank " + std::to_string(r) + ", need " +
                                              std::to_string(dim - 1));
  }
  const auto kernel = kernel_basis(direction_matrix(points));
  return Hyperplane{primitive_direction(kernel.front()), points[0]};
}

Side halfspace_classify(const EmbeddedPoint& q, const Hyperplane& h) {
  if (q.dimension() != h.dimension()) throw Error(ErrorCode::DimensionMismatch, "point and hyperplane dimensions differ");
  const int s = dot(q - h.base, h.normal).sign();
  return s > 0 ? Side::positive : (s < 0 ? Side::negative : Side::on);
}

Rational dot(const EmbeddedPoint& a, const EmbeddedPoint& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::DimensionMismatch, "dot product of unequal dimensions");
  Rational s;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += a[i] * b[i];
  return s;
}

EmbeddedPoint operator-(const EmbeddedPoint& a, const EmbeddedPoint& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::DimensionMismatch, "difference of unequal dimensions");
  EmbeddedPoint d{a.coords};
  for (std::size_t i = 0; i < d.dimension(); ++i) d[i] -= b[i];
  return d;
}

EmbeddedPoint operator+(const EmbeddedPoint& a, const EmbeddedPoint& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::DimensionMismatch, "sum of unequal dimensions");
  EmbeddedPoint s{a.coords};
  for (std::size_t i = 0; i < s.dimension(); ++i) s[i] += b[i];
  return s;
}

EmbeddedPoint operator*(const Rational& s, const EmbeddedPoint& v) {
  EmbeddedPoint out{v.coords};
  for (auto& c : out.coords) c *= s;
  return out;
}

EmbeddedPoint primitive_direction(const EmbeddedPoint& v) {
  mpz_class den_lcm = 1;
  for (const auto& c : v.coords) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.dimension());
  mpz_class g = 0;
  for (const auto& c : v.coords) {
    ints.push_back(c.numerator() * (den_lcm / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) throw Error(ErrorCode::RankDeficient, "zero vector has no direction");
  int lead = 0;
  for (const auto& x : ints) {
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  }
  EmbeddedPoint out;
  out.coords.reserve(ints.size());
  for (auto& x : ints) out.coords.emplace_back(mpz_class(lead * (x / g)), mpz_class(1));
  return out;
}

}  // namespace eurep

#pragma once

// Lukasiewicz t-norm, its residuum and the max-T_L composition.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace lukfre {

inline constexpr double kDefaultTolerance = 1e-9;

// Values this close outside [0, 1] are treated as representation noise
// and clamped; anything farther out is rejected.
inline constexpr double kUnitClampSlack = 1e-12;

// A membership grade in [0, 1].
class UnitInterval {
 public:
  constexpr UnitInterval() = default;
  // Throws RangeError when value is outside [0, 1] by more than the slack.
  explicit UnitInterval(double value);

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

 private:
  double value_ = 0.0;
};

namespace detail {

constexpr double t_norm(double x, double y) {
  return std::max(x + y - 1.0, 0.0);
}

// Written as b + 1 - a so it reproduces the unit-candidate value
// b_i + 1 - a_ij bit for bit wherever the clamp is inactive.
constexpr double residuum(double a, double b) {
  return std::min(1.0, b + 1.0 - a);
}

}  // namespace detail

inline UnitInterval t_norm(UnitInterval x, UnitInterval y) {
  return UnitInterval(detail::t_norm(x, y));
}

// Largest x with t_norm(a, x) <= b.
inline UnitInterval residuum(UnitInterval a, UnitInterval b) {
  return UnitInterval(detail::residuum(a, b));
}

// Dense row-major matrix of grades.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<std::vector<double>> to_rows() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Row-wise max over j of t_norm(a_ij, x_j). Throws DimensionError when
// x.size() != a.cols().
std::vector<double> compose(const Matrix& a, std::span<const double> x);

// sum_j u_j * v_j, accumulated in ascending j.
double dot(std::span<const double> u, std::span<const double> v);

// u <= v componentwise, allowing v to fall short by at most tol.
bool leq(std::span<const double> u, std::span<const double> v, double tol);

bool all_close(std::span<const double> u, std::span<const double> v,
               double tol);

}  // namespace lukfre

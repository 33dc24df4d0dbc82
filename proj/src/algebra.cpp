#include "lukfre/algebra.hpp"

#include <cmath>
#include <string>

#include "lukfre/errors.hpp"

namespace lukfre {

UnitInterval::UnitInterval(double value) {
  if (!(value >= -kUnitClampSlack && value <= 1.0 + kUnitClampSlack)) {
    throw RangeError("grade " + std::to_string(value) +
                     " lies outside [0, 1]");
  }
  value_ = std::clamp(value, 0.0, 1.0);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  Matrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    std::copy(rows[i].begin(), rows[i].end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return out;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

std::vector<double> compose(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) {
    throw DimensionError("compose: matrix has " + std::to_string(a.cols()) +
                         " columns but vector has " +
                         std::to_string(x.size()) + " entries");
  }
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      best = std::max(best, detail::t_norm(a(i, j), x[j]));
    }
    out[i] = best;
  }
  return out;
}

double dot(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) sum += u[j] * v[j];
  return sum;
}

bool leq(std::span<const double> u, std::span<const double> v, double tol) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > v[j] + tol) return false;
  }
  return true;
}

bool all_close(std::span<const double> u, std::span<const double> v,
               double tol) {
  if (u.size() != v.size()) return false;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (std::abs(u[j] - v[j]) > tol) return false;
  }
  return true;
}

}  // namespace lukfre

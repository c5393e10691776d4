#include "metro/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "metro/errors.hpp"

namespace metro {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: entries length " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw std::invalid_argument("Matrix: non-finite entry");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(const std::vector<double>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(double factor) const {
  Matrix s = *this;
  for (double& v : s.entries_) v *= factor;
  return s;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: dimension mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition eig_symmetric(const Matrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("eig_symmetric: matrix must be square");
  const std::size_t n = s.rows();
  const double scale = std::max(1.0, s.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > 1e-10 * scale)
        throw std::invalid_argument("eig_symmetric: matrix is not symmetric");

  Matrix a = s;
  Matrix v = Matrix::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) < 1e-12) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) < 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        double tau = sn / (1.0 + c);

        double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - sn * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + sn * (arp - tau * arq);
          }
          double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - sn * (vrq + tau * vrp);
          v(r, q) = vrq + sn * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    dec.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) dec.eigenvectors(r, k) = v(r, order[k]);
  }
  return dec;
}

Matrix pseudo_inverse(const Matrix& s) {
  EigenDecomposition dec = eig_symmetric(s);
  const std::size_t n = dec.eigenvalues.size();
  double max_abs_eig = 0.0;
  for (double lambda : dec.eigenvalues) max_abs_eig = std::max(max_abs_eig, std::abs(lambda));
  const double cutoff = 1e-10 * max_abs_eig;

  std::vector<double> inv(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double lambda = dec.eigenvalues[i];
    inv[i] = (std::abs(lambda) <= cutoff) ? 0.0 : 1.0 / lambda;
  }
  const Matrix& v = dec.eigenvectors;
  return matmul(matmul(v, Matrix::diagonal(inv)), v.transposed());
}

Matrix fd_gradient(const std::function<double(const Matrix&)>& f, const Matrix& at, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: step must be positive");
  Matrix grad(at.rows(), at.cols());
  Matrix point = at;
  for (std::size_t i = 0; i < at.rows(); ++i) {
    for (std::size_t j = 0; j < at.cols(); ++j) {
      const double orig = point(i, j);
      point(i, j) = orig + h;
      double fp = f(point);
      point(i, j) = orig - h;
      double fm = f(point);
      point(i, j) = orig;
      if (!std::isfinite(fp) || !std::isfinite(fm))
        throw NumericalError("fd_gradient: function evaluated to a non-finite value");
      grad(i, j) = (fp - fm) / (2.0 * h);
    }
  }
  return grad;
}

}  // namespace metro

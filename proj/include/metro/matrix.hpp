#ifndef METRO_MATRIX_HPP
#define METRO_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace metro {

// Dense row-major matrix of doubles. Metro networks have at most a few
// hundred stations, so everything here is plain dense arithmetic.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}
  // Validates that entries.size() == rows * cols and all entries are finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& d);
  static Matrix column(const std::vector<double>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<double>& entries() const { return entries_; }

  Matrix transposed() const;
  Matrix scaled(double factor) const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<double> entries_;
};

// Standard product. Throws std::invalid_argument on dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

// Eigenvalues ascending, eigenvectors as the corresponding columns.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

// Cyclic Jacobi diagonalization of a symmetric matrix. Sweeps until the
// off-diagonal Frobenius norm drops below 1e-12 or 100 sweeps have run.
// Throws std::invalid_argument for non-square or non-symmetric input
// (symmetry checked to 1e-10 relative to the matrix magnitude).
EigenDecomposition eig_symmetric(const Matrix& s);

// Moore-Penrose pseudo-inverse of a square symmetric matrix via the
// eigendecomposition. Eigenvalues with |lambda| <= 1e-10 * max|lambda| are
// treated as zero and inverted to zero.
Matrix pseudo_inverse(const Matrix& s);

// Central-difference gradient of a scalar function of a matrix, entry by
// entry. Throws NumericalError if f evaluates to a non-finite value.
Matrix fd_gradient(const std::function<double(const Matrix&)>& f, const Matrix& at,
                   double h = 1e-5);

}  // namespace metro

#endif

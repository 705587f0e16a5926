#pragma once

#include "pixcat/rational.hpp"

#include <optional>
#include <vector>

namespace pixcat {

// Dense rational matrix; matrices act on column vectors. All elimination
// uses the first nonzero pivot in column order, so results are bit-exact
// reproducible.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;

  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Mat transposed() const;

  // columns picked out of this matrix, in the given order
  Mat columns(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

struct Rref {
  Mat mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);

// columns form a basis of the kernel (empty matrix when injective)
Mat nullspace(const Mat& m);

// rows form a basis of the left kernel: L * m = 0
Mat left_nullspace(const Mat& m);

// least structured exact solve of a * x = b; nullopt when inconsistent
std::optional<Mat> solve(const Mat& a, const Mat& b);

bool invertible(const Mat& m);
Mat inverse(const Mat& m);

// column space basis of m expanded to a basis of the full space; returns
// the indices of the appended complement columns within the output
struct BasisExtension {
  Mat basis;                          // square invertible
  std::vector<std::size_t> complement;  // positions of the adjoined unit vectors
};
BasisExtension extend_to_basis(const Mat& m);

}  // namespace pixcat

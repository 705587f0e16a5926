#include "pixcat/matrix.hpp"

namespace pixcat {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols_ != y.rows_) throw consistency_error("matrix product shape mismatch");
  Mat out(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rat& v = x.at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw consistency_error("matrix sum shape mismatch");
  Mat out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
  return out;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw consistency_error("matrix diff shape mismatch");
  Mat out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Mat Mat::columns(const std::vector<std::size_t>& idx) const {
  Mat out(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out.at(r, j) = at(r, idx[j]);
  return out;
}

Rref rref(const Mat& m) {
  Rref out;
  out.mat = m;
  Mat& a = out.mat;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
    Rat inv = Rat(1) / a.at(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& m) {
  Rref r = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Mat out(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    out.at(free_cols[j], j) = 1;
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
      out.at(r.pivot_cols[p], j) = -r.mat.at(p, free_cols[j]);
  }
  return out;
}

Mat left_nullspace(const Mat& m) { return nullspace(m.transposed()).transposed(); }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw consistency_error("solve shape mismatch");
  Mat aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
  }
  Rref rr = rref(aug);
  for (auto piv : rr.pivot_cols)
    if (piv >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
    for (std::size_t c = 0; c < b.cols(); ++c) x.at(rr.pivot_cols[p], c) = rr.mat.at(p, a.cols() + c);
  return x;
}

bool invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw consistency_error("inverse of a non-square matrix");
  auto x = solve(m, Mat::identity(m.rows()));
  if (!x || !(m * *x).is_identity()) throw consistency_error("matrix is singular");
  return *x;
}

BasisExtension extend_to_basis(const Mat& m) {
  const std::size_t n = m.rows();
  Mat aug(n, m.cols() + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols() + r) = 1;
  }
  Rref rr = rref(aug);
  BasisExtension out;
  std::vector<std::size_t> chosen;
  for (auto piv : rr.pivot_cols) chosen.push_back(piv);
  out.basis = aug.columns(chosen);
  for (std::size_t j = 0; j < chosen.size(); ++j)
    if (chosen[j] >= m.cols()) out.complement.push_back(j);
  return out;
}

}  // namespace pixcat

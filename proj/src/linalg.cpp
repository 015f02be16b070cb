#include "isotori/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace isotori {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMat::row(std::size_t r) const {
  RatVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

RatMat RatMat::transposed() const {
  RatMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t c = 0; c < b.cols(); ++c)
        out(r, c) += a(r, k) * b(k, c);
  return out;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  RatVec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

// Row echelon form in place; returns pivot columns. First nonzero entry in
// the column (scanning rows top-down) is the pivot, so the reduction is
// reproducible.
std::vector<std::size_t> echelonize(RatMat& m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(sel, c), m(pivot_row, c));
    }
    const Rat pivot = m(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rat factor = m(r, col) / pivot;
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(pivot_row, c);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const RatMat& m) {
  RatMat work = m;
  return echelonize(work).size();
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = a.rows(), l = a.cols();
  RatMat aug(n, l + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < l; ++c) aug(r, c) = a(r, c);
    aug(r, l) = b[r];
  }
  const auto pivot_cols = echelonize(aug);
  // A pivot in the augmented column means no solution.
  if (!pivot_cols.empty() && pivot_cols.back() == l) return std::nullopt;

  RatVec x(l);  // free variables stay zero
  for (std::size_t i = pivot_cols.size(); i-- > 0;) {
    const std::size_t col = pivot_cols[i];
    Rat rhs = aug(i, l);
    for (std::size_t c = col + 1; c < l; ++c) rhs -= aug(i, c) * x[c];
    x[col] = rhs / aug(i, col);
  }
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && aug(sel, col) == 0) ++sel;
    if (sel == n) return std::nullopt;
    if (sel != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(sel, c), aug(col, c));
    const Rat pivot = aug(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      const Rat factor = aug(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= factor * aug(col, c);
    }
  }
  RatMat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace isotori
